"""
Command-line front end
"""
from src.cli.commands import main

__all__ = ["main"]
