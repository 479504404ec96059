"""
cqc command-line entry point

Usage:
    python main.py bounds state.json --bases pauli-xy
    python main.py search --dims 2x2 3x3 --samples 1000 --seed 7 --out search.csv
"""
from src.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
