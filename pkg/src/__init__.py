"""
CQC toolkit: complementary-quantum correlation bounds, witnesses and searches
"""
__version__ = "0.1.0"
