"""Exact counts of planar tight maps, their word and forest codings, and a
brute-force map enumerator to check them against."""

__version__ = "0.1.0"
