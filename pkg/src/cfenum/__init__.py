"""Exact enumeration of permutation, set-partition, and matching statistics,
with continued-fraction expansions and bijections to labeled Motzkin paths."""

__version__ = "0.1.0"
