"""Exact operators on symmetric functions over Q(q,t) and rectangular
Catalan combinatorics, with a conjecture-verification harness."""

__version__ = "0.1.0"
