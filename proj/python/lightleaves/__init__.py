"""Exact Coxeter/Bruhat combinatorics: light-leaves indexing data, Gram
determinant factorizations, Jantzen-type sum formulas and a Kazhdan-Lusztig
oracle."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
