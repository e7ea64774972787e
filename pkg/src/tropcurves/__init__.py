"""Exact combinatorics of floor-decomposed tropical plane curves.

Everything is computed in exact rational arithmetic (`fractions.Fraction`);
there is no floating point anywhere in the library.
"""

from .errors import TropError

__all__ = ["TropError"]
__version__ = "0.1.0"
