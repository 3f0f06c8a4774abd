"""Integer helpers with the zero conventions used throughout.

``1/n! = 0`` for ``n < 0`` and ``binom(m, j) = 0`` unless ``0 <= j <= m``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def binom(m: int, j: int) -> int:
    if m < 0 or j < 0 or j > m:
        return 0
    return comb(m, j)


@lru_cache(maxsize=None)
def inv_factorial(n: int) -> Fraction:
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def falling_factorial_ratio(g: int, a: int) -> int:
    """g!/(g-a)!, zero when a > g."""
    if a < 0 or a > g:
        return 0
    return factorial(g) // factorial(g - a)
