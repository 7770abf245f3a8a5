"""Genus-zero psi intersection numbers, closed form and string-equation oracle.

On the n-pointed genus-zero space the top numbers have the closed form
multinomial(n-3; d_1,...,d_n).  The same numbers also follow from the string
equation alone, recursing down to the three-point space (a single point, so
the base value is 1).  Both routes are exposed so each can check the other.

Non-top-dimensional inputs return 0 rather than raising: the degree
functional of the symbolic oracle relies on wrong-dimension monomials
vanishing silently.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import multinomial

__all__ = ["genus_zero_number", "genus_zero_oracle"]


def _validate(exponents: Sequence[int]) -> int:
    n = len(exponents)
    if n < 3:
        raise ValueError("invalid moduli space: genus zero needs at least 3 points")
    if any(d < 0 for d in exponents):
        raise ValueError("invalid argument: negative exponent")
    return n


def genus_zero_number(exponents: Sequence[int]) -> Fraction:
    """Closed form: multinomial(n-3; d) when sum(d) == n-3, else 0."""
    n = _validate(exponents)
    if sum(exponents) != n - 3:
        return Fraction(0)
    return Fraction(multinomial(n - 3, exponents))


@lru_cache(maxsize=None)
def _string_recurse(exponents: tuple[int, ...]) -> int:
    # exponents sorted non-increasing, top-dimensional: sum == n - 3.
    n = len(exponents)
    if n == 3:
        return 1
    # sum(d) = n - 3 < n forces a zero exponent; drop the trailing one.
    base = exponents[:-1]
    total = 0
    for j, d in enumerate(base):
        if d == 0:
            continue
        lowered = base[:j] + (d - 1,) + base[j + 1 :]
        total += _string_recurse(tuple(sorted(lowered, reverse=True)))
    return total


def genus_zero_oracle(exponents: Sequence[int]) -> Fraction:
    """Same numbers via the string equation, independent of the closed form."""
    n = _validate(exponents)
    if sum(exponents) != n - 3:
        return Fraction(0)
    return Fraction(_string_recurse(tuple(sorted(exponents, reverse=True))))
