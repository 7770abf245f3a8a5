"""Domain types shared by every module: symbols, tau-words, canonical forms.

All values in the package are exact.  Rational numbers are
``fractions.Fraction`` (arbitrary precision, always reduced, denominator
positive); integers are plain Python ints.  No floating point arithmetic
occurs anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "IntersectionSymbol",
    "TauWord",
    "canonicalize",
    "tau_to_symbol",
    "symbol_to_tau",
]


@dataclass(frozen=True, slots=True)
class IntersectionSymbol:
    """Canonical name of one number <psi_1^{d_1} ... psi_n^{d_n}> at level m.

    The value depends only on the multiset of exponents (relabelling marked
    points is a symmetry), so the exponent vector is stored sorted
    non-increasing and serves as the unique memo key.  A top-dimensional
    product on an n-pointed level-m space forces ``sum(exponents) == n``,
    and the space exists only for ``n > m``.
    """

    m: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("invalid symbol: m must be >= 0")
        if not self.exponents:
            raise ValueError("invalid symbol: empty exponent vector")
        if any(d < 0 for d in self.exponents):
            raise ValueError("invalid symbol: negative exponent")
        n = len(self.exponents)
        if n <= self.m:
            raise ValueError(
                f"stability violation: need n > m, got n={n}, m={self.m}"
            )
        if sum(self.exponents) != n:
            raise ValueError(
                f"not top-dimensional: exponents must sum to n={n}, "
                f"got {sum(self.exponents)}"
            )
        if any(a < b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("invalid symbol: exponents not sorted non-increasing")

    @property
    def n(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True, slots=True)
class TauWord:
    """Multiset of tau-indices, e.g. tau_0^3 tau_4 as ((0, 3), (4, 1)).

    ``counts`` holds (index, multiplicity) pairs with multiplicities >= 1,
    sorted by index.  The word names an n-point symbol with n = total
    multiplicity; it is top-dimensional iff the weighted sum of indices
    equals n.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for index, mult in self.counts:
            if index < 0:
                raise ValueError("invalid tau word: negative index")
            if mult < 1:
                raise ValueError("invalid tau word: multiplicity must be >= 1")
            if index in seen:
                raise ValueError("invalid tau word: repeated index")
            seen.add(index)
        if tuple(sorted(i for i, _ in self.counts)) != tuple(i for i, _ in self.counts):
            raise ValueError("invalid tau word: indices not sorted")
        if not self.counts:
            raise ValueError("invalid tau word: empty")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "TauWord":
        return cls(tuple(sorted(counts.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def n(self) -> int:
        """Number of marked points the word addresses."""
        return sum(mult for _, mult in self.counts)

    @property
    def weight(self) -> int:
        """Total psi-degree, sum of index times multiplicity."""
        return sum(index * mult for index, mult in self.counts)


def canonicalize(raw_exponents: Iterable[int], m: int) -> IntersectionSymbol:
    """Sort an exponent list into the canonical symbol at level m.

    Two inputs differing by a permutation yield identical symbols.
    """
    exponents = tuple(sorted(raw_exponents, reverse=True))
    return IntersectionSymbol(m, exponents)


def tau_to_symbol(word: TauWord, m: int) -> IntersectionSymbol:
    """Expand a tau-word into its canonical symbol at level m.

    The exponent list contains each index j repeated by its multiplicity;
    top dimension requires the word's weight to equal its point count.
    """
    exponents = [index for index, mult in word.counts for _ in range(mult)]
    return canonicalize(exponents, m)


def symbol_to_tau(symbol: IntersectionSymbol) -> TauWord:
    """Inverse of :func:`tau_to_symbol`: collect exponent multiplicities."""
    return TauWord.from_counts(Counter(symbol.exponents))
