"""Multinomials with the vanishing convention, m-partitions, deficiencies.

The multinomial here carries an implicit remainder slot: ``multinomial(t,
parts)`` is t! / (prod parts_i! * (t - sum parts)!) when the parts fit and
exactly 0 when they exceed t.  That vanishing is what kills recursion error
terms with a negative deficiency, so it must not be "fixed" into an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "multinomial",
    "stirling2",
    "SetPartition",
    "iter_m_partitions",
    "deficiencies",
]


def multinomial(top: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient with remainder slot, zero when parts overflow.

    Values grow past 64 bits quickly; Python ints keep this exact.
    """
    if top < 0 or any(p < 0 for p in parts):
        raise ValueError("invalid argument: multinomial needs nonnegative inputs")
    total = sum(parts)
    if total > top:
        return 0
    out = factorial(top)
    for p in parts:
        out //= factorial(p)
    return out // factorial(top - total)


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind, S(n,m) = m*S(n-1,m) + S(n-1,m-1)."""
    if n < 0 or m < 0:
        raise ValueError("invalid argument: stirling2 needs nonnegative inputs")
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0 or m > n:
        return 0
    return m * stirling2(n - 1, m) + stirling2(n - 1, m - 1)


@dataclass(frozen=True, slots=True)
class SetPartition:
    """A partition of {1..n} with big blocks (size >= 2) listed first.

    The first ``k`` blocks have size >= 2 and the remaining blocks are
    singletons; within each group blocks are ordered by smallest element.
    Every partition produced by :func:`iter_m_partitions` is in this form,
    which makes enumeration order reproducible.
    """

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("invalid partition: empty block")
            if tuple(sorted(block)) != block:
                raise ValueError("invalid partition: block not sorted")
            for element in block:
                if not 1 <= element <= self.n:
                    raise ValueError("invalid partition: element out of range")
                if element in seen:
                    raise ValueError("invalid partition: blocks not disjoint")
                seen.add(element)
        if len(seen) != self.n:
            raise ValueError("invalid partition: blocks do not cover {1..n}")
        k = self.k
        big, small = self.blocks[:k], self.blocks[k:]
        if any(len(b) < 2 for b in big) or any(len(b) != 1 for b in small):
            raise ValueError("invalid partition: big blocks must come first")
        for group in (big, small):
            mins = [b[0] for b in group]
            if mins != sorted(mins):
                raise ValueError("invalid partition: blocks not in canonical order")

    @property
    def k(self) -> int:
        """Index of the partition: the number of blocks of size >= 2."""
        return sum(1 for block in self.blocks if len(block) >= 2)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "SetPartition":
        """Build the canonical form from blocks in any order."""
        cleaned = [tuple(sorted(block)) for block in blocks]
        big = sorted((b for b in cleaned if len(b) >= 2), key=lambda b: b[0])
        small = sorted((b for b in cleaned if len(b) == 1), key=lambda b: b[0])
        return cls(tuple(big) + tuple(small), n)


def iter_m_partitions(n: int, m: int) -> Iterator[SetPartition]:
    """Yield every partition of {1..n} into exactly m nonempty blocks once.

    Enumeration follows restricted-growth strings in lexicographic order
    (element i is assigned the block label rgs[i]); each partition is then
    reordered into the canonical big-blocks-first form.  Out-of-range m
    yields nothing, matching the empty set of 0-partitions.
    """
    if m < 1 or m > n:
        return
    labels = [0] * n

    def emit() -> SetPartition:
        blocks: list[list[int]] = [[] for _ in range(m)]
        for i, label in enumerate(labels):
            blocks[label].append(i + 1)
        return SetPartition.from_blocks(blocks, n)

    def extend(i: int, used: int) -> Iterator[SetPartition]:
        if i == n:
            if used == m:
                yield emit()
            return
        top = min(used, m - 1)
        for label in range(top + 1):
            new_used = used + 1 if label == used else used
            # the remaining slots must still be able to introduce m labels
            if m - new_used <= n - i - 1:
                labels[i] = label
                yield from extend(i + 1, new_used)

    yield from extend(0, 0)


def deficiencies(partition: SetPartition, exponents: Sequence[int]) -> list[int]:
    """Per-big-block deficiencies e_j = |S_j| - 2 - sum of exponents in S_j.

    Only the k big blocks produce entries.  A negative deficiency means the
    block's multinomial factor vanishes; that vanishing is enforced by
    :func:`multinomial`, not here.
    """
    if len(exponents) != partition.n:
        raise ValueError("invalid argument: exponent list must have length n")
    if any(d < 0 for d in exponents):
        raise ValueError("invalid argument: negative exponent")
    return [
        len(block) - 2 - sum(exponents[i - 1] for i in block)
        for block in partition.blocks[: partition.k]
    ]
