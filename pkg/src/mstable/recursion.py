"""The level-m recursion engine: string, dilaton and reduction steps.

Every number is reachable from the one-point value 1/24 by three moves:

* string step: append a marked point with exponent 0; the value is the sum
  of the symbols with one exponent lowered, plus a correction summed over
  partitions of the old points into m blocks;
* dilaton step: append a marked point with exponent 1; the value is n times
  the base symbol plus the same kind of correction;
* reduction step: raise the stability level from m to m+1 at fixed points;
  the correction is summed over partitions into m+1 blocks.

On the (m+1)-point level-m space every top product equals m!/24 (all
cotangent classes coincide there because the rational Picard rank is one);
that is the initial condition closing the recursion.

Each correction term carries the scalar m!/24, a product of block
multinomials with base (block size - 2), and a sign.  The sign is

    (-1) ** (sum of deficiencies + k(S) - 1 + parity offset)

with offset 0 for reduction and 1 for string/dilaton.  The ``k(S) - 1``
term is the orientation of the fiber integral over the exceptional
projective bundle: the quotient-ring presentation uses the dual of the
negative tautological generator, whose (k-1)-st power integrates to
(-1)**(k-1) along the P^(k-1) fibers.  Dropping it is invisible whenever
k(S) = 1 but breaks every symbol whose corrections involve two or more
big blocks (the reference table pins this down, e.g. the level-3 value of
tau_0^4 tau_5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .combinatorics import iter_m_partitions, multinomial
from .core import IntersectionSymbol, canonicalize

__all__ = [
    "Strategy",
    "PREFER_STRING",
    "PREFER_DILATON",
    "via_reduction",
    "MemoTable",
    "initial_condition",
    "error_sum",
    "string_step",
    "dilaton_step",
    "reduce_step",
    "compute",
]


@dataclass(frozen=True, slots=True)
class Strategy:
    """How :func:`compute` picks its recursion path.

    ``prefer_dilaton`` flips which of the two point-removal steps is tried
    first; all paths return identical values.  When ``from_m`` is set the
    symbol is evaluated at that lower level and lifted by chained reduction
    steps, which exercises the reduction corrections instead.
    """

    prefer_dilaton: bool = False
    from_m: int | None = None


PREFER_STRING = Strategy()
PREFER_DILATON = Strategy(prefer_dilaton=True)


def via_reduction(from_m: int) -> Strategy:
    return Strategy(from_m=from_m)


class MemoTable:
    """Write-once map from canonical symbols to their exact values.

    Values are deterministic, so an entry never changes; a conflicting
    second write raises, which turns any path-dependence bug into a loud
    failure.  Get-or-insert is atomic under the GIL, and recomputing the
    same key concurrently is harmless because the results agree.
    """

    def __init__(self) -> None:
        self._values: dict[IntersectionSymbol, Fraction] = {}

    def __contains__(self, symbol: IntersectionSymbol) -> bool:
        return symbol in self._values

    def __len__(self) -> int:
        return len(self._values)

    def get(self, symbol: IntersectionSymbol) -> Fraction:
        return self._values[symbol]

    def put(self, symbol: IntersectionSymbol, value: Fraction) -> None:
        existing = self._values.setdefault(symbol, value)
        if existing != value:
            raise ValueError(
                f"memo conflict for {symbol}: {existing} vs {value}"
            )

    def items(self) -> Iterator[tuple[IntersectionSymbol, Fraction]]:
        return iter(self._values.items())


def initial_condition(m: int) -> Fraction:
    """Every top product on the (m+1)-point level-m space: m!/24 exactly."""
    if m < 0:
        raise ValueError("invalid argument: m must be >= 0")
    return Fraction(factorial(m), 24)


def error_sum(exponents: Sequence[int], parts: int, parity_offset: int) -> int:
    """Signed sum over partitions of the points into ``parts`` blocks.

    Each partition contributes the product over its big blocks of
    multinomial(|S_j| - 2, exponents in S_j), with the sign described in
    the module docstring; blocks with negative deficiency vanish through
    the multinomial.  The scalar prefactor m!/24 is applied by callers.
    The sum is invariant under permuting the exponents.
    """
    if parts < 1:
        raise ValueError("invalid argument: parts must be >= 1")
    if parity_offset not in (0, 1):
        raise ValueError("invalid argument: parity offset must be 0 or 1")
    if any(d < 0 for d in exponents):
        raise ValueError("invalid argument: negative exponent")
    if len(exponents) < parts:
        raise ValueError("invalid argument: need at least `parts` points")
    return _error_sum(tuple(sorted(exponents, reverse=True)), parts, parity_offset)


@lru_cache(maxsize=None)
def _error_sum(exponents: tuple[int, ...], parts: int, parity_offset: int) -> int:
    total = 0
    for partition in iter_m_partitions(len(exponents), parts):
        term = 1
        parity = parity_offset
        k = partition.k
        for block in partition.blocks[:k]:
            block_d = [exponents[i - 1] for i in block]
            coeff = multinomial(len(block) - 2, block_d)
            if coeff == 0:
                term = 0
                break
            term *= coeff
            parity += len(block) - 2 - sum(block_d)
        if term == 0:
            continue
        if k >= 1:
            parity += k - 1
        total += term if parity % 2 == 0 else -term
    return total


def _validate_base(base_d: Sequence[int], m: int, target_sum: int) -> tuple[int, ...]:
    base = tuple(base_d)
    if m < 0:
        raise ValueError("invalid argument: m must be >= 0")
    if any(d < 0 for d in base):
        raise ValueError("invalid argument: negative exponent")
    if len(base) <= m:
        raise ValueError(
            f"stability violation: need n > m, got n={len(base)}, m={m}"
        )
    if sum(base) != target_sum:
        raise ValueError(
            f"not top-dimensional: exponents must sum to {target_sum}, "
            f"got {sum(base)}"
        )
    return base


def string_step(base_d: Sequence[int], m: int, memo: MemoTable | None = None) -> Fraction:
    """Value of the symbol (base_d, 0) at level m, via the string move.

    ``base_d`` has n points with exponents summing to n+1.  Summands whose
    exponent would drop below zero are omitted.  At m = 0 there are no
    partitions to sum over and this is the classical string equation.
    """
    base = _validate_base(base_d, m, len(base_d) + 1)
    if memo is None:
        memo = MemoTable()
    total = Fraction(0)
    for j, d in enumerate(base):
        if d == 0:
            continue
        lowered = base[:j] + (d - 1,) + base[j + 1 :]
        total += compute(canonicalize(lowered, m), memo=memo)
    if m > 0:
        total += initial_condition(m) * error_sum(base, m, 1)
    return total


def dilaton_step(base_d: Sequence[int], m: int, memo: MemoTable | None = None) -> Fraction:
    """Value of the symbol (base_d, 1) at level m, via the dilaton move.

    ``base_d`` has n points with exponents summing to n; the leading term
    is n times the base symbol's value.
    """
    base = _validate_base(base_d, m, len(base_d))
    if memo is None:
        memo = MemoTable()
    total = len(base) * compute(canonicalize(base, m), memo=memo)
    if m > 0:
        total += initial_condition(m) * error_sum(base, m, 1)
    return total


def reduce_step(symbol: IntersectionSymbol, memo: MemoTable | None = None) -> Fraction:
    """Value of the same exponents one stability level up, at m+1."""
    if symbol.n <= symbol.m + 1:
        raise ValueError(
            "stability violation at target level: need n > m+1, "
            f"got n={symbol.n}, m={symbol.m}"
        )
    base = compute(symbol, memo=memo)
    return base + initial_condition(symbol.m) * error_sum(
        symbol.exponents, symbol.m + 1, 0
    )


def compute(
    symbol: IntersectionSymbol,
    strategy: Strategy = PREFER_STRING,
    memo: MemoTable | None = None,
) -> Fraction:
    """Memoized driver returning the exact value of a canonical symbol.

    With n points and exponents summing to n, some exponent is 0 or 1 by
    pigeonhole, so a string or dilaton step always applies until the
    initial condition n = m+1 is reached.  A ``via_reduction`` strategy
    instead evaluates at the lower level and lifts through reduction
    steps; every strategy returns the same value.
    """
    if memo is None:
        memo = MemoTable()
    if strategy.from_m is not None:
        start = strategy.from_m
        if not 0 <= start < symbol.m:
            raise ValueError(
                "invalid strategy: reduction start must satisfy 0 <= from_m < m"
            )
        value = compute(
            IntersectionSymbol(start, symbol.exponents),
            Strategy(prefer_dilaton=strategy.prefer_dilaton),
            memo,
        )
        for level in range(start, symbol.m):
            value += initial_condition(level) * error_sum(
                symbol.exponents, level + 1, 0
            )
        return value
    _fill(symbol, strategy.prefer_dilaton, memo)
    return memo.get(symbol)


def _choose_slot(symbol: IntersectionSymbol, prefer_dilaton: bool) -> tuple[tuple[int, ...], bool]:
    """Pick the slot to remove; returns (base exponents, used dilaton).

    Deterministic: the last zero (resp. last one) in the sorted vector is
    dropped; by symmetry any slot of the same exponent gives equal values.
    """
    exps = symbol.exponents
    has_zero = exps[-1] == 0
    has_one = 1 in exps
    use_dilaton = (prefer_dilaton and has_one) or not has_zero
    if use_dilaton:
        last_one = max(i for i, d in enumerate(exps) if d == 1)
        return exps[:last_one] + exps[last_one + 1 :], True
    return exps[:-1], False


def _fill(root: IntersectionSymbol, prefer_dilaton: bool, memo: MemoTable) -> None:
    # Worklist evaluation: children are pushed until resolvable, so the
    # Python stack depth stays flat no matter how deep the recursion is.
    stack = [root]
    while stack:
        symbol = stack[-1]
        if symbol in memo:
            stack.pop()
            continue
        if symbol.n == symbol.m + 1:
            memo.put(symbol, initial_condition(symbol.m))
            stack.pop()
            continue
        base, use_dilaton = _choose_slot(symbol, prefer_dilaton)
        if use_dilaton:
            children = [canonicalize(base, symbol.m)]
        else:
            children = [
                canonicalize(base[:j] + (d - 1,) + base[j + 1 :], symbol.m)
                for j, d in enumerate(base)
                if d > 0
            ]
        pending = [child for child in children if child not in memo]
        if pending:
            stack.extend(pending)
            continue
        if use_dilaton:
            value = dilaton_step(base, symbol.m, memo)
        else:
            value = string_step(base, symbol.m, memo)
        memo.put(symbol, value)
        stack.pop()
