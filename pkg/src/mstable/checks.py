"""Reusable verification suites behind the ``verify`` CLI subcommand.

Each suite returns ``(passed, summary)``; summaries include the number of
identities checked so a green run is auditable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator

from .chow import (
    BlockShape,
    check_alternating_binomial_sum,
    check_eta_power_expansion,
    check_shifted_coefficient_identity,
    error_term_closed,
    error_term_symbolic,
)
from .core import IntersectionSymbol
from .recursion import (
    MemoTable,
    PREFER_DILATON,
    PREFER_STRING,
    compute,
    via_reduction,
)
from .tau_text import canonical_exponent_vectors

__all__ = [
    "run_lemma_suite",
    "run_oracle_suite",
    "run_path_suite",
    "iter_oracle_cases",
]


def run_lemma_suite(
    max_d: int = 8,
    max_k: int = 5,
    coeff_e_bound: int = 4,
    coeff_k_max: int = 4,
    coeff_m_max: int = 5,
    alt_max_d: int = 12,
) -> tuple[bool, str]:
    """Exhaustive runs of the three combinatorial identities."""
    checked = 0
    for d in range(1, max_d + 1):
        for k in range(1, max_k + 1):
            if not check_eta_power_expansion(d, k):
                return False, f"eta power expansion failed at d={d}, k={k}"
            checked += 1
    for k in range(1, coeff_k_max + 1):
        for e in product(range(coeff_e_bound + 1), repeat=k):
            for m in range(coeff_m_max + 1):
                if not check_shifted_coefficient_identity(e, m):
                    return False, f"coefficient identity failed at e={e}, m={m}"
                checked += 1
    for d in range(2, alt_max_d + 1):
        for m in range(1, d):
            if not check_alternating_binomial_sum(d, m):
                return False, f"alternating sum failed at d={d}, m={m}"
            checked += 1
    return True, f"{checked} identities hold"


def _block_vectors(size: int) -> Iterator[tuple[int, ...]]:
    # All exponent vectors with sum up to the block size: covers every
    # nonvanishing case (which needs sum <= size-2) plus a vanishing margin.
    yield from (
        v for v in product(range(size + 1), repeat=size) if sum(v) <= size
    )


def _size_configs(max_total: int, max_k: int) -> Iterator[tuple[int, ...]]:
    def grow(prefix: tuple[int, ...], minimum: int, budget: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        if len(prefix) == max_k:
            return
        for size in range(minimum, budget + 1):
            yield from grow(prefix + (size,), size, budget - size)

    yield from grow((), 2, max_total)


def iter_oracle_cases(
    max_total: int = 7, max_k: int = 3, max_m: int = 5
) -> Iterator[tuple[str, BlockShape, int]]:
    """Every (variant, shape, off-block mass) in the verification grid.

    Block exponent sums are capped at the block size and m at ``max_m``;
    the off-block mass is then the unique value satisfying the variant's
    dimension bookkeeping.
    """
    c0 = Fraction(1)
    for sizes in _size_configs(max_total, max_k):
        k = len(sizes)
        vector_choices = [list(_block_vectors(size)) for size in sizes]
        for exponents in product(*vector_choices):
            block_mass = sum(sum(v) for v in exponents)
            for variant in ("a", "b", "c"):
                min_m = k - 1 if variant == "a" else k
                for m in range(min_m, max_m + 1):
                    shape = BlockShape(m, sizes, exponents, c0)
                    if variant == "a":
                        n = sum(sizes) + m - k + 1
                        d = n - block_mass
                    elif variant == "b":
                        n = sum(sizes) + m - k
                        d = n + 1 - block_mass
                    else:
                        n = sum(sizes) + m - k
                        d = n - block_mass
                    if d < 0:
                        continue
                    yield variant, shape, d


def run_oracle_suite(
    max_total: int = 7, max_k: int = 3, max_m: int = 5
) -> tuple[bool, str]:
    """Symbolic degree equals the closed form on the whole grid."""
    checked = 0
    for variant, shape, d in iter_oracle_cases(max_total, max_k, max_m):
        symbolic = error_term_symbolic(variant, shape, d)
        closed = error_term_closed(variant, shape, d)
        if symbolic != closed:
            return False, (
                f"oracle disagreement: variant={variant} shape={shape} d={d}: "
                f"{symbolic} vs {closed}"
            )
        checked += 1
    return True, f"{checked} error terms agree"


def run_path_suite(max_n: int = 6) -> tuple[bool, str]:
    """All strategies agree; level 1 coincides with level 0."""
    checked = 0
    for n in range(1, max_n + 1):
        for vector in canonical_exponent_vectors(n):
            values: dict[int, Fraction] = {}
            for m in range(n):
                symbol = IntersectionSymbol(m, vector)
                routes = [compute(symbol, PREFER_STRING, MemoTable())]
                routes.append(compute(symbol, PREFER_DILATON, MemoTable()))
                routes.extend(
                    compute(symbol, via_reduction(f), MemoTable())
                    for f in range(m)
                )
                if any(v != routes[0] for v in routes[1:]):
                    return False, f"paths disagree on m={m}, d={vector}: {routes}"
                values[m] = routes[0]
                checked += len(routes)
            if n > 1 and values[0] != values[1]:
                return False, f"level 0/1 mismatch on d={vector}"
    return True, f"{checked} evaluations agree across paths"
