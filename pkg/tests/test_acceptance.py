"""Acceptance suite: one test per criterion, exact tolerances, one line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
pass lines.
"""

import os
import time
from fractions import Fraction

from mstable.checks import run_lemma_suite, run_oracle_suite, run_path_suite
from mstable.combinatorics import iter_m_partitions, stirling2
from mstable.core import IntersectionSymbol
from mstable.genus_zero import genus_zero_number, genus_zero_oracle
from mstable.recursion import (
    MemoTable,
    compute,
    initial_condition,
    via_reduction,
)
from mstable.tau_text import (
    CacheRecord,
    canonical_exponent_vectors,
    format_table,
    format_tau_word,
    load_cache,
    parse_tau_word,
    save_cache,
)
from mstable.core import symbol_to_tau, tau_to_symbol

from table1 import TABLE_ENTRIES, levels_for

GOLDEN_PATH = os.path.join(os.path.dirname(__file__), "data", "table_max6.tsv")


def _report(number: int, name: str) -> None:
    print(f"ACCEPTANCE {number:2d} ({name}): PASS")


def test_criterion_01_reference_table():
    start = time.time()
    memo = MemoTable()
    assert len(TABLE_ENTRIES) == 97
    for label, n, word, scaled in TABLE_ENTRIES:
        for m in levels_for(label, n):
            symbol = tau_to_symbol(parse_tau_word(word), m)
            value = compute(symbol, memo=memo)
            assert value * 24 == scaled, (label, n, word, value)
    with open(GOLDEN_PATH, encoding="utf-8") as handle:
        golden = handle.read()
    assert format_table(6, scale24=True, fmt="tsv", memo=memo) == golden
    elapsed = time.time() - start
    assert elapsed < 5, f"table reproduction took {elapsed:.1f}s"
    _report(1, "reference table, 97 entries + golden tsv, exact")


def test_criterion_02_spot_values():
    cases = [
        (0, "t1", Fraction(1, 24)),
        (2, "t0^3 t4", Fraction(0)),
        (3, "t0^4 t5", Fraction(-1, 2)),
        (4, "t0^5 t6", Fraction(-5)),
        (2, "t0^2 t1 t3", Fraction(1, 6)),
    ]
    for m, word, expected in cases:
        symbol = tau_to_symbol(parse_tau_word(word), m)
        assert compute(symbol) == expected, (m, word)
    _report(2, "spot values, exact")


def test_criterion_03_initial_condition_via_reduction():
    for m in range(1, 8):
        exponents = (m + 1,) + (0,) * m
        value = compute(
            IntersectionSymbol(m, exponents), via_reduction(0), MemoTable()
        )
        assert value == initial_condition(m) == Fraction(1, 24) * _factorial(m)
    _report(3, "m!/24 closed form via chained reduction, m <= 7")


def _factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def test_criterion_04_path_independence():
    ok, detail = run_path_suite(7)
    assert ok, detail
    _report(4, f"path independence n <= 7 ({detail})")


def test_criterion_05_level_one_equals_level_zero():
    for n in range(2, 8):
        for vector in canonical_exponent_vectors(n):
            v0 = compute(IntersectionSymbol(0, vector), memo=MemoTable())
            v1 = compute(IntersectionSymbol(1, vector), memo=MemoTable())
            assert v0 == v1, vector
    _report(5, "level 1 coincides with level 0, n <= 7, exact")


def test_criterion_06_oracle_equivalence():
    start = time.time()
    ok, detail = run_oracle_suite(max_total=7, max_k=3, max_m=5)
    elapsed = time.time() - start
    assert ok, detail
    assert elapsed < 60, f"oracle suite took {elapsed:.1f}s"
    _report(6, f"symbolic vs closed error terms ({detail}, {elapsed:.1f}s)")


def test_criterion_07_lemma_suites():
    ok, detail = run_lemma_suite(
        max_d=8, max_k=5, coeff_e_bound=4, coeff_k_max=4, coeff_m_max=5, alt_max_d=12
    )
    assert ok, detail
    _report(7, f"combinatorial identity suites ({detail})")


def test_criterion_08_genus_zero_routes_agree():
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    checked = 0
    for n in range(3, 10):
        for d in compositions(n - 3, n):
            assert genus_zero_number(d) == genus_zero_oracle(d), d
            checked += 1
    _report(8, f"genus-zero closed form vs string oracle, n <= 9 ({checked} vectors)")


def test_criterion_09_parity_identity():
    # For any partition into p blocks with k big blocks carrying exponent
    # mass s over b block elements: sum of deficiencies = (b - 2k) - s.
    # Read as a level-(p-1) reduction partition that equals
    # n - (p-1) - k - s - 1; read as a level-p string/dilaton partition it
    # exceeds n - p - k - s - 1 by exactly one.
    checked = 0
    for n in range(1, 9):
        vectors = list(canonical_exponent_vectors(n))
        for parts in range(1, n + 1):
            for partition in iter_m_partitions(n, parts):
                k = partition.k
                big = partition.blocks[:k]
                for d in vectors:
                    mass = sum(d[i - 1] for block in big for i in block)
                    deficiency_sum = sum(len(b) - 2 for b in big) - mass
                    star_reduction = n - (parts - 1) - k - mass - 1
                    star_string = n - parts - k - mass - 1
                    assert deficiency_sum == star_reduction
                    assert deficiency_sum == star_string + 1
                    checked += 1
    _report(9, f"deficiency parity identity, n <= 8 ({checked} cases)")


def test_criterion_10_enumeration_and_round_trips(tmp_path):
    for n in range(1, 11):
        for m in range(0, n + 2):
            count = sum(1 for _ in iter_m_partitions(n, m))
            expected = stirling2(n, m) if 1 <= m <= n else 0
            assert count == expected, (n, m)

    words = 0
    for n in range(1, 8):
        for vector in canonical_exponent_vectors(n):
            word = symbol_to_tau(IntersectionSymbol(0, vector))
            assert parse_tau_word(format_tau_word(word)) == word
            words += 1

    records = []
    memo = MemoTable()
    for n in range(1, 6):
        for vector in canonical_exponent_vectors(n):
            for m in range(n):
                value = compute(IntersectionSymbol(m, vector), memo=memo)
                records.append(CacheRecord(m, vector, value))
    path = tmp_path / "cache.txt"
    save_cache(records, str(path))
    assert load_cache(str(path)) == records
    _report(
        10,
        f"partition counts n <= 10, {words} word round trips, "
        f"{len(records)} cache records round trip",
    )
