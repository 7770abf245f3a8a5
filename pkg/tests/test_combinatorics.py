import pytest
from hypothesis import given, strategies as st

from mstable.combinatorics import (
    SetPartition,
    deficiencies,
    iter_m_partitions,
    multinomial,
    stirling2,
)


def test_multinomial_examples():
    assert multinomial(3, [1, 1, 1]) == 6
    assert multinomial(2, [3, 0]) == 0
    assert multinomial(0, []) == 1


def test_multinomial_rejects_negative():
    with pytest.raises(ValueError, match="invalid argument"):
        multinomial(-1, [0])
    with pytest.raises(ValueError, match="invalid argument"):
        multinomial(3, [-1])


def test_multinomial_exceeds_machine_words():
    assert multinomial(70, [35]) > 2**63


@given(st.integers(0, 12), st.lists(st.integers(0, 6), max_size=5))
def test_multinomial_vanishing_rule(top, parts):
    value = multinomial(top, parts)
    assert (value == 0) == (sum(parts) > top)


def test_stirling2_values():
    assert stirling2(4, 2) == 7
    assert stirling2(6, 3) == 90
    assert all(stirling2(n, n) == 1 for n in range(8))
    assert all(stirling2(n, 0) == 0 for n in range(1, 8))


def test_enumeration_order_n3_m2():
    got = [p.blocks for p in iter_m_partitions(3, 2)]
    assert got == [
        ((1, 2), (3,)),
        ((1, 3), (2,)),
        ((2, 3), (1,)),
    ]


def test_enumeration_empty_cases():
    assert list(iter_m_partitions(3, 0)) == []
    assert list(iter_m_partitions(3, 4)) == []


def _brute_force_partitions(n, m):
    """Independent enumerator: insert elements one at a time."""
    def build(element):
        if element == 0:
            yield []
            return
        for smaller in build(element - 1):
            for i in range(len(smaller)):
                yield smaller[:i] + [smaller[i] | {element}] + smaller[i + 1 :]
            yield smaller + [{element}]

    for candidate in build(n):
        if len(candidate) == m:
            yield frozenset(frozenset(block) for block in candidate)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    for m in range(1, n + 1):
        mine = {
            frozenset(frozenset(block) for block in p.blocks)
            for p in iter_m_partitions(n, m)
        }
        brute = set(_brute_force_partitions(n, m))
        assert mine == brute
        assert len(list(iter_m_partitions(n, m))) == stirling2(n, m)


def test_enumeration_canonical_invariants():
    for n in range(1, 7):
        for m in range(1, n + 1):
            for p in iter_m_partitions(n, m):
                k = p.k
                assert all(len(b) >= 2 for b in p.blocks[:k])
                assert all(len(b) == 1 for b in p.blocks[k:])
                assert [b[0] for b in p.blocks[:k]] == sorted(
                    b[0] for b in p.blocks[:k]
                )


def test_enumeration_deterministic():
    first = [p.blocks for p in iter_m_partitions(6, 3)]
    second = [p.blocks for p in iter_m_partitions(6, 3)]
    assert first == second


def test_deficiencies_examples():
    p = SetPartition.from_blocks([[2, 3, 4], [1]], 4)
    assert deficiencies(p, (4, 0, 0, 0)) == [1]
    assert deficiencies(p, (3, 1, 0, 0)) == [0]
    q = SetPartition.from_blocks([[1, 2], [3]], 3)
    assert deficiencies(q, (2, 1, 0)) == [-3]


def test_deficiencies_length_mismatch():
    p = SetPartition.from_blocks([[1, 2]], 2)
    with pytest.raises(ValueError, match="invalid argument"):
        deficiencies(p, (1,))


def test_set_partition_validation():
    with pytest.raises(ValueError, match="disjoint"):
        SetPartition(((1, 2), (2, 3)), 3)
    with pytest.raises(ValueError, match="cover"):
        SetPartition(((1, 2),), 3)
    with pytest.raises(ValueError, match="big blocks"):
        SetPartition(((3,), (1, 2)), 3)
