from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mstable.genus_zero import genus_zero_number, genus_zero_oracle


def test_known_values():
    assert genus_zero_number((0, 0, 0)) == 1
    assert genus_zero_number((1, 0, 0, 0)) == 1
    assert genus_zero_number((1, 1, 0, 0, 0)) == 2
    assert genus_zero_oracle((0, 0, 0)) == 1
    assert genus_zero_oracle((2, 0, 0, 0, 0)) == 1
    assert genus_zero_oracle((1, 1, 0, 0, 0)) == 2


def test_non_top_dimensional_returns_zero():
    assert genus_zero_number((1, 1, 1)) == 0
    assert genus_zero_oracle((0, 0, 0, 0)) == 0


def test_too_few_points():
    with pytest.raises(ValueError, match="invalid moduli space"):
        genus_zero_number((0, 0))
    with pytest.raises(ValueError, match="invalid moduli space"):
        genus_zero_oracle((0,))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@pytest.mark.parametrize("n", range(3, 8))
def test_closed_form_equals_oracle(n):
    for d in _compositions(n - 3, n):
        closed = genus_zero_number(d)
        recursed = genus_zero_oracle(d)
        assert closed == recursed
        assert closed == int(closed) and closed >= 0


@given(st.integers(4, 8), st.randoms())
def test_permutation_invariance(n, rng):
    base = [0] * n
    remaining = n - 3
    i = 0
    while remaining:
        take = rng.randint(1, remaining)
        base[i] = take
        remaining -= take
        i += 1
    shuffled = list(base)
    rng.shuffle(shuffled)
    assert genus_zero_number(base) == genus_zero_number(shuffled)
    assert genus_zero_oracle(base) == genus_zero_oracle(shuffled)


def test_values_are_fractions():
    assert isinstance(genus_zero_number((1, 0, 0, 0)), Fraction)
    assert isinstance(genus_zero_oracle((1, 0, 0, 0)), Fraction)
