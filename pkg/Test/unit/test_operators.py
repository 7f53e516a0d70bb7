import pytest
from hypothesis import given, settings, strategies as st

from Core.operators import (check_power_monotonicity, downset, is_product_closed, power,
                            principal_ideal, restrict, sandwich)
from Utils.errors import NotProductClosed
from Utils.model import Side


def test_downset_examples(ch3, lz2, t1):
    assert downset(ch3, {2}) == {0, 1, 2}
    assert downset(ch3, {1}) == {0, 1}
    assert downset(ch3, set()) == frozenset()
    assert downset(lz2, {0}) == {0}
    assert downset(t1, {0}) == {0}


def test_principal_ideals(lz2, ch3):
    assert principal_ideal(lz2, 0, Side.LEFT) == {0, 1}
    assert principal_ideal(lz2, 0, Side.RIGHT) == {0}
    assert principal_ideal(lz2, 0, Side.TWO_SIDED) == {0, 1}
    assert principal_ideal(ch3, 1, Side.LEFT) == {0, 1}
    assert principal_ideal(ch3, 2, Side.RIGHT) == {0, 1, 2}


def test_sandwich_examples(lz2, ch3, t1):
    assert sandwich(lz2, 0, 1) == {0}
    assert sandwich(ch3, 2, 2) == {0, 1, 2}
    assert sandwich(ch3, 1, 2) == {0, 1}
    assert sandwich(t1, 0, 0) == {0}


def test_power_monotonicity(sat3, ch3, z2):
    assert check_power_monotonicity(sat3).holds
    assert check_power_monotonicity(ch3).holds
    v = check_power_monotonicity(z2)
    assert not v.holds
    assert v.counterexample == (1, 1, 2)


def test_power(sat3, z2):
    assert power(sat3, 1, 1) == 1
    assert power(sat3, 1, 2) == 2
    assert power(z2, 1, 2) == 0
    assert power(z2, 1, 3) == 1


def test_restrict(ch3):
    sub = restrict(ch3, {1, 2})
    assert sub.table.tolist() == [[0, 0], [0, 1]]
    assert sub.le(0, 1)
    assert sub.labels == ("1", "2")


def test_restrict_rejects_open_subsets(z2):
    with pytest.raises(NotProductClosed) as e:
        restrict(z2, {1})
    assert e.value.witness == (1, 1)


subsets = st.frozensets(st.integers(0, 3), max_size=4)


@settings(max_examples=50, deadline=None)
@given(H=subsets, K=subsets)
def test_downset_is_a_closure(fixtures, H, K):
    for S in fixtures:
        h = frozenset(x for x in H if x < S.n)
        k = h | frozenset(x for x in K if x < S.n)
        closed = downset(S, h)
        assert h <= closed
        assert closed <= downset(S, k)
        assert downset(S, closed) == closed


def test_principal_ideal_contains_its_generator(fixtures):
    for S in fixtures:
        for a in S.elements:
            for side in Side:
                assert a in principal_ideal(S, a, side)


def test_sandwich_is_product_closed(fixtures):
    for S in fixtures:
        for a in S.elements:
            for b in S.elements:
                assert is_product_closed(S, sandwich(S, a, b))
