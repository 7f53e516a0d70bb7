import pytest

from Constructions.builders import cyclic
from Properties.deciders import check, check_all, check_subset_weakly_commutative, holds_at, universal_arity
from Utils.errors import NotProductClosed
from Utils.model import PropertyId

P = PropertyId


def test_chain_is_not_rectangular(ch3):
    v = check(ch3, P.RECTANGULAR)
    assert not v.holds
    assert v.counterexample == (1, 0)
    assert v.witnesses is None


def test_saturated_addition(sat3):
    assert check(sat3, P.T_SIMPLE).holds
    assert check(sat3, P.RIGHT_ZERO).holds
    assert check(sat3, P.H_COMMUTATIVE).holds
    v = check(sat3, P.LEFT_ZERO)
    assert v.holds
    assert v.witnesses[(1, 0)] == (0,)


def test_left_zero_is_not_h_commutative(lz2):
    v = check(lz2, P.H_COMMUTATIVE)
    assert not v.holds
    assert v.counterexample == (0, 1)


def test_left_zero_properties(lz2):
    assert check(lz2, P.LEFT_ZERO).holds
    assert check(lz2, P.BAND).holds
    assert not check(lz2, P.RIGHT_ZERO).holds
    assert check(lz2, P.LEFT_SIMPLE).holds
    assert not check(lz2, P.RIGHT_SIMPLE).holds


def test_trivial_has_everything(t1):
    failing = [p for p, v in check_all(t1).items() if not v.holds]
    assert failing == []


def test_band_and_simple(z2, ch3, sat3):
    v = check(z2, P.BAND)
    assert not v.holds and v.counterexample == (1,)
    assert check(z2, P.SIMPLE).holds
    assert check(sat3, P.SIMPLE).holds
    v = check(ch3, P.SIMPLE)
    assert not v.holds
    assert v.counterexample == (0, 1)


def test_check_all_covers_every_property(ch3):
    assert set(check_all(ch3)) == set(PropertyId)


@pytest.mark.parametrize("p", list(PropertyId))
def test_arity(p):
    assert universal_arity(p) in (1, 2, 3)


def test_h_commutative_agrees_with_weakly_commutative(ordered_corpus):
    for S in ordered_corpus:
        assert check(S, P.H_COMMUTATIVE) == check(S, P.WEAKLY_COMMUTATIVE), S.name


def test_verdicts_recheck_with_plain_loops(ordered_corpus, fixtures):
    for S in fixtures + ordered_corpus[::5]:
        for p, v in check_all(S).items():
            if v.holds:
                for point, w in (v.witnesses or {}).items():
                    assert holds_at(S, p, point) == w, (S.name, p, point)
            else:
                assert len(v.counterexample) == universal_arity(p)
                assert holds_at(S, p, v.counterexample) is None, (S.name, p)


def test_subset_weakly_commutative(ch3):
    v = check_subset_weakly_commutative(ch3, {0, 1, 2})
    assert v.holds
    assert v.witnesses[(2, 2)] == (2,)
    assert v.witnesses[(1, 2)] == (1,)
    assert check_subset_weakly_commutative(ch3, {1, 2}).witnesses[(1, 2)] == (1,)


def test_subset_weakly_commutative_failure(lz2):
    v = check_subset_weakly_commutative(lz2, {0, 1})
    assert not v.holds
    assert v.counterexample == (0, 1)


def test_subset_must_be_a_subsemigroup():
    with pytest.raises(NotProductClosed) as e:
        check_subset_weakly_commutative(cyclic(2), {1})
    assert e.value.witness == (1, 1)
    with pytest.raises(NotProductClosed):
        check_subset_weakly_commutative(cyclic(2), set())


def test_equivalent_rectangular_forms(io_corpus):
    for S in io_corpus:
        rect = check(S, P.RECTANGULAR).holds
        assert check(S, P.RECTANGULAR_SINGLE_WITNESS).holds == rect, S.name
        assert check(S, P.RECTANGULAR_SPLIT).holds == rect, S.name


def test_equivalent_left_regular_forms(io_corpus):
    for S in io_corpus:
        lr = check(S, P.LEFT_REGULAR).holds
        assert check(S, P.LEFT_REGULAR_MIRRORED).holds == lr, S.name
        assert check(S, P.LEFT_REGULAR_TWO_WITNESS).holds == lr, S.name
