import pytest

from Constructions.builders import cyclic
from Core.validator import validate
from Decompose.decomposition import (class_report, classify_decomposition, decompose, headline,
                                     least_csc_decomposition)
from Relations.congruence import all_semilattice_congruences, congruence_kind
from Utils.errors import ClassNotClosed, NotSemilatticeCongruence
from Utils.model import Partition, PropertyId
from Utils.report_printer import hasse_dot

P = PropertyId


@pytest.fixture(scope="module")
def reversed_sl2():
    """ min table with 1 <= 0: the identity is a semilattice congruence but not a complete one """
    return validate({"name": "SL2r", "n": 2, "table": [[0, 0], [0, 1]], "order": [[1, 0]]})


def test_chain(ch3):
    D = least_csc_decomposition(ch3)
    assert D.congruence == Partition.identity(3)
    assert D.quotient_table.tolist() == [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
    assert D.complete
    assert all(c.holds for c in D.condition_checks)
    C = classify_decomposition(ch3, D)
    assert C.headline == "complete semilattice of t-simple idempotent ordered semigroups"
    dot = hasse_dot(D)
    assert "c0 -> c1" in dot
    assert "c1 -> c2" in dot
    assert "c0 -> c2" not in dot


def test_left_zero(lz2):
    D = least_csc_decomposition(lz2)
    assert D.congruence == Partition.universal(2)
    assert D.quotient_table.tolist() == [[0]]
    C = classify_decomposition(lz2, D)
    assert C.headline == "complete semilattice of left zero idempotent ordered semigroups"
    assert P.LEFT_ZERO in C.uniform
    assert P.T_SIMPLE not in C.uniform


def test_chain_with_coarser_partition(ch3):
    D = decompose(ch3, Partition((0, 0, 1)))
    assert D.quotient_table.tolist() == [[0, 0], [0, 1]]
    assert D.quotient_order.tolist() == [[True, True], [False, True]]
    assert D.complete
    C = classify_decomposition(ch3, D)
    assert [r.members for r in C.reports] == [(0, 1), (2,)]
    assert C.headline == "complete semilattice of idempotent ordered semigroups"


def test_incomplete_decomposition(reversed_sl2):
    D = decompose(reversed_sl2, Partition.identity(2))
    assert not D.complete
    assert D.condition_checks[3].witness == (0, 1, 1)
    assert classify_decomposition(reversed_sl2, D).headline == "semilattice of t-simple idempotent ordered semigroups"


def test_rejects_non_semilattice_congruences(ch3, lz2):
    with pytest.raises(NotSemilatticeCongruence) as e:
        decompose(ch3, Partition((0, 1, 0)))
    assert e.value.witness == (1, 0, 2)
    with pytest.raises(NotSemilatticeCongruence) as e:
        decompose(lz2, Partition.identity(2))
    assert e.value.witness == (0, 1)


def test_class_must_be_closed():
    with pytest.raises(ClassNotClosed) as e:
        class_report(cyclic(2), 0, {1})
    assert e.value.witness == (1, 1)


@pytest.mark.parametrize("uniform, complete, expected", [
    ((P.IDEMPOTENT_ORDERED, P.RECTANGULAR), True, "complete semilattice of rectangular idempotent ordered semigroups"),
    ((P.LEFT_SIMPLE, P.RIGHT_SIMPLE), False, "semilattice of left-and-right simple ordered semigroups"),
    ((), False, "semilattice of ordered semigroups"),
])
def test_headline(uniform, complete, expected):
    assert headline(uniform, complete) == expected


def test_downset_condition_matches_completeness(ordered_corpus):
    for S in ordered_corpus[::3]:
        for Q in all_semilattice_congruences(S):
            D = decompose(S, Q)
            assert D.condition_checks[2].holds, S.name
            assert D.complete == congruence_kind(S, Q).complete_semilattice, S.name


def test_least_csc_decomposition_on_corpus(io_corpus):
    for S in io_corpus:
        D = least_csc_decomposition(S)
        assert D.complete, S.name
        assert all(c.holds for c in D.condition_checks), S.name
