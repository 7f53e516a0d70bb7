"""
Theorem verifiers.

Each verifier evaluates every condition of one theorem on one structure,
independently (no condition is derived from another), and packs them in a
TheoremReport whose shape says how the condition values must relate.
A report with relation_respected == False is a finding, not an exception.
"""

from typing import Dict, List, Optional

from Core.operators import check_power_monotonicity, restrict, sandwich
from Properties.deciders import check, check_subset_weakly_commutative
from Relations.congruence import (all_semilattice_congruences, congruence_kind,
                                  is_band_congruence_with,
                                  least_complete_semilattice_congruence)
from Relations.green import green, idempotent_ordered_witness, j_via_sandwich
from Utils.errors import (HypothesisNotMet, InternalCheckFailed, NotProductClosed,
                          NotSemilatticeCongruence)
from Utils.model import (ConditionValue, GreenRelation, OrderedSemigroup, Partition,
                         PropertyId, TheoremId, TheoremReport, TheoremShape, Verdict)
from Utils.settings import MAX_CONGRUENCE_ENUM, MAX_POWER_BASE

P = PropertyId
IFF = TheoremShape.EQUIVALENCE
IMPLIES = TheoremShape.IMPLICATION
ALL = TheoremShape.ASSERTION


# =====================================================================
# Condition builders
# =====================================================================

def _condition(label: str, verdict: Verdict) -> ConditionValue:
    return ConditionValue(label, verdict.holds, verdict)


def _property(S: OrderedSemigroup, p: PropertyId) -> ConditionValue:
    return _condition(p.value, check(S, p))


def _same_partition(*parts: Partition) -> Verdict:
    """ All partitions equal; counterexample is the first pair they disagree on """
    for left, right in zip(parts, parts[1:]):
        diff = left.first_difference(right)
        if diff is not None:
            return Verdict.failed(diff)
    return Verdict.passed()


def _classes_satisfy(S: OrderedSemigroup, P_: Partition, *props: PropertyId) -> Verdict:
    """
    Every class, restricted to a sub-structure, has every property in props.
    Counterexample: the failing class verdict's tuple mapped back to elements of S,
    or the product pair that leaves the class when it is not closed.
    """
    for members in P_.classes:
        idx = sorted(members)
        try:
            sub = restrict(S, idx)
        except NotProductClosed as e:
            return Verdict.failed(e.witness)
        for p in props:
            v = check(sub, p)
            if not v.holds:
                return Verdict.failed(tuple(idx[i] for i in v.counterexample))
    return Verdict.passed()


def _some_semilattice_congruence(S: OrderedSemigroup, *props: PropertyId) -> Verdict:
    """ Witness {(): class_of} for the first such congruence; counterexample () when none exists """
    for P_ in all_semilattice_congruences(S):
        if _classes_satisfy(S, P_, *props).holds:
            return Verdict.passed({(): P_.class_of})
    return Verdict.failed(())


def _all_sandwiches(S: OrderedSemigroup, diagonal: bool) -> Verdict:
    pairs = [(a, a) for a in S.elements] if diagonal else [(a, b) for a in S.elements for b in S.elements]
    for a, b in pairs:
        if not check_subset_weakly_commutative(S, sandwich(S, a, b)).holds:
            return Verdict.failed((a,) if diagonal else (a, b))
    return Verdict.passed()


# =====================================================================
# Verifiers
# =====================================================================

def _power_band(S):
    from Constructions.power import power_construction
    return [
        _property(S, P.BAND),
        _condition("power-construction idempotent-ordered",
                   check(power_construction(S.plain()), P.IDEMPOTENT_ORDERED)),
    ]


def _power_monotone(S):
    return [
        _property(S, P.IDEMPOTENT_ORDERED),
        _condition("powers monotone", check_power_monotonicity(S)),
    ]


def _rectangular_equivalents(S):
    return [_property(S, p) for p in (P.RECTANGULAR, P.RECTANGULAR_SINGLE_WITNESS, P.RECTANGULAR_SPLIT)]


def _rectangular_decomposition(S):
    from Decompose.decomposition import decompose
    J = green(S, GreenRelation.J)
    flags = congruence_kind(S, J)
    complete = (Verdict.passed() if flags.complete_semilattice
                else Verdict.failed(flags.counterexamples["complete_semilattice"]))
    try:
        condition = decompose(S, J).condition_checks[3]
        cover = Verdict.passed() if condition.holds else Verdict.failed(condition.witness)
    except NotSemilatticeCongruence as e:
        cover = Verdict.failed(e.witness)
    return [
        _condition("J complete semilattice congruence", complete),
        _condition("J classes rectangular", _classes_satisfy(S, J, P.RECTANGULAR)),
        _condition("J downset condition", cover),
    ]


def _left_zero_left_simple(S):
    return [_property(S, P.LEFT_ZERO), _property(S, P.LEFT_SIMPLE)]


def _left_regular_equivalents(S):
    return [_property(S, p) for p in (P.LEFT_REGULAR, P.LEFT_REGULAR_MIRRORED, P.LEFT_REGULAR_TWO_WITNESS)]


def _left_regular_green(S):
    return [
        _property(S, P.LEFT_REGULAR),
        _condition("L = J = least-csc", _same_partition(
            green(S, GreenRelation.L), green(S, GreenRelation.J), least_complete_semilattice_congruence(S))),
    ]


def _left_regular_decomposition(S):
    return [
        _property(S, P.LEFT_REGULAR),
        _condition("least-csc classes left-zero",
                   _classes_satisfy(S, least_complete_semilattice_congruence(S), P.LEFT_ZERO)),
        _condition("some semilattice congruence with left-zero classes",
                   _some_semilattice_congruence(S, P.LEFT_ZERO)),
    ]


def _h_commutative_equivalents(S):
    return [
        _property(S, P.H_COMMUTATIVE),
        _property(S, P.H_COMMUTATIVE_TWO_SIDED),
        _condition("least-csc classes t-simple",
                   _classes_satisfy(S, least_complete_semilattice_congruence(S), P.T_SIMPLE)),
        _condition("some semilattice congruence with t-simple classes",
                   _some_semilattice_congruence(S, P.T_SIMPLE)),
    ]


def _weakly_commutative_equivalents(S):
    return [
        _property(S, P.WEAKLY_COMMUTATIVE),
        _property(S, P.H_COMMUTATIVE_TWO_SIDED),
        _condition("least-csc classes left-simple and right-simple",
                   _classes_satisfy(S, least_complete_semilattice_congruence(S), P.LEFT_SIMPLE, P.RIGHT_SIMPLE)),
    ]


def _normal_sandwich(S):
    return [
        _property(S, P.NORMAL),
        _condition("every aSb weakly commutative", _all_sandwiches(S, diagonal=False)),
        _condition("every aSa weakly commutative", _all_sandwiches(S, diagonal=True)),
    ]


def _normal_green(S):
    left = is_band_congruence_with(S, green(S, GreenRelation.L), "abc", "bac")
    right = is_band_congruence_with(S, green(S, GreenRelation.R), "abc", "acb")
    both = right if left.holds else left
    return [
        _property(S, P.NORMAL),
        _condition("L right normal band congruence and R left normal band congruence", both),
    ]


def _left_normal_green(S):
    csc = least_complete_semilattice_congruence(S)
    return [
        _property(S, P.LEFT_NORMAL),
        _condition("L = least-csc", _same_partition(green(S, GreenRelation.L), csc)),
        _condition("least-csc classes left-zero", _classes_satisfy(S, csc, P.LEFT_ZERO)),
    ]


def _right_normal_green(S):
    csc = least_complete_semilattice_congruence(S)
    return [
        _property(S, P.RIGHT_NORMAL),
        _condition("R = least-csc", _same_partition(green(S, GreenRelation.R), csc)),
        _condition("least-csc classes right-zero", _classes_satisfy(S, csc, P.RIGHT_ZERO)),
    ]


def _j_least_congruence(S):
    J = green(S, GreenRelation.J)
    try:
        sandwich_form = _same_partition(j_via_sandwich(S), J)
    except InternalCheckFailed as e:
        sandwich_form = Verdict.failed(e.witness)
    flags = congruence_kind(S, J)
    complete = (Verdict.passed() if flags.complete_semilattice
                else Verdict.failed(flags.counterexamples["complete_semilattice"]))
    return [
        _condition("J = least-csc", _same_partition(J, least_complete_semilattice_congruence(S))),
        _condition("sandwich form of J = J", sandwich_form),
        _condition("J complete semilattice congruence", complete),
    ]


def _zero_rectangular(S):
    left, right = check(S, P.LEFT_ZERO), check(S, P.RIGHT_ZERO)
    either = left if left.holds or not right.holds else right
    return [
        _condition("left-zero or right-zero", either),
        _property(S, P.RECTANGULAR),
    ]


# (shape, verifier) per theorem
THEOREMS: Dict[TheoremId, tuple] = {
    TheoremId.POWER_BAND: (IFF, _power_band),
    TheoremId.POWER_MONOTONE: (IMPLIES, _power_monotone),
    TheoremId.RECTANGULAR_EQUIVALENTS: (IFF, _rectangular_equivalents),
    TheoremId.RECTANGULAR_DECOMPOSITION: (ALL, _rectangular_decomposition),
    TheoremId.LEFT_ZERO_LEFT_SIMPLE: (IFF, _left_zero_left_simple),
    TheoremId.LEFT_REGULAR_EQUIVALENTS: (IFF, _left_regular_equivalents),
    TheoremId.LEFT_REGULAR_GREEN: (IFF, _left_regular_green),
    TheoremId.LEFT_REGULAR_DECOMPOSITION: (IFF, _left_regular_decomposition),
    TheoremId.H_COMMUTATIVE_EQUIVALENTS: (IFF, _h_commutative_equivalents),
    TheoremId.WEAKLY_COMMUTATIVE_EQUIVALENTS: (IFF, _weakly_commutative_equivalents),
    TheoremId.NORMAL_SANDWICH: (IFF, _normal_sandwich),
    TheoremId.NORMAL_GREEN: (IFF, _normal_green),
    TheoremId.LEFT_NORMAL_GREEN: (IMPLIES, _left_normal_green),
    TheoremId.RIGHT_NORMAL_GREEN: (IMPLIES, _right_normal_green),
    TheoremId.J_LEAST_CONGRUENCE: (ALL, _j_least_congruence),
    TheoremId.ZERO_RECTANGULAR: (IMPLIES, _zero_rectangular),
}

# Theorems that enumerate every semilattice congruence
_ENUMERATING = (TheoremId.LEFT_REGULAR_DECOMPOSITION, TheoremId.H_COMMUTATIVE_EQUIVALENTS)


def verify_theorem(S: OrderedSemigroup, t: TheoremId) -> TheoremReport:
    """
    Raises HypothesisNotMet unless S is idempotent ordered; the power-band
    theorem is about the plain table and has no such hypothesis.
    """
    if t is not TheoremId.POWER_BAND:
        witness = idempotent_ordered_witness(S)
        if witness:
            raise HypothesisNotMet(f"{t.value} needs an idempotent ordered structure, {S.name} is not", witness)
    shape, verifier = THEOREMS[t]
    return TheoremReport(t, shape, tuple(verifier(S)))


def applicable_theorems(S: OrderedSemigroup) -> List[TheoremId]:
    """ What `verify --all` runs: hypothesis met and every size bound respected """
    found = []
    ordered = idempotent_ordered_witness(S) is None
    for t in TheoremId:
        if t is TheoremId.POWER_BAND:
            if S.n <= MAX_POWER_BASE:
                found.append(t)
        elif ordered and (t not in _ENUMERATING or S.n <= MAX_CONGRUENCE_ENUM):
            found.append(t)
    return found


def verify_all(S: OrderedSemigroup, theorems: Optional[List[TheoremId]] = None) -> List[TheoremReport]:
    return [verify_theorem(S, t) for t in (theorems if theorems is not None else applicable_theorems(S))]
