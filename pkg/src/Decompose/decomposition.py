"""
Semilattice decompositions.

decompose() builds the quotient of a semilattice congruence and re-checks
the four structural conditions:
  (1) the classes are pairwise disjoint
  (2) they cover S
  (3) S_alpha * S_beta lands inside S_(alpha beta)
  (4) S_beta meeting (S_alpha] forces beta <= alpha in the quotient
(1) and (2) hold for any partition. (4) holds exactly when the congruence
is complete.
"""

from typing import List, Optional, Tuple

import numpy as np

from Core.operators import restrict
from Properties.deciders import check
from Relations.congruence import congruence_kind, least_complete_semilattice_congruence
from Utils.errors import ClassNotClosed, InternalCheckFailed, NotProductClosed, NotSemilatticeCongruence
from Utils.model import (ClassReport, Classification, ConditionCheck, Decomposition,
                         OrderedSemigroup, Partition, PropertyId)

P = PropertyId


def _quotient(S: OrderedSemigroup, congruence: Partition) -> np.ndarray:
    reps = [min(c) for c in congruence.classes]
    cls = np.array(congruence.class_of)
    return cls[S.table[np.ix_(reps, reps)]]


def _class_products(S: OrderedSemigroup, congruence: Partition, quotient: np.ndarray) -> ConditionCheck:
    cls = np.array(congruence.class_of)
    landed = cls[S.table]
    expected = quotient[cls[:, None], cls[None, :]]
    bad = np.argwhere(landed != expected)
    return ConditionCheck(False, tuple(int(v) for v in bad[0])) if len(bad) else ConditionCheck(True)


def _downset_condition(S: OrderedSemigroup, congruence: Partition, quotient: np.ndarray) -> ConditionCheck:
    """ Witness (alpha, beta, e): e in S_beta lies below S_alpha but beta*alpha != beta """
    cls = congruence.class_of
    for alpha, upper in enumerate(congruence.classes):
        below = S.leq[:, sorted(upper)].any(axis=1)
        for e in np.flatnonzero(below):
            beta = cls[e]
            if quotient[beta, alpha] != beta:
                return ConditionCheck(False, (alpha, beta, int(e)))
    return ConditionCheck(True)


def decompose(S: OrderedSemigroup, congruence: Partition) -> Decomposition:
    flags = congruence_kind(S, congruence)
    if not flags.semilattice:
        raise NotSemilatticeCongruence(
            f"partition {congruence} is not a semilattice congruence on {S.name}",
            flags.counterexamples["semilattice"])

    quotient = _quotient(S, congruence)
    if not (quotient == quotient.T).all():
        raise InternalCheckFailed(f"quotient of {S.name} is not commutative", tuple(np.argwhere(quotient != quotient.T)[0]))
    k = quotient.shape[0]
    # alpha <= beta iff alpha = alpha*beta
    order = quotient == np.arange(k)[:, None]

    checks = (
        ConditionCheck(True),
        ConditionCheck(True),
        _class_products(S, congruence, quotient),
        _downset_condition(S, congruence, quotient),
    )
    return Decomposition(S, congruence, quotient, order, checks)


# =====================================================================
# Classification
# =====================================================================

# strongest first
TIERS: List[Tuple[str, Tuple[PropertyId, ...]]] = [
    ("t-simple", (P.T_SIMPLE,)),
    ("left zero", (P.LEFT_ZERO,)),
    ("right zero", (P.RIGHT_ZERO,)),
    ("left-and-right simple", (P.LEFT_SIMPLE, P.RIGHT_SIMPLE)),
    ("rectangular", (P.RECTANGULAR,)),
]


def class_report(S: OrderedSemigroup, class_id: int, members) -> ClassReport:
    idx = tuple(sorted(members))
    try:
        sub = restrict(S, idx, name=f"{S.name}/class{class_id}")
    except NotProductClosed as e:
        raise ClassNotClosed(f"class {class_id} of {S.name} is not closed under the product", e.witness)
    return ClassReport(class_id, idx, {p: check(sub, p) for p in PropertyId})


def headline(uniform: Tuple[PropertyId, ...], complete: bool) -> str:
    tier: Optional[str] = next((name for name, props in TIERS if all(p in uniform for p in props)), None)
    kind = "idempotent ordered semigroups" if P.IDEMPOTENT_ORDERED in uniform else "ordered semigroups"
    words = ["complete semilattice of"] if complete else ["semilattice of"]
    if tier:
        words.append(tier)
    words.append(kind)
    return " ".join(words)


def classify_decomposition(S: OrderedSemigroup, D: Decomposition) -> Classification:
    reports = tuple(class_report(S, cid, members) for cid, members in enumerate(D.congruence.classes))
    uniform = tuple(p for p in PropertyId if all(r.verdicts[p].holds for r in reports))
    return Classification(reports, uniform, headline(uniform, D.complete), D.complete)


def least_csc_decomposition(S: OrderedSemigroup) -> Decomposition:
    return decompose(S, least_complete_semilattice_congruence(S))
