"""
Green's relations of an ordered semigroup, read off the principal ideals,
and the sandwich characterization of J for idempotent ordered semigroups.
"""

import numpy as np

from Core.operators import ideal_matrix
from Core.quantifiers import Clause, satisfied
from Utils.errors import InternalCheckFailed, NotIdempotentOrdered
from Utils.model import GreenRelation, OrderedSemigroup, Partition, Side

_SIDES = {
    GreenRelation.L: Side.LEFT,
    GreenRelation.R: Side.RIGHT,
    GreenRelation.J: Side.TWO_SIDED,
}


def partition_of_rows(rows: np.ndarray) -> Partition:
    """ Elements with identical rows share a class """
    keys = {}
    return Partition(tuple(keys.setdefault(row.tobytes(), len(keys)) for row in rows))


def green(S: OrderedSemigroup, rel: GreenRelation) -> Partition:
    if rel is GreenRelation.H:
        return green(S, GreenRelation.L).meet(green(S, GreenRelation.R))
    return partition_of_rows(ideal_matrix(S, _SIDES[rel]))


def idempotent_ordered_witness(S: OrderedSemigroup):
    """ First a with a not <= a*a, or None """
    n = S.n
    diag = S.table[np.arange(n), np.arange(n)]
    bad = np.flatnonzero(~S.leq[np.arange(n), diag])
    return (int(bad[0]),) if len(bad) else None


def j_via_sandwich(S: OrderedSemigroup) -> Partition:
    """
    a ~ b iff a <= axbya and b <= buavb for some x, y, u, v.
    The relation must come out an equivalence; if it does not, that is raised.
    """
    witness = idempotent_ordered_witness(S)
    if witness:
        raise NotIdempotentOrdered(f"{S.name} is not idempotent ordered", witness)

    reach = satisfied(S, "ab", Clause("a", "axbya", "xy"))   # reach[a, b]
    rel = reach & reach.T
    n = S.n

    loose = np.flatnonzero(~rel.diagonal())
    if len(loose):
        raise InternalCheckFailed(f"sandwich form of J is not reflexive on {S.name}", (loose[0],))
    A, B, C = np.indices((n, n, n))
    broken = np.argwhere(rel[A, B] & rel[B, C] & ~rel[A, C])
    if len(broken):
        raise InternalCheckFailed(f"sandwich form of J is not transitive on {S.name}", broken[0])

    return partition_of_rows(rel)
