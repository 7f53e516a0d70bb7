"""
Congruences on an ordered semigroup: classification of a partition,
least congruence over a set of pairs, the least complete semilattice
congruence, and exhaustive semilattice-congruence enumeration.
"""

from collections import deque
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from Core.quantifiers import axes_for, word
from Relations.union_find import UnionFind
from Utils.errors import SizeBoundError
from Utils.model import CongruenceFlags, OrderedSemigroup, Partition, Verdict
from Utils.settings import MAX_CONGRUENCE_ENUM


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def congruence_kind(S: OrderedSemigroup, P: Partition) -> CongruenceFlags:
    """
    Every flag by exhaustive check. Witness layouts:
      left_congruence (c, a, b): a ~ b but not ca ~ cb
      right_congruence (a, b, c): a ~ b but not ac ~ bc
      semilattice (a,) for a !~ aa, (a, b) for ab !~ ba
      complete_semilattice (a, b): a <= b but not a ~ ab
    A flag that fails because a weaker one failed reuses the weaker witness.
    """
    n = S.n
    T = S.table
    rel = P.matrix()

    C, A, B = np.indices((n, n, n))
    left = _first(rel[A, B] & ~rel[T[C, A], T[C, B]])
    A, B, C = np.indices((n, n, n))
    right = _first(rel[A, B] & ~rel[T[A, C], T[B, C]])
    congruence = left or right

    idx = np.arange(n)
    squares = _first(~rel[idx, T[idx, idx]])
    I, J = np.indices((n, n))
    commutes = _first(~rel[T[I, J], T[J, I]])
    semilattice = congruence or squares or commutes

    complete = semilattice or _first(S.leq & ~rel[I, T[I, J]])

    return CongruenceFlags(
        left_congruence=left is None,
        right_congruence=right is None,
        congruence=congruence is None,
        semilattice=semilattice is None,
        complete_semilattice=complete is None,
        counterexamples={
            "left_congruence": left,
            "right_congruence": right,
            "congruence": congruence,
            "semilattice": semilattice,
            "complete_semilattice": complete,
        },
    )


def congruence_closure(S: OrderedSemigroup, pairs: Iterable[Tuple[int, int]]) -> Partition:
    """
    Least congruence containing pairs. Worklist: every merge pushes its left
    and right translates, so the fixpoint is closed under both.
    """
    n = S.n
    T = S.table
    uf = UnionFind(n)
    work = deque((int(a), int(b)) for a, b in pairs)
    while work:
        a, b = work.popleft()
        if not uf.union(a, b):
            continue
        for c in range(n):
            work.append((int(T[c, a]), int(T[c, b])))
            work.append((int(T[a, c]), int(T[b, c])))
    return Partition(tuple(uf.labels()))


def semilattice_generators(S: OrderedSemigroup) -> List[Tuple[int, int]]:
    """ (a, aa), (ab, ba), and (a, ab) for a <= b """
    n = S.n
    T = S.table
    gens = [(a, int(T[a, a])) for a in range(n)]
    gens += [(int(T[a, b]), int(T[b, a])) for a in range(n) for b in range(n)]
    gens += [(a, int(T[a, b])) for a in range(n) for b in range(n) if S.leq[a, b]]
    return gens


def least_complete_semilattice_congruence(S: OrderedSemigroup) -> Partition:
    pairs = semilattice_generators(S)
    while True:
        P = congruence_closure(S, pairs)
        flags = congruence_kind(S, P)
        if flags.semilattice and flags.complete_semilattice:
            return P
        # class count drops on every pass that gets here
        pairs += [(a, b) for a, b in semilattice_generators(S) if not P.related(a, b)]


def identity_witness(S: OrderedSemigroup, P: Partition, lhs: str, rhs: str) -> Optional[Tuple[int, ...]]:
    """
    First assignment (over the sorted letters of lhs + rhs) with lhs !~ rhs,
    e.g. identity_witness(S, L, "abc", "bac").
    """
    names = "".join(sorted(set(lhs + rhs)))
    axes = axes_for(S.n, names)
    left = word(S, lhs, axes)
    right = word(S, rhs, axes)
    cls = np.array(P.class_of)
    ok = np.broadcast_to(cls[left] == cls[right], (S.n,) * len(names))
    return _first(~ok)


def is_band_congruence_with(S: OrderedSemigroup, P: Partition, lhs: str, rhs: str) -> Verdict:
    """
    P is a congruence and every instance of the identity lhs = rhs lands in P.
    Counterexample: the congruence witness, or the first assignment breaking the identity.
    """
    flags = congruence_kind(S, P)
    if not flags.congruence:
        return Verdict.failed(flags.counterexamples["congruence"])
    witness = identity_witness(S, P, lhs, rhs)
    if witness is not None:
        return Verdict.failed(witness)
    return Verdict.passed()


def set_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """ Restricted growth strings of length n, lexicographically ascending """
    def extend(prefix: List[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in range(top + 2):
            prefix.append(k)
            yield from extend(prefix, max(top, k))
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from extend([0], 0)


def all_semilattice_congruences(S: OrderedSemigroup) -> List[Partition]:
    if S.n > MAX_CONGRUENCE_ENUM:
        raise SizeBoundError("partition enumeration", S.n, MAX_CONGRUENCE_ENUM)
    found = []
    for class_of in set_partitions(S.n):
        P = Partition(class_of)
        if congruence_kind(S, P).semilattice:
            found.append(P)
    return found
