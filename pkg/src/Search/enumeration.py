"""
Enumeration of small semigroups and ordered semigroups.

Tables are filled depth-first in row-major order with values ascending, so
they come out in ascending encoding order. Orders are generated once per n
and cached. Everything emitted is ascending in the (table, leq) encoding,
labeled or canonical alike.
"""

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np

from Core.validator import compatibility_witness
from Properties.deciders import check
from Utils.errors import SizeBoundError
from Utils.model import EnumerationConfig, OrderedSemigroup, PlainSemigroup
from Utils.settings import MAX_CANONICAL, MAX_ENUMERATION

Structure = Union[OrderedSemigroup, PlainSemigroup]


# =====================================================================
# Tables
# =====================================================================

def _consistent(T: List[List[int]], n: int) -> bool:
    """ No triple whose both bracketings are already defined disagrees """
    for x, y, z in product(range(n), repeat=3):
        xy, yz = T[x][y], T[y][z]
        if xy < 0 or yz < 0:
            continue
        left, right = T[xy][z], T[x][yz]
        if left >= 0 and right >= 0 and left != right:
            return False
    return True


def associative_tables(n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    if n > MAX_ENUMERATION:
        raise SizeBoundError("table enumeration", n, MAX_ENUMERATION)
    T = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in T)
            return
        i, j = cells[k]
        for v in range(n):
            T[i][j] = v
            if _consistent(T, n):
                yield from fill(k + 1)
        T[i][j] = -1

    yield from fill(0)


@lru_cache(maxsize=None)
def partial_orders(n: int) -> Tuple[np.ndarray, ...]:
    """ Every partial order on n labeled points, ascending by leq encoding """
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for k in range(len(off) + 1):
        for chosen in combinations(off, k):
            leq = np.eye(n, dtype=bool)
            for i, j in chosen:
                leq[i, j] = True
            if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
                continue
            # transitive iff leq . leq stays inside leq
            if ((leq.astype(int) @ leq.astype(int) > 0) & ~leq).any():
                continue
            leq.setflags(write=False)
            found.append(leq)
    return tuple(sorted(found, key=lambda m: tuple(m.flat)))


# =====================================================================
# Permutations and canonical forms
# =====================================================================

def permute_arrays(table: np.ndarray, leq: np.ndarray, p: Sequence[int]):
    """ p[old] = new """
    p = np.asarray(p)
    inv = np.argsort(p)
    return p[table[np.ix_(inv, inv)]], leq[np.ix_(inv, inv)]


def permute(S: OrderedSemigroup, p: Sequence[int], name: str = "") -> OrderedSemigroup:
    table, leq = permute_arrays(S.table, S.leq, p)
    inv = np.argsort(np.asarray(p))
    labels = tuple(S.labels[i] for i in inv) if S.labels else None
    return OrderedSemigroup(name or S.name, table, leq, labels, S.description)


def _encoding(table: np.ndarray, leq: np.ndarray = None) -> Tuple[int, ...]:
    code = tuple(int(v) for v in table.flat)
    if leq is not None:
        code += tuple(int(v) for v in leq.flat)
    return code


def canonical_form(S: OrderedSemigroup) -> OrderedSemigroup:
    """ The permuted copy with the least (table, leq) encoding """
    if S.n > MAX_CANONICAL:
        raise SizeBoundError("canonical form", S.n, MAX_CANONICAL)
    best = min(permutations(range(S.n)), key=lambda p: _encoding(*permute_arrays(S.table, S.leq, p)))
    return permute(S, best)


def _is_canonical_table(table: np.ndarray, perms) -> bool:
    code = _encoding(table)
    eye = np.eye(len(table), dtype=bool)
    return all(code <= _encoding(permute_arrays(table, eye, p)[0]) for p in perms)


def automorphisms(table: np.ndarray, perms) -> List[Tuple[int, ...]]:
    eye = np.eye(len(table), dtype=bool)
    return [p for p in perms if (permute_arrays(table, eye, p)[0] == table).all()]


def _is_canonical_order(table: np.ndarray, leq: np.ndarray, autos) -> bool:
    code = _encoding(leq)
    return all(code <= _encoding(permute_arrays(table, leq, p)[1]) for p in autos)


# =====================================================================
# Streams
# =====================================================================

def plain_semigroups(n: int, up_to_iso: bool = False) -> Iterator[PlainSemigroup]:
    perms = list(permutations(range(n)))
    k = 0
    for rows in associative_tables(n):
        table = np.array(rows)
        if up_to_iso and not _is_canonical_table(table, perms):
            continue
        yield PlainSemigroup(f"n{n}-{k:05d}", table)
        k += 1


def enumerate_structures(cfg: EnumerationConfig) -> Iterator[Structure]:
    """
    Labeled or canonical structures of size cfg.n in ascending encoding order.
    A canonical structure is one whose encoding is the least over all relabelings:
    its table is canonical and its order is least among the automorphic images.
    """
    n = cfg.n
    if n < 1:
        raise ValueError(f"enumeration needs n >= 1, got {n}")
    if n > MAX_ENUMERATION:
        raise SizeBoundError("enumeration", n, MAX_ENUMERATION)
    if cfg.plain_only:
        yield from plain_semigroups(n, cfg.up_to_iso)
        return

    perms = list(permutations(range(n)))
    orders = partial_orders(n)
    k = 0
    for rows in associative_tables(n):
        table = np.array(rows)
        autos = None
        if cfg.up_to_iso:
            if not _is_canonical_table(table, perms):
                continue
            autos = automorphisms(table, perms)
        for leq in orders:
            if compatibility_witness(table, leq) is not None:
                continue
            if autos is not None and not _is_canonical_order(table, leq, autos):
                continue
            S = OrderedSemigroup(f"n{n}-{k:05d}", table, leq)
            if cfg.require is not None and not check(S, cfg.require).holds:
                continue
            yield S
            k += 1


def count(cfg: EnumerationConfig) -> int:
    return sum(1 for _ in enumerate_structures(cfg))
