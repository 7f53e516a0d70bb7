"""
Order-theoretic operators every other package consumes:
downsets, principal one-sided and two-sided ideals, sandwich sets, powers.
"""

from typing import Iterable, List

import numpy as np

from Utils.errors import NotProductClosed
from Utils.model import OrderedSemigroup, Side, Subset, Verdict


def _as_subset(mask: np.ndarray) -> Subset:
    return frozenset(int(i) for i in np.flatnonzero(mask))


def downset(S: OrderedSemigroup, H: Iterable[int]) -> Subset:
    """ (H] = {t : t <= h for some h in H} """
    members = sorted(set(H))
    if not members:
        return frozenset()
    return _as_subset(S.leq[:, members].any(axis=1))


def generator_matrix(S: OrderedSemigroup, side: Side) -> np.ndarray:
    """
    Row a marks {a} u Sa (LEFT), {a} u aS (RIGHT) or {a} u Sa u aS u SaS (TWO_SIDED).
    The identity of S^1 is never adjoined; including a itself has the same effect.
    """
    n = S.n
    T = S.table
    gens = np.eye(n, dtype=bool)
    rows = np.arange(n)[:, None]
    left = T.T                # left[a, s] = s*a
    right = T                 # right[a, s] = a*s
    if side in (Side.LEFT, Side.TWO_SIDED):
        gens[rows, left] = True
    if side in (Side.RIGHT, Side.TWO_SIDED):
        gens[rows, right] = True
    if side is Side.TWO_SIDED:
        both = T[left[:, :, None], np.arange(n)[None, None, :]]   # [a, s, t] = (s*a)*t
        gens[rows, both.reshape(n, -1)] = True
    return gens


def ideal_matrix(S: OrderedSemigroup, side: Side) -> np.ndarray:
    """ Row a is the principal ideal of a on the given side, as a boolean mask """
    gens = generator_matrix(S, side).astype(np.int64)
    # t in ideal(a) iff gens[a, h] and t <= h for some h
    return (gens @ S.leq.T.astype(np.int64)) > 0


def principal_ideal(S: OrderedSemigroup, a: int, side: Side) -> Subset:
    return _as_subset(ideal_matrix(S, side)[a])


def sandwich(S: OrderedSemigroup, a: int, b: int) -> Subset:
    """ aSb = {a*x*b : x in S}; closed under the product since (axb)(ayb) = a(xbay)b """
    return frozenset(int(v) for v in S.table[S.table[a, :], b])


def is_product_closed(S: OrderedSemigroup, members: Iterable[int]) -> bool:
    idx = sorted(set(members))
    if not idx:
        return True
    products = S.table[np.ix_(idx, idx)]
    return bool(np.isin(products, idx).all())


def power(S: OrderedSemigroup, a: int, k: int) -> int:
    acc = a
    for _ in range(k - 1):
        acc = S.mul(acc, a)
    return acc


def power_exponent_bound(S: OrderedSemigroup) -> int:
    # powers of one element repeat within the first 2n+1 exponents
    return 2 * S.n + 1


def check_power_monotonicity(S: OrderedSemigroup) -> Verdict:
    """ a^m <= a^k for every a and 1 <= m <= k <= 2n+1; counterexample (a, m, k) """
    top = power_exponent_bound(S)
    for a in S.elements:
        powers: List[int] = [a]
        for _ in range(top - 1):
            powers.append(S.mul(powers[-1], a))
        for m in range(1, top + 1):
            for k in range(m, top + 1):
                if not S.le(powers[m - 1], powers[k - 1]):
                    return Verdict.failed((a, m, k))
    return Verdict.passed()


def restrict(S: OrderedSemigroup, members: Iterable[int], name: str = "") -> OrderedSemigroup:
    """
    Sub-structure on a product-closed subset: table and order restricted,
    elements renumbered in ascending order of their ids in S.
    """
    idx = sorted(set(members))
    if not is_product_closed(S, idx):
        bad = [(a, b) for a in idx for b in idx if S.mul(a, b) not in idx][0]
        raise NotProductClosed(f"subset {idx} of {S.name} is not closed under the product", bad)
    position = {old: new for new, old in enumerate(idx)}
    table = [[position[S.mul(a, b)] for b in idx] for a in idx]
    leq = S.leq[np.ix_(idx, idx)]
    labels = tuple(S.label(a) for a in idx)
    return OrderedSemigroup(
        name=name or f"{S.name}[{','.join(map(str, idx))}]",
        table=table,
        leq=leq,
        labels=labels,
    )
