"""
Isomorphism test for ordered semigroups: backtracking over partial
bijections, candidates pruned by element invariants.
"""

from typing import List, Optional, Tuple

import numpy as np

from Core.operators import ideal_matrix
from Utils.model import OrderedSemigroup, Side


def invariants(S: OrderedSemigroup) -> List[Tuple[int, ...]]:
    """ Per element: idempotent, ideal sizes on each side, elements above, elements below """
    n = S.n
    idx = np.arange(n)
    idem = S.table[idx, idx] == idx
    sizes = [ideal_matrix(S, side).sum(axis=1) for side in (Side.LEFT, Side.RIGHT, Side.TWO_SIDED)]
    up = S.leq.sum(axis=1)
    down = S.leq.sum(axis=0)
    return [(int(idem[a]), *(int(s[a]) for s in sizes), int(up[a]), int(down[a])) for a in range(n)]


def isomorphic(S1: OrderedSemigroup, S2: OrderedSemigroup) -> Optional[Tuple[int, ...]]:
    """ A bijection f (f[a] is the image of a) preserving product and order, or None """
    n = S1.n
    if n != S2.n:
        return None
    inv1, inv2 = invariants(S1), invariants(S2)
    if sorted(inv1) != sorted(inv2):
        return None

    T1, T2 = S1.table, S2.table
    image = [-1] * n
    used = [False] * n

    def consistent(a: int) -> bool:
        # every relation among assigned elements that involves a
        fa = image[a]
        for b in range(a + 1):
            fb = image[b]
            if S1.leq[a, b] != S2.leq[fa, fb] or S1.leq[b, a] != S2.leq[fb, fa]:
                return False
            for x, y in ((a, b), (b, a)):
                prod = T1[x, y]
                if image[prod] >= 0 and image[prod] != T2[image[x], image[y]]:
                    return False
        # products landing on a
        for x in range(a + 1):
            for y in range(a + 1):
                if T1[x, y] == a and T2[image[x], image[y]] != fa:
                    return False
        return True

    def extend(a: int) -> bool:
        if a == n:
            return True
        for c in range(n):
            if used[c] or inv2[c] != inv1[a]:
                continue
            image[a], used[c] = c, True
            if consistent(a) and extend(a + 1):
                return True
            image[a], used[c] = -1, False
        return False

    return tuple(image) if extend(0) else None
