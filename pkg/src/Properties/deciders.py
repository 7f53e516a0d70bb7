"""
Witnessed deciders for every PropertyId.

Most properties are a single quantified formula (see FORMULAS) and go
through the vectorized evaluator. BAND, SIMPLE and H_COMMUTATIVE have
their own paths; H_COMMUTATIVE is decided from the sandwich set bSa so
that it stays independent of WEAKLY_COMMUTATIVE, which is the same
statement written as a formula.
"""

from itertools import product
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from Core.operators import downset, ideal_matrix, is_product_closed, sandwich
from Core.quantifiers import Clause, Formula, evaluate
from Core.quantifiers import holds_at as formula_holds_at
from Utils.errors import NotProductClosed
from Utils.model import OrderedSemigroup, PropertyId, Side, Verdict

P = PropertyId

FORMULAS: Dict[PropertyId, Formula] = {
    P.IDEMPOTENT_ORDERED:         Formula("a",  (Clause("a", "aa"),)),
    P.RECTANGULAR:                Formula("ab", (Clause("a", "axbya", "xy"),)),
    P.RECTANGULAR_SINGLE_WITNESS: Formula("ab", (Clause("a", "axbxa", "x"),)),
    P.RECTANGULAR_SPLIT:          Formula("abc", (Clause("ac", "axbxc", "x"),)),
    P.LEFT_ZERO:                  Formula("ab", (Clause("a", "axb", "x"),)),
    P.RIGHT_ZERO:                 Formula("ab", (Clause("a", "bxa", "x"),)),
    P.LEFT_SIMPLE:                Formula("ab", (Clause("b", "sa", "s"),)),
    P.RIGHT_SIMPLE:               Formula("ab", (Clause("b", "as", "s"),)),
    P.T_SIMPLE:                   Formula("ab", (Clause("b", "sa", "s"), Clause("b", "at", "t"))),
    P.LEFT_REGULAR:               Formula("ab", (Clause("ab", "axbxa", "x"),)),
    P.LEFT_REGULAR_MIRRORED:      Formula("ab", (Clause("ab", "abxba", "x"),)),
    P.LEFT_REGULAR_TWO_WITNESS:   Formula("ab", (Clause("ab", "axbya", "xy"),)),
    P.ORDERED_LEFT_REGULAR:       Formula("a",  (Clause("a", "xaa", "x"),)),
    P.H_COMMUTATIVE:              Formula("ab", (Clause("ab", "bua", "u"),)),
    P.H_COMMUTATIVE_TWO_SIDED:    Formula("ab", (Clause("ab", "bau", "u"), Clause("ab", "vba", "v"))),
    P.WEAKLY_COMMUTATIVE:         Formula("ab", (Clause("ab", "bua", "u"),)),
    P.NORMAL:                     Formula("abc", (Clause("abca", "acxba", "x"),)),
    P.LEFT_NORMAL:                Formula("abc", (Clause("abc", "acxb", "x"),)),
    P.RIGHT_NORMAL:               Formula("abc", (Clause("abc", "bxac", "x"),)),
}


# =====================================================================
# Special paths
# =====================================================================

def _check_band(S: OrderedSemigroup) -> Verdict:
    idx = np.arange(S.n)
    bad = np.flatnonzero(S.table[idx, idx] != idx)
    return Verdict.failed((bad[0],)) if len(bad) else Verdict.passed()


def _check_simple(S: OrderedSemigroup) -> Verdict:
    """ Every two-sided principal ideal is all of S; counterexample (a, b) with b outside ideal(a) """
    outside = np.argwhere(~ideal_matrix(S, Side.TWO_SIDED))
    return Verdict.failed(outside[0]) if len(outside) else Verdict.passed()


def _check_h_commutative(S: OrderedSemigroup) -> Verdict:
    """ ab in (bSa] for all a, b; the witness u is the first one with ab <= bua """
    witnesses = {}
    for a, b in product(S.elements, repeat=2):
        ab = S.mul(a, b)
        if ab not in downset(S, sandwich(S, b, a)):
            return Verdict.failed((a, b))
        witnesses[(a, b)] = (next(u for u in S.elements if S.le(ab, S.product(b, u, a))),)
    return Verdict.passed(witnesses)


# =====================================================================
# Public API
# =====================================================================

def check(S: OrderedSemigroup, p: PropertyId) -> Verdict:
    if p is P.BAND:
        return _check_band(S)
    if p is P.SIMPLE:
        return _check_simple(S)
    if p is P.H_COMMUTATIVE:
        return _check_h_commutative(S)
    return evaluate(S, FORMULAS[p])


def check_all(S: OrderedSemigroup) -> Dict[PropertyId, Verdict]:
    return {p: check(S, p) for p in PropertyId}


def holds_at(S: OrderedSemigroup, p: PropertyId, point: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """
    Re-checks one universal instance with plain loops.
    Returns the witness tuple (empty when nothing is quantified existentially)
    or None when the instance fails.
    """
    if p is P.BAND:
        (a,) = point
        return () if S.mul(a, a) == a else None
    if p is P.SIMPLE:
        a, b = point
        generated = {a}
        for s, t in product(S.elements, repeat=2):
            generated |= {S.mul(s, a), S.mul(a, s), S.product(s, a, t)}
        return () if any(S.le(b, g) for g in generated) else None
    return formula_holds_at(S, FORMULAS[p], point)


def universal_arity(p: PropertyId) -> int:
    if p is P.BAND:
        return 1
    if p is P.SIMPLE:
        return 2
    return len(FORMULAS[p].universal)


def check_subset_weakly_commutative(S: OrderedSemigroup, T: Iterable[int]) -> Verdict:
    """
    For all p, q in T some u in T gives pq <= qup.
    Witness map (p, q) -> (u,), counterexample (p, q).
    """
    idx = sorted(set(T))
    if not idx:
        raise NotProductClosed(f"empty subset of {S.name}")
    if not is_product_closed(S, idx):
        bad = next((a, b) for a in idx for b in idx if S.mul(a, b) not in idx)
        raise NotProductClosed(f"subset {idx} of {S.name} is not closed under the product", bad)

    tab = S.table
    members = np.array(idx)
    p = members[:, None, None]
    q = members[None, :, None]
    u = members[None, None, :]
    ok = S.leq[tab[p, q], tab[tab[q, u], p]]      # [p, q, u]
    found = ok.any(axis=-1)
    if not found.all():
        i, j = np.argwhere(~found)[0]
        return Verdict.failed((members[i], members[j]))
    first = ok.argmax(axis=-1)
    return Verdict.passed({(int(members[i]), int(members[j])): (int(members[first[i, j]]),)
                           for i, j in np.ndindex(found.shape)})
