"""
The finite-power construction P_f(B) and the extension of a homomorphism
B -> S to P_f(B) -> S by joins.

Nonempty subsets of B are bitmasks 1 .. 2^n - 1; element i of P_f(B) is the
subset with mask i + 1, so elements follow ascending mask order.
"""

from itertools import product
from typing import Dict, Optional, Sequence

from Core.validator import validate
from Utils.errors import JoinMissing, NotAHomomorphism, SizeBoundError
from Utils.model import ConditionCheck, HomExtension, OrderedSemigroup, PlainSemigroup
from Utils.settings import MAX_POWER_BASE


def members_of(mask: int) -> list:
    return [b for b in range(mask.bit_length()) if mask >> b & 1]


def subset_label(mask: int) -> str:
    return "{" + ",".join(map(str, members_of(mask))) + "}"


def setwise_product(B: PlainSemigroup, left: int, right: int) -> int:
    """ Mask of {ab : a in left, b in right} """
    out = 0
    for a in members_of(left):
        for b in members_of(right):
            out |= 1 << B.mul(a, b)
    return out


def power_construction(B: PlainSemigroup) -> OrderedSemigroup:
    if B.n > MAX_POWER_BASE:
        raise SizeBoundError("power construction base", B.n, MAX_POWER_BASE)
    masks = range(1, 2 ** B.n)
    table = [[setwise_product(B, x, y) - 1 for y in masks] for x in masks]
    leq = [[x & y == x for y in masks] for x in masks]
    return validate({
        "name": f"P_f({B.name})",
        "n": len(masks),
        "table": table,
        "leq": leq,
        "labels": [subset_label(m) for m in masks],
        "construction": "power",
    })


def singleton_embedding(B: PlainSemigroup) -> list:
    """ b -> {b} as an element index of power_construction(B) """
    return [(1 << b) - 1 for b in range(B.n)]


def _join(S: OrderedSemigroup, values) -> Optional[int]:
    """ Least upper bound of values in (S, <=), or None """
    uppers = [s for s in S.elements if all(S.le(v, s) for v in values)]
    least = [u for u in uppers if all(S.le(u, w) for w in uppers)]
    return least[0] if least else None


def extend_hom(B: PlainSemigroup, S: OrderedSemigroup, f: Sequence[int]) -> HomExtension:
    """
    phi(A) = join of f(a) over a in A, for every nonempty A of B.
    f must be a homomorphism (NotAHomomorphism otherwise) and every join must
    exist (JoinMissing otherwise). Reports the homomorphism law of phi over
    subset products, phi({b}) == f(b), and that phi preserves inclusion.
    """
    f = tuple(int(v) for v in f)
    if len(f) != B.n or not all(0 <= v < S.n for v in f):
        raise NotAHomomorphism(f"map {list(f)} is not a function from {B.name} to {S.name}")
    for a, b in product(range(B.n), repeat=2):
        if f[B.mul(a, b)] != S.mul(f[a], f[b]):
            raise NotAHomomorphism(f"f({a}*{b}) != f({a})*f({b})", (a, b))

    if B.n > MAX_POWER_BASE:
        raise SizeBoundError("power construction base", B.n, MAX_POWER_BASE)
    masks = range(1, 2 ** B.n)
    phi: Dict[int, int] = {}
    for mask in masks:
        image = _join(S, [f[b] for b in members_of(mask)])
        if image is None:
            raise JoinMissing(f"{subset_label(mask)} has no least upper bound in {S.name}", members_of(mask))
        phi[mask] = image

    hom_law = ConditionCheck(True)
    for x, y in product(masks, repeat=2):
        if phi[setwise_product(B, x, y)] != S.mul(phi[x], phi[y]):
            hom_law = ConditionCheck(False, (x, y))
            break

    diagram = ConditionCheck(True)
    for b in range(B.n):
        if phi[1 << b] != f[b]:
            diagram = ConditionCheck(False, (b,))
            break

    monotone = ConditionCheck(True)
    for x, y in product(masks, repeat=2):
        if x & y == x and not S.le(phi[x], phi[y]):
            monotone = ConditionCheck(False, (x, y))
            break

    return HomExtension(f, phi, hom_law, diagram, monotone)
