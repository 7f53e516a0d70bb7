"""
Counterexample search: walk the enumeration in ascending size and encoding
and stop at the first structure that meets every hypothesis of a claim but
misses one of its conclusions.
"""

from typing import Optional

from Properties.deciders import check
from Search.enumeration import enumerate_structures
from Utils.errors import SizeBoundError
from Utils.model import ClaimSpec, Counterexample, EnumerationConfig, PropertyId
from Utils.settings import MAX_ENUMERATION


def _ordered(props):
    """ Enum declaration order, so the failing conclusion reported is deterministic """
    return [p for p in PropertyId if p in props]


def find_counterexample(claim: ClaimSpec, n_max: int, up_to_iso: bool = True) -> Optional[Counterexample]:
    if n_max > MAX_ENUMERATION:
        raise SizeBoundError("counterexample search", n_max, MAX_ENUMERATION)
    require = PropertyId.IDEMPOTENT_ORDERED if claim.restrict_to_idempotent_ordered else None
    hypothesis = _ordered(claim.hypothesis)
    conclusion = _ordered(claim.conclusion)

    for n in range(1, n_max + 1):
        for S in enumerate_structures(EnumerationConfig(n, require=require, up_to_iso=up_to_iso)):
            if not all(check(S, p).holds for p in hypothesis):
                continue
            for p in conclusion:
                verdict = check(S, p)
                if not verdict.holds:
                    return Counterexample(S, p, verdict)
    return None
