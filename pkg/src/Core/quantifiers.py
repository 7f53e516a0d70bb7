"""
Vectorized evaluation of formulas of the form

    for all <universal> : exists <existential> : lhs <= rhs   (and more clauses)

where lhs/rhs are words over single-letter variables, e.g. "ab" <= "axbya".
Each variable gets its own numpy axis, so a word evaluates to an index array
by repeated table lookups and broadcasting does the quantifier work.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Dict, Optional, Tuple

import numpy as np

from Utils.model import OrderedSemigroup, Verdict


@dataclass(frozen=True)
class Clause:
    lhs: str
    rhs: str
    exists: str = ""

    def __str__(self):
        prefix = f"exists {','.join(self.exists)}: " if self.exists else ""
        return f"{prefix}{self.lhs} <= {self.rhs}"


@dataclass(frozen=True)
class Formula:
    universal: str
    clauses: Tuple[Clause, ...]

    def __str__(self):
        body = " and ".join(f"({c})" for c in self.clauses)
        return f"for all {','.join(self.universal)}: {body}"


def axes_for(n: int, names: str) -> Dict[str, np.ndarray]:
    """ One broadcastable arange per variable """
    dims = len(names)
    return {v: np.arange(n).reshape([n if k == i else 1 for i in range(dims)])
            for k, v in enumerate(names)}


def word(S: OrderedSemigroup, letters: str, axes: Dict[str, np.ndarray]) -> np.ndarray:
    return reduce(lambda acc, v: S.table[acc, axes[v]], letters[1:], axes[letters[0]])


def clause_table(S: OrderedSemigroup, universal: str, clause: Clause) -> np.ndarray:
    """
    Boolean array of shape (n,)*len(universal) + (n**len(exists),):
    entry [u..., k] says the k-th existential tuple (row-major) satisfies the clause at u.
    """
    n = S.n
    names = universal + clause.exists
    axes = axes_for(n, names)
    sat = S.leq[word(S, clause.lhs, axes), word(S, clause.rhs, axes)]
    sat = np.broadcast_to(sat, (n,) * len(names))
    return sat.reshape((n,) * len(universal) + (-1,))


def satisfied(S: OrderedSemigroup, universal: str, clause: Clause) -> np.ndarray:
    """ For each universal tuple: is some existential tuple a witness? """
    return clause_table(S, universal, clause).any(axis=-1)


def evaluate(S: OrderedSemigroup, formula: Formula) -> Verdict:
    n = S.n
    ok = np.ones((n,) * len(formula.universal), dtype=bool)
    firsts = []
    for clause in formula.clauses:
        table = clause_table(S, formula.universal, clause)
        ok &= table.any(axis=-1)
        firsts.append((clause, table.argmax(axis=-1)))

    if not ok.all():
        # argwhere walks in C order, which is lexicographic on the universal tuple
        return Verdict.failed(tuple(np.argwhere(~ok)[0]))

    if not any(c.exists for c in formula.clauses):
        return Verdict.passed()

    witnesses = {}
    for point in np.ndindex(*ok.shape):
        found: Tuple[int, ...] = ()
        for clause, first in firsts:
            if clause.exists:
                flat = int(first[point])
                found += tuple(int(v) for v in np.unravel_index(flat, (n,) * len(clause.exists)))
        witnesses[tuple(int(p) for p in point)] = found
    return Verdict.passed(witnesses)


def holds_at(S: OrderedSemigroup, formula: Formula, point: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """
    Plain-loop evaluation at one universal tuple. Returns the first witness
    (concatenated over clauses) or None when no witness exists.
    Shares nothing with the vectorized path, so it can re-check verdicts.
    """
    env = dict(zip(formula.universal, point))
    found: Tuple[int, ...] = ()
    for clause in formula.clauses:
        hit = None
        for choice in product(range(S.n), repeat=len(clause.exists)):
            local = {**env, **dict(zip(clause.exists, choice))}
            lhs = S.product(*[local[v] for v in clause.lhs])
            rhs = S.product(*[local[v] for v in clause.rhs])
            if S.le(lhs, rhs):
                hit = choice
                break
        if hit is None:
            return None
        found += tuple(hit)
    return found
