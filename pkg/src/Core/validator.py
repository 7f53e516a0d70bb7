"""
Structure validator.
Turns a raw structure document (the parsed JSON file) into an OrderedSemigroup,
or reports every broken invariant with a witness.
"""

from typing import Any, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from Utils.errors import SizeBoundError, StructureInvalid
from Utils.model import OrderedSemigroup, PlainSemigroup, ValidationError
from Utils.settings import MAX_ELEMENTS, MAX_POWER_ELEMENTS

# Documents marked with a construction may go past the plain file bound
CONSTRUCTION_BOUNDS = {"power": MAX_POWER_ELEMENTS}


def associativity_witness(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """ First (i, j, k) with (ij)k != i(jk), or None """
    left = table[table]          # [i, j, k] -> T[T[i, j], k]
    right = table[:, table]      # [i, j, k] -> T[i, T[j, k]]
    bad = np.argwhere(left != right)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def compatibility_witness(table: np.ndarray, leq: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """ First (a, b, c) with a <= b but not (ca <= cb and ac <= bc) """
    n = table.shape[0]
    A, B, C = np.indices((n, n, n))
    keeps = leq[table[C, A], table[C, B]] & leq[table[A, C], table[B, C]]
    bad = np.argwhere(leq[A, B] & ~keeps)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def order_closure(n: int, pairs) -> np.ndarray:
    """ Reflexive-transitive closure of the given pairs """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    closure = nx.transitive_closure(graph, reflexive=True)
    leq = np.zeros((n, n), dtype=bool)
    for i, j in closure.edges:
        leq[i, j] = True
    return leq


class StructureValidator:
    """
    Collects ValidationErrors for one raw document.
    Shape problems stop the check early (nothing algebraic can be evaluated on a
    malformed table); algebraic problems are all collected.
    """

    def __init__(self, raw: Mapping[str, Any], bound: int = MAX_ELEMENTS):
        self.raw = raw
        self.bound = bound
        self.errors: List[ValidationError] = []
        self.n = 0
        self.table: Optional[np.ndarray] = None
        self.leq: Optional[np.ndarray] = None

    def report(self, kind: str, witness=(), message: str = ""):
        self.errors.append(ValidationError(kind, tuple(int(w) for w in witness), message))

    # =========================================================================
    # SHAPE
    # =========================================================================

    def _check_size(self) -> bool:
        n = self.raw.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            self.report("MalformedTable", (), f"'n' must be a positive integer, got {n!r}")
            return False
        bound = self.bound
        construction = self.raw.get("construction")
        if construction is not None:
            if construction not in CONSTRUCTION_BOUNDS:
                self.report("MalformedTable", (), f"unknown construction {construction!r}")
                return False
            bound = max(bound, CONSTRUCTION_BOUNDS[construction])
        if n > bound:
            raise SizeBoundError("structure", n, bound)
        self.n = n
        return True

    def _check_table(self) -> bool:
        n = self.n
        rows = self.raw.get("table")
        if not isinstance(rows, list) or len(rows) != n:
            self.report("MalformedTable", (), f"'table' must have {n} rows")
            return False
        ok = True
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                self.report("MalformedTable", (i,), f"row {i} must have {n} entries")
                ok = False
                continue
            for j, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    self.report("MalformedTable", (i, j), f"entry {value!r} is not an integer")
                    ok = False
                elif not 0 <= value < n:
                    self.report("IndexOutOfRange", (i, j), f"entry {value} outside [0, {n})")
                    ok = False
        if ok:
            self.table = np.array(rows, dtype=np.int64)
        return ok

    def _check_order(self) -> bool:
        n = self.n
        if "leq" in self.raw:
            # Full matrix: taken as is, so reflexivity/transitivity are real checks
            matrix = self.raw["leq"]
            if (not isinstance(matrix, list) or len(matrix) != n
                    or any(not isinstance(r, list) or len(r) != n for r in matrix)):
                self.report("MalformedTable", (), f"'leq' must be a {n}x{n} matrix")
                return False
            ok = True
            for i, row in enumerate(matrix):
                for j, value in enumerate(row):
                    if not (isinstance(value, bool) or (isinstance(value, int) and value in (0, 1))):
                        self.report("MalformedTable", (i, j), f"leq entry {value!r} is not 0/1")
                        ok = False
            if ok:
                self.leq = np.array(matrix, dtype=bool)
            return ok

        pairs = self.raw.get("order", [])
        if not isinstance(pairs, list):
            self.report("MalformedTable", (), "'order' must be a list of pairs")
            return False
        ok = True
        clean = []
        for k, pair in enumerate(pairs):
            if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                    or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)):
                self.report("MalformedTable", (k,), f"order entry {pair!r} is not a pair of integers")
                ok = False
            elif not all(0 <= v < n for v in pair):
                self.report("IndexOutOfRange", (k,), f"order pair {pair} outside [0, {n})")
                ok = False
            else:
                clean.append((pair[0], pair[1]))
        if ok:
            self.leq = order_closure(n, clean)
        return ok

    def _check_labels(self) -> bool:
        labels = self.raw.get("labels")
        if labels is None:
            return True
        if not isinstance(labels, list) or len(labels) != self.n or not all(isinstance(s, str) for s in labels):
            self.report("MalformedTable", (), f"'labels' must be {self.n} strings")
            return False
        return True

    # =========================================================================
    # ALGEBRA
    # =========================================================================

    def _check_associativity(self):
        witness = associativity_witness(self.table)
        if witness:
            self.report("NonAssociative", witness, "(ij)k != i(jk)")

    def _check_partial_order(self):
        leq = self.leq
        n = self.n
        missing = np.flatnonzero(~leq.diagonal())
        if len(missing):
            self.report("NotReflexive", (missing[0],), "a <= a fails")
        both = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
        if len(both):
            self.report("NotAntisymmetric", both[0], "a <= b and b <= a with a != b")
        A, B, C = np.indices((n, n, n))
        broken = np.argwhere(leq[A, B] & leq[B, C] & ~leq[A, C])
        if len(broken):
            self.report("NotTransitive", broken[0], "a <= b <= c but not a <= c")

    def _check_compatibility(self):
        witness = compatibility_witness(self.table, self.leq)
        if witness:
            self.report("Incompatible", witness, "a <= b but ca, cb or ac, bc out of order")

    def check(self) -> List[ValidationError]:
        """ Runs every check, returns the (possibly empty) error list """
        self.errors = []
        if not self._check_size():
            return self.errors
        shaped = self._check_table()
        shaped = self._check_order() and shaped
        shaped = self._check_labels() and shaped
        if not shaped:
            return self.errors
        self._check_associativity()
        self._check_partial_order()
        self._check_compatibility()
        return self.errors

    def build(self) -> OrderedSemigroup:
        errors = self.check()
        if errors:
            raise StructureInvalid(errors, str(self.raw.get("name", "")))
        labels = self.raw.get("labels")
        return OrderedSemigroup(
            name=str(self.raw.get("name", "unnamed")),
            table=self.table,
            leq=self.leq,
            labels=tuple(labels) if labels is not None else None,
            description=str(self.raw.get("description", "")),
            construction=str(self.raw.get("construction", "")),
        )


def validate(raw: Mapping[str, Any], bound: int = MAX_ELEMENTS) -> OrderedSemigroup:
    """ Raises StructureInvalid (with every error) or returns the structure """
    return StructureValidator(raw, bound).build()


def validate_plain(name: str, table) -> PlainSemigroup:
    """ A table with no order: only shape and associativity matter """
    n = len(table)
    raw = {"name": name, "n": n, "table": [list(map(int, row)) for row in table], "order": []}
    checker = StructureValidator(raw)
    errors = [e for e in checker.check() if e.kind in ("MalformedTable", "IndexOutOfRange", "NonAssociative")]
    if errors:
        raise StructureInvalid(errors, name)
    return PlainSemigroup(name=name, table=checker.table)
