from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

# A subset of the elements of one fixed structure
Subset = FrozenSet[int]

# =====================================================================
# Enums
# =====================================================================

class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class GreenRelation(Enum):
    L = "L"
    R = "R"
    J = "J"
    H = "H"


class PropertyId(Enum):
    """ Every decidable property. Values are the command-line ids. """
    IDEMPOTENT_ORDERED = "idempotent-ordered"
    BAND = "band"
    RECTANGULAR = "rectangular"
    RECTANGULAR_SINGLE_WITNESS = "rectangular-single-witness"
    RECTANGULAR_SPLIT = "rectangular-split"
    LEFT_ZERO = "left-zero"
    RIGHT_ZERO = "right-zero"
    LEFT_SIMPLE = "left-simple"
    RIGHT_SIMPLE = "right-simple"
    T_SIMPLE = "t-simple"
    SIMPLE = "simple"
    LEFT_REGULAR = "left-regular"
    LEFT_REGULAR_MIRRORED = "left-regular-mirrored"
    LEFT_REGULAR_TWO_WITNESS = "left-regular-two-witness"
    ORDERED_LEFT_REGULAR = "ordered-left-regular"
    H_COMMUTATIVE = "h-commutative"
    H_COMMUTATIVE_TWO_SIDED = "h-commutative-two-sided"
    WEAKLY_COMMUTATIVE = "weakly-commutative"
    NORMAL = "normal"
    LEFT_NORMAL = "left-normal"
    RIGHT_NORMAL = "right-normal"

    @classmethod
    def parse(cls, text: str) -> "PropertyId":
        return cls(text.strip().lower().replace("_", "-"))


class TheoremId(Enum):
    POWER_BAND = "power-band"
    POWER_MONOTONE = "power-monotone"
    RECTANGULAR_EQUIVALENTS = "rectangular-equivalents"
    RECTANGULAR_DECOMPOSITION = "rectangular-decomposition"
    LEFT_ZERO_LEFT_SIMPLE = "left-zero-left-simple"
    LEFT_REGULAR_EQUIVALENTS = "left-regular-equivalents"
    LEFT_REGULAR_GREEN = "left-regular-green"
    LEFT_REGULAR_DECOMPOSITION = "left-regular-decomposition"
    H_COMMUTATIVE_EQUIVALENTS = "h-commutative-equivalents"
    WEAKLY_COMMUTATIVE_EQUIVALENTS = "weakly-commutative-equivalents"
    NORMAL_SANDWICH = "normal-sandwich"
    NORMAL_GREEN = "normal-green"
    LEFT_NORMAL_GREEN = "left-normal-green"
    RIGHT_NORMAL_GREEN = "right-normal-green"
    J_LEAST_CONGRUENCE = "j-least-congruence"
    ZERO_RECTANGULAR = "zero-rectangular"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        return cls(text.strip().lower().replace("_", "-"))


class TheoremShape(Enum):
    EQUIVALENCE = "iff"      # all conditions equal
    IMPLICATION = "implies"  # first condition implies every other one
    ASSERTION = "all"        # every condition must hold


# =====================================================================
# Structures
# =====================================================================

def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PlainSemigroup:
    """ A Cayley table without an order """
    name: str
    table: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen_array(self.table, np.int64))

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_band(self) -> bool:
        diag = self.table[np.arange(self.n), np.arange(self.n)]
        return bool((diag == np.arange(self.n)).all())

    def encoding(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.table.flat)

    def __eq__(self, other):
        if not isinstance(other, PlainSemigroup):
            return NotImplemented
        return self.encoding() == other.encoding()

    def __hash__(self):
        return hash(self.encoding())


@dataclass(frozen=True, eq=False)
class OrderedSemigroup:
    """
    table[i][j] = i*j, leq[i][j] means i <= j.
    Only built by the validator (or by code that already knows the invariants hold).
    """
    name: str
    table: np.ndarray
    leq: np.ndarray
    labels: Optional[Tuple[str, ...]] = None
    description: str = ""
    # "power" for P_f documents, which may exceed MAX_ELEMENTS
    construction: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen_array(self.table, np.int64))
        object.__setattr__(self, "leq", _frozen_array(self.leq, bool))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.n)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *factors: int) -> int:
        acc = factors[0]
        for f in factors[1:]:
            acc = self.table[acc, f]
        return int(acc)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def label(self, a: int) -> str:
        if self.labels:
            return self.labels[a]
        return str(a)

    def plain(self) -> PlainSemigroup:
        return PlainSemigroup(name=self.name, table=self.table, labels=self.labels)

    def encoding(self) -> Tuple[int, ...]:
        """ (table, leq) flattened; the canonical-form key """
        return tuple(int(v) for v in self.table.flat) + tuple(int(v) for v in self.leq.flat)

    def __eq__(self, other):
        if not isinstance(other, OrderedSemigroup):
            return NotImplemented
        return (self.name == other.name
                and self.encoding() == other.encoding()
                and self.labels == other.labels
                and self.description == other.description
                and self.construction == other.construction)

    def __hash__(self):
        return hash((self.name, self.encoding()))

    def __str__(self):
        return f"{self.name} (n={self.n})"


@dataclass(frozen=True)
class ValidationError:
    """ kind is one of KINDS, witness indexes into the raw input """
    kind: str
    witness: Tuple[int, ...] = ()
    message: str = ""

    KINDS = ("NonAssociative", "NotReflexive", "NotAntisymmetric", "NotTransitive",
             "Incompatible", "MalformedTable", "IndexOutOfRange")

    def __str__(self):
        return f"{self.kind} at {self.witness}: {self.message}" if self.message else f"{self.kind} at {self.witness}"


# =====================================================================
# Relations
# =====================================================================

@dataclass(frozen=True)
class Partition:
    """
    An equivalence relation. class_of is renumbered by first appearance,
    so two equal relations always have equal class_of tuples.
    """
    class_of: Tuple[int, ...]

    def __post_init__(self):
        renumber: Dict[int, int] = {}
        normal = tuple(renumber.setdefault(int(c), len(renumber)) for c in self.class_of)
        object.__setattr__(self, "class_of", normal)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def classes(self) -> Tuple[FrozenSet[int], ...]:
        buckets: List[List[int]] = [[] for _ in range(max(self.class_of, default=-1) + 1)]
        for element, cid in enumerate(self.class_of):
            buckets[cid].append(element)
        return tuple(frozenset(b) for b in buckets)

    @property
    def size(self) -> int:
        return max(self.class_of, default=-1) + 1

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def matrix(self) -> np.ndarray:
        c = np.array(self.class_of)
        return np.equal.outer(c, c)

    def refines(self, other: "Partition") -> bool:
        """ Every class of self sits inside a class of other """
        image: Dict[int, int] = {}
        for mine, theirs in zip(self.class_of, other.class_of):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def meet(self, other: "Partition") -> "Partition":
        """ Common refinement """
        keys: Dict[Tuple[int, int], int] = {}
        return Partition(tuple(keys.setdefault(k, len(keys))
                               for k in zip(self.class_of, other.class_of)))

    def first_difference(self, other: "Partition") -> Optional[Tuple[int, int]]:
        """ Lexicographically first pair related in exactly one of the two """
        for a in range(self.n):
            for b in range(self.n):
                if self.related(a, b) != other.related(a, b):
                    return (a, b)
        return None

    def __str__(self):
        return " | ".join("{" + ",".join(str(m) for m in sorted(c)) + "}" for c in self.classes)


@dataclass(frozen=True)
class CongruenceFlags:
    left_congruence: bool
    right_congruence: bool
    congruence: bool
    semilattice: bool
    complete_semilattice: bool
    counterexamples: Dict[str, Optional[Tuple[int, ...]]] = field(default_factory=dict)

    FLAGS = ("left_congruence", "right_congruence", "congruence", "semilattice", "complete_semilattice")


# =====================================================================
# Verdicts and reports
# =====================================================================

@dataclass(frozen=True)
class Verdict:
    """
    holds  -> counterexample is None
    !holds -> counterexample is a tuple (possibly empty) that re-checks as a failure
    witnesses maps each universal tuple to its existential witness tuple.
    """
    holds: bool
    witnesses: Optional[Dict[Tuple[int, ...], Tuple[int, ...]]] = None
    counterexample: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.holds and self.counterexample is not None:
            raise ValueError("a holding verdict cannot carry a counterexample")
        if not self.holds and self.counterexample is None:
            raise ValueError("a failing verdict needs a counterexample")

    @classmethod
    def passed(cls, witnesses=None) -> "Verdict":
        return cls(True, witnesses, None)

    @classmethod
    def failed(cls, counterexample) -> "Verdict":
        return cls(False, None, tuple(int(v) for v in counterexample))


@dataclass(frozen=True)
class ConditionValue:
    label: str
    value: bool
    verdict: Verdict


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    shape: TheoremShape
    conditions: Tuple[ConditionValue, ...]

    @property
    def relation_respected(self) -> bool:
        values = [c.value for c in self.conditions]
        if self.shape is TheoremShape.EQUIVALENCE:
            return all(values) or not any(values)
        if self.shape is TheoremShape.IMPLICATION:
            return not values[0] or all(values[1:])
        return all(values)


# =====================================================================
# Decompositions
# =====================================================================

@dataclass(frozen=True)
class ConditionCheck:
    holds: bool
    witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True, eq=False)
class Decomposition:
    base: OrderedSemigroup
    congruence: Partition
    quotient_table: np.ndarray
    quotient_order: np.ndarray      # [alpha][beta] means alpha <= beta, i.e. alpha = alpha*beta
    condition_checks: Tuple[ConditionCheck, ConditionCheck, ConditionCheck, ConditionCheck]

    @property
    def complete(self) -> bool:
        return self.condition_checks[3].holds


@dataclass(frozen=True)
class ClassReport:
    class_id: int
    members: Tuple[int, ...]
    verdicts: Dict[PropertyId, Verdict]


@dataclass(frozen=True)
class Classification:
    reports: Tuple[ClassReport, ...]
    uniform: Tuple[PropertyId, ...]
    headline: str
    complete: bool


# =====================================================================
# Constructions
# =====================================================================

@dataclass(frozen=True)
class HomExtension:
    """ phi maps subset bitmasks of B to elements of S """
    f: Tuple[int, ...]
    phi: Dict[int, int]
    hom_law: ConditionCheck
    diagram: ConditionCheck
    monotone: ConditionCheck


# =====================================================================
# Search
# =====================================================================

@dataclass(frozen=True)
class ClaimSpec:
    hypothesis: FrozenSet[PropertyId]
    conclusion: FrozenSet[PropertyId]
    restrict_to_idempotent_ordered: bool = False

    def __post_init__(self):
        object.__setattr__(self, "hypothesis", frozenset(self.hypothesis))
        object.__setattr__(self, "conclusion", frozenset(self.conclusion))
        if not self.hypothesis and not self.conclusion:
            raise ValueError("a claim needs properties on at least one side")


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    require: Optional[PropertyId] = None
    up_to_iso: bool = False
    plain_only: bool = False


@dataclass(frozen=True)
class Counterexample:
    structure: OrderedSemigroup
    property: PropertyId
    verdict: Verdict
