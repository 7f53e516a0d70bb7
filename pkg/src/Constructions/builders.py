"""
Fixture families. Every builder writes a raw document and sends it through
the validator, so a builder can never hand out a structure the loader would
reject.
"""

from inspect import signature
from pathlib import Path
from typing import Callable, Dict, List

from Utils.errors import SizeBoundError, UnknownTemplate
from Utils.model import OrderedSemigroup
from Utils.serialize import load_structure
from Core.validator import validate
from Utils.settings import MAX_BUILDER


def _raw(name: str, table: List[List[int]], order=(), description: str = "", labels=None) -> dict:
    doc = {"name": name, "n": len(table), "table": table, "order": [list(p) for p in order]}
    if labels is not None:
        doc["labels"] = labels
    if description:
        doc["description"] = description
    return doc


def _bounded(name: str, n: int):
    if n > MAX_BUILDER:
        raise SizeBoundError(name, n, MAX_BUILDER)


def trivial() -> OrderedSemigroup:
    return validate(_raw("T1", [[0]], description="one element"))


def left_zero(n: int) -> OrderedSemigroup:
    _bounded("left_zero", n)
    return validate(_raw(f"LZ{n}", [[i] * n for i in range(n)], description="x*y = x, equality order"))


def right_zero(n: int) -> OrderedSemigroup:
    _bounded("right_zero", n)
    return validate(_raw(f"RZ{n}", [list(range(n)) for _ in range(n)], description="x*y = y, equality order"))


def min_chain(n: int) -> OrderedSemigroup:
    _bounded("min_chain", n)
    table = [[min(i, j) for j in range(n)] for i in range(n)]
    chain = [(i, i + 1) for i in range(n - 1)]
    return validate(_raw(f"CH{n}", table, chain, "x*y = min(x, y), chain order"))


def saturated_add(n: int) -> OrderedSemigroup:
    _bounded("saturated_add", n)
    table = [[min(i + j, n - 1) for j in range(n)] for i in range(n)]
    chain = [(i, i + 1) for i in range(n - 1)]
    return validate(_raw(f"SAT{n}", table, chain, "x*y = min(x + y, n - 1), chain order"))


def rectangular_band(p: int, q: int) -> OrderedSemigroup:
    """ (i, j) is element i*q + j and (i, j)(k, l) = (i, l) """
    _bounded("rectangular_band", p * q)
    n = p * q
    table = [[(x // q) * q + y % q for y in range(n)] for x in range(n)]
    labels = [f"({x // q},{x % q})" for x in range(n)]
    return validate(_raw(f"RB{p}x{q}", table, (), "(i,j)(k,l) = (i,l), equality order", labels))


def cyclic(n: int) -> OrderedSemigroup:
    _bounded("cyclic", n)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate(_raw(f"Z{n}", table, (), "addition mod n, equality order"))


def semilattice(n: int) -> OrderedSemigroup:
    _bounded("semilattice", n)
    table = [[min(i, j) for j in range(n)] for i in range(n)]
    return validate(_raw(f"SL{n}", table, (), "x*y = min(x, y), equality order"))


def from_file(path) -> OrderedSemigroup:
    return load_structure(Path(path))


BUILDERS: Dict[str, Callable[..., OrderedSemigroup]] = {
    "trivial": trivial,
    "left_zero": left_zero,
    "right_zero": right_zero,
    "min_chain": min_chain,
    "saturated_add": saturated_add,
    "rectangular_band": rectangular_band,
    "cyclic": cyclic,
    "semilattice": semilattice,
    "from_file": from_file,
}


def build(template: str, *params) -> OrderedSemigroup:
    """ build("min-chain", 3) == min_chain(3); '-' and '_' are interchangeable """
    key = template.strip().lower().replace("-", "_")
    if key not in BUILDERS:
        raise UnknownTemplate(f"unknown template '{template}', expected one of {', '.join(sorted(BUILDERS))}")
    builder = BUILDERS[key]
    try:
        signature(builder).bind(*params)
    except TypeError:
        raise UnknownTemplate(f"template '{template}' takes ({', '.join(signature(builder).parameters)}), got {list(params)}")
    if key == "from_file":
        return builder(*params)
    return builder(*(int(p) for p in params))
