"""
JSON codecs: structure files, partitions, verdicts and theorem reports.
Key order is fixed here and nowhere else, so JSON output is schema-stable.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from Utils.errors import StructureInvalid
from Utils.model import (ClassReport, Classification, CongruenceFlags, Decomposition,
                         HomExtension, OrderedSemigroup, Partition, PlainSemigroup,
                         PropertyId, TheoremReport, ValidationError, Verdict)


# =====================================================================
# Structure files
# =====================================================================

def serialize(S: OrderedSemigroup) -> Dict[str, Any]:
    """ Full reflexive-transitive order, so validate(serialize(S)) == S """
    doc: Dict[str, Any] = {
        "name": S.name,
        "n": S.n,
        "table": [[int(v) for v in row] for row in S.table],
        "order": [[i, j] for i in range(S.n) for j in range(S.n) if S.leq[i, j]],
    }
    if S.labels is not None:
        doc["labels"] = list(S.labels)
    if S.description:
        doc["description"] = S.description
    if S.construction:
        doc["construction"] = S.construction
    return doc


def serialize_plain(B: PlainSemigroup) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "name": B.name,
        "n": B.n,
        "table": [[int(v) for v in row] for row in B.table],
        "order": [[i, i] for i in range(B.n)],
    }
    if B.labels is not None:
        doc["labels"] = list(B.labels)
    return doc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def read_document(path) -> Dict[str, Any]:
    """ Parses a structure file; unreadable JSON counts as a malformed structure """
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise StructureInvalid([ValidationError("MalformedTable", (e.lineno, e.colno), e.msg)], path.name)
    if not isinstance(doc, dict):
        raise StructureInvalid([ValidationError("MalformedTable", (), "top level must be an object")], path.name)
    return doc


def load_structure(path) -> OrderedSemigroup:
    from Core.validator import validate
    return validate(read_document(path))


def write_structure(S: OrderedSemigroup, path) -> None:
    Path(path).write_text(dumps(serialize(S)) + "\n", encoding="utf-8")


# =====================================================================
# Results
# =====================================================================

def partition_to_dict(P: Partition) -> Dict[str, Any]:
    return {"class_of": list(P.class_of)}


def flags_to_dict(flags: CongruenceFlags) -> Dict[str, Any]:
    doc: Dict[str, Any] = {name: getattr(flags, name) for name in CongruenceFlags.FLAGS}
    doc["counterexamples"] = {name: _tuple(flags.counterexamples.get(name)) for name in CongruenceFlags.FLAGS}
    return doc


def _tuple(t) -> Optional[list]:
    return None if t is None else [int(v) for v in t]


def verdict_to_dict(v: Verdict) -> Dict[str, Any]:
    witnesses = None
    if v.witnesses is not None:
        witnesses = [{"at": list(k), "witness": list(w)} for k, w in sorted(v.witnesses.items())]
    return {
        "holds": v.holds,
        "witnesses": witnesses,
        "counterexample": _tuple(v.counterexample),
    }


def property_result_to_dict(S: OrderedSemigroup, p: PropertyId, v: Verdict) -> Dict[str, Any]:
    return {"structure": S.name, "property": p.value, **verdict_to_dict(v)}


def report_to_dict(report: TheoremReport, structure: str = "") -> Dict[str, Any]:
    return {
        "structure": structure,
        "theorem": report.theorem.value,
        "shape": report.shape.value,
        "relation_respected": report.relation_respected,
        "conditions": [
            {"label": c.label, "value": c.value, "verdict": verdict_to_dict(c.verdict)}
            for c in report.conditions
        ],
    }


def decomposition_to_dict(D: Decomposition) -> Dict[str, Any]:
    labels = ["{" + ",".join(str(m) for m in sorted(c)) + "}" for c in D.congruence.classes]
    quotient = {
        "name": f"{D.base.name}/congruence",
        "n": len(labels),
        "table": [[int(v) for v in row] for row in D.quotient_table],
        "order": [[i, j] for i in range(len(labels)) for j in range(len(labels)) if D.quotient_order[i, j]],
        "labels": labels,
    }
    return {
        "structure": D.base.name,
        "class_of": list(D.congruence.class_of),
        "quotient": quotient,
        "conditions": [{"holds": c.holds, "witness": _tuple(c.witness)} for c in D.condition_checks],
        "complete": D.complete,
    }


def class_report_to_dict(report: ClassReport) -> Dict[str, Any]:
    return {
        "class_id": report.class_id,
        "members": list(report.members),
        "verdicts": {p.value: verdict_to_dict(v) for p, v in report.verdicts.items()},
    }


def classification_to_dict(C: Classification) -> Dict[str, Any]:
    return {
        "headline": C.headline,
        "complete": C.complete,
        "uniform": [p.value for p in C.uniform],
        "classes": [class_report_to_dict(r) for r in C.reports],
    }


def hom_extension_to_dict(E: HomExtension) -> Dict[str, Any]:
    return {
        "f": list(E.f),
        "phi": [{"subset": mask, "image": image} for mask, image in sorted(E.phi.items())],
        "hom_law": {"holds": E.hom_law.holds, "witness": _tuple(E.hom_law.witness)},
        "diagram": {"holds": E.diagram.holds, "witness": _tuple(E.diagram.witness)},
        "monotone": {"holds": E.monotone.holds, "witness": _tuple(E.monotone.witness)},
    }
