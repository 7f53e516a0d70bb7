"""
Corpus driver: every applicable theorem over every enumerated idempotent
ordered structure up to a size. Structures travel to workers as plain
structure documents and entries are re-sorted by id, so a serial run and a
process-pool run write the same report.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List

from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from Core.validator import validate
from Properties.theorems import verify_all
from Search.enumeration import enumerate_structures
from Utils.errors import SizeBoundError, console
from Utils.model import EnumerationConfig, PropertyId
from Utils.serialize import report_to_dict, serialize
from Utils.settings import MAX_ENUMERATION


def corpus_documents(n_max: int, up_to_iso: bool = False) -> List[Dict[str, Any]]:
    if n_max > MAX_ENUMERATION:
        raise SizeBoundError("corpus", n_max, MAX_ENUMERATION)
    docs = []
    for n in range(1, n_max + 1):
        cfg = EnumerationConfig(n, require=PropertyId.IDEMPOTENT_ORDERED, up_to_iso=up_to_iso)
        docs.extend(serialize(S) for S in enumerate_structures(cfg))
    return docs


def verify_document(doc: Dict[str, Any]) -> Dict[str, Any]:
    """ Worker: one structure document in, one corpus entry out """
    S = validate(doc)
    reports = [report_to_dict(r, S.name) for r in verify_all(S)]
    return {
        "id": S.name,
        "structure": doc,
        "reports": reports,
        "violations": [r["theorem"] for r in reports if not r["relation_respected"]],
    }


def _drive(docs: List[Dict[str, Any]], workers: int) -> Iterable[Dict[str, Any]]:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(verify_document, docs, chunksize=16)
    else:
        yield from map(verify_document, docs)


def corpus(n_max: int, workers: int = 1, up_to_iso: bool = False, progress: bool = False) -> Dict[str, Any]:
    docs = corpus_documents(n_max, up_to_iso)
    entries = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=console,
        disable=not progress,
    ) as bar:
        task = bar.add_task(f"[green]Verifying {len(docs)} structures...", total=len(docs))
        for entry in _drive(docs, workers):
            entries.append(entry)
            bar.advance(task)

    entries.sort(key=lambda e: e["id"])
    violations = [{"id": e["id"], "theorem": t} for e in entries for t in e["violations"]]
    return {
        "n_max": n_max,
        "up_to_iso": up_to_iso,
        "structures": len(entries),
        "violations": violations,
        "entries": entries,
    }
