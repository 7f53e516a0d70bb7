"""
Usage: osgw.py [-h] [-v] <verb> [options]

Ordered Semigroup Workbench

Verbs:
    check FILE [--property P ...]       Decide properties (all of them by default)
    classify FILE                       Every property plus the least complete semilattice decomposition
    green FILE [--relation R]           Green's relations L, R, J, H
    decompose FILE [--partition ...]    Semilattice decomposition and class reports
    verify FILE (--theorem T | --all)   Check theorems on one structure
    power FILE [--extend S --map ...]   Finite-power construction of the table in FILE
    build TEMPLATE [PARAM ...]          Write a fixture structure
    enumerate --n N                     Enumerate (ordered) semigroups
    counterexample --hyp P --concl Q    Search for the smallest counterexample to a claim
    corpus --n-max N                    Run every theorem over the enumerated corpus

Common options:
    --json        Machine-readable output on stdout
    --assert      Exit 3 when a verdict fails or a theorem is not respected

Exit codes: 0 ok, 2 invalid input, 3 assertion failed, 4 size bound exceeded.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from Constructions.builders import build
from Constructions.power import extend_hom, power_construction
from Core.validator import validate_plain
from Decompose.decomposition import classify_decomposition, decompose
from Properties.deciders import check
from Properties.theorems import applicable_theorems, verify_theorem
from Relations.congruence import congruence_kind, least_complete_semilattice_congruence
from Relations.green import green, j_via_sandwich
from Search.corpus import corpus
from Search.counterexample import find_counterexample
from Search.enumeration import enumerate_structures
from Utils import report_printer as rp
from Utils.errors import (SizeBoundError, StructureInvalid, WorkbenchError, describe, error,
                          info, reset_errors, warning)
from Utils.model import (ClaimSpec, EnumerationConfig, GreenRelation, OrderedSemigroup,
                         Partition, PlainSemigroup, PropertyId, TheoremId)
from Utils.serialize import (classification_to_dict, decomposition_to_dict, dumps, flags_to_dict,
                             hom_extension_to_dict, load_structure, partition_to_dict,
                             property_result_to_dict, report_to_dict, serialize, serialize_plain,
                             verdict_to_dict, write_structure)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_ASSERT = 3
EXIT_SIZE = 4

VERSION = "0.3"


# =====================================================================
# Argument parsing
# =====================================================================

def _property(text: str) -> PropertyId:
    try:
        return PropertyId.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown property '{text}' (choose from {', '.join(p.value for p in PropertyId)})")


def _theorem(text: str) -> TheoremId:
    try:
        return TheoremId.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown theorem '{text}' (choose from {', '.join(t.value for t in TheoremId)})")


def _relation(text: str) -> GreenRelation:
    try:
        return GreenRelation(text.strip().upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown relation '{text}' (choose from L, R, J, H)")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")


def build_parser() -> argparse.ArgumentParser:
    cli = argparse.ArgumentParser(prog="osgw.py", description="Ordered Semigroup Workbench")
    cli.add_argument("-v", "--version", action="version", version=VERSION)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=False, help="JSON output on stdout")
    common.add_argument("--assert", dest="assert_", action="store_true", default=False,
                        help="exit 3 when a verdict fails")

    verbs = cli.add_subparsers(dest="verb", metavar="verb", required=True)

    p = verbs.add_parser("check", parents=[common], help="decide properties")
    p.add_argument("filename")
    p.add_argument("--property", dest="properties", type=_property, action="append",
                   help="property id, repeatable (default: every property)")
    p.add_argument("--witnesses", action="store_true", default=False, help="list existential witnesses")

    p = verbs.add_parser("classify", parents=[common], help="all properties and the decomposition headline")
    p.add_argument("filename")

    p = verbs.add_parser("green", parents=[common], help="Green's relations")
    p.add_argument("filename")
    p.add_argument("--relation", dest="relations", type=_relation, action="append",
                   help="L, R, J or H, repeatable (default: all four)")
    p.add_argument("--sandwich", action="store_true", default=False,
                   help="also compute J through sandwich sets (idempotent ordered only)")

    p = verbs.add_parser("decompose", parents=[common], help="semilattice decomposition")
    p.add_argument("filename")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--partition", type=_int_list, help="class_of list, e.g. 0,0,1")
    source.add_argument("--relation", type=_relation, help="decompose by a Green relation")
    p.add_argument("--dot", metavar="PATH", help="write the quotient's Hasse diagram as DOT")

    p = verbs.add_parser("verify", parents=[common], help="check theorems")
    p.add_argument("filename")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem", dest="theorems", type=_theorem, action="append", help="theorem id, repeatable")
    which.add_argument("--all", action="store_true", default=False, help="every applicable theorem")

    p = verbs.add_parser("power", parents=[common], help="finite-power construction")
    p.add_argument("filename", help="structure whose table is the base (its order is ignored)")
    p.add_argument("--extend", metavar="TARGET", help="extend a homomorphism into TARGET")
    p.add_argument("--map", type=_int_list, help="images of the base elements, e.g. 0,2")
    p.add_argument("--out", metavar="PATH", help="write the constructed structure")

    p = verbs.add_parser("build", parents=[common], help="build a fixture")
    p.add_argument("template")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", metavar="PATH", help="write the structure file")

    p = verbs.add_parser("enumerate", parents=[common], help="enumerate small semigroups")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--plain", action="store_true", default=False, help="tables only, no order")
    p.add_argument("--up-to-iso", action="store_true", default=False)
    p.add_argument("--require", type=_property, help="keep structures with this property")
    p.add_argument("--count", action="store_true", default=False, help="print only the count")

    p = verbs.add_parser("counterexample", parents=[common], help="search a counterexample to a claim")
    p.add_argument("--hyp", type=_property, action="append", default=[])
    p.add_argument("--concl", type=_property, action="append", default=[])
    p.add_argument("--restrict", action="store_true", default=False,
                   help="only idempotent ordered structures")
    p.add_argument("--n-max", type=_positive, default=3)
    p.add_argument("--labeled", action="store_true", default=False,
                   help="search labeled structures instead of canonical ones")

    p = verbs.add_parser("corpus", parents=[common], help="every theorem over the enumerated corpus")
    p.add_argument("--n-max", type=_positive, default=3)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--up-to-iso", action="store_true", default=False)
    p.add_argument("--out", metavar="PATH", help="write the JSON report")
    return cli


# =====================================================================
# Helpers
# =====================================================================

def emit(doc) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def as_plain(S: OrderedSemigroup) -> PlainSemigroup:
    return validate_plain(S.name, S.table.tolist())


# =====================================================================
# Verbs
# =====================================================================

def run_check(args) -> int:
    S = load_structure(args.filename)
    props = args.properties or list(PropertyId)
    verdicts = {p: check(S, p) for p in props}
    if args.json:
        docs = [property_result_to_dict(S, p, v) for p, v in verdicts.items()]
        emit(docs[0] if len(docs) == 1 else docs)
    elif len(verdicts) == 1:
        (p, v), = verdicts.items()
        rp.print_verdict(S, p, v, show_witnesses=args.witnesses)
    else:
        rp.print_classification_table(S, verdicts)
    failed = any(not v.holds for v in verdicts.values())
    return EXIT_ASSERT if args.assert_ and failed else EXIT_OK


def run_classify(args) -> int:
    S = load_structure(args.filename)
    verdicts = {p: check(S, p) for p in PropertyId}
    D = decompose(S, least_complete_semilattice_congruence(S))
    C = classify_decomposition(S, D)
    if args.json:
        emit({
            "structure": S.name,
            "properties": {p.value: verdict_to_dict(v) for p, v in verdicts.items()},
            "decomposition": decomposition_to_dict(D),
            "classification": classification_to_dict(C),
        })
    else:
        rp.print_structure(S)
        rp.print_classification_table(S, verdicts)
        rp.print_decomposition(D, C)
    return EXIT_OK


def run_green(args) -> int:
    S = load_structure(args.filename)
    relations = args.relations or list(GreenRelation)
    parts = {rel.value: green(S, rel) for rel in relations}
    if args.sandwich:
        parts["J (sandwich)"] = j_via_sandwich(S)
    if args.json:
        emit({"structure": S.name, **{name: partition_to_dict(P) for name, P in parts.items()}})
    else:
        for name, P in parts.items():
            rp.print_partition(S, P, f"{name} on {S.name}")
    return EXIT_OK


def run_decompose(args) -> int:
    S = load_structure(args.filename)
    if args.partition is not None:
        if len(args.partition) != S.n:
            error(f"--partition needs {S.n} entries, got {len(args.partition)}", args.filename)
            return EXIT_INVALID
        P = Partition(tuple(args.partition))
    elif args.relation is not None:
        P = green(S, args.relation)
    else:
        P = least_complete_semilattice_congruence(S)

    D = decompose(S, P)
    C = classify_decomposition(S, D)
    flags = congruence_kind(S, P)
    if not D.complete:
        warning(f"{P} is a semilattice congruence but not a complete one", S.name)
    if args.dot:
        Path(args.dot).write_text(rp.hasse_dot(D), encoding="utf-8")
        info(f"DOT written to {args.dot}")
    if args.json:
        emit({
            **decomposition_to_dict(D),
            "flags": flags_to_dict(flags),
            "classification": classification_to_dict(C),
        })
    else:
        rp.print_flags(flags)
        rp.print_decomposition(D, C)
    failed = not all(c.holds for c in D.condition_checks)
    return EXIT_ASSERT if args.assert_ and failed else EXIT_OK


def run_verify(args) -> int:
    S = load_structure(args.filename)
    theorems = applicable_theorems(S) if args.all else args.theorems
    reports = [verify_theorem(S, t) for t in theorems]
    if args.json:
        emit([report_to_dict(r, S.name) for r in reports])
    else:
        rp.print_reports(reports, S.name)
    failed = any(not r.relation_respected for r in reports)
    return EXIT_ASSERT if args.assert_ and failed else EXIT_OK


def run_power(args) -> int:
    base = as_plain(load_structure(args.filename))
    P = power_construction(base)
    extension = None
    if args.extend:
        target = load_structure(args.extend)
        if args.map is None:
            error("--extend needs --map", args.filename)
            return EXIT_INVALID
        extension = extend_hom(base, target, args.map)
    if args.out:
        write_structure(P, args.out)
        info(f"{P.name} written to {args.out}")
    if args.json:
        doc = {"structure": serialize(P), "idempotent_ordered": verdict_to_dict(check(P, PropertyId.IDEMPOTENT_ORDERED))}
        if extension is not None:
            doc["extension"] = hom_extension_to_dict(extension)
        emit(doc)
    else:
        rp.print_structure(P)
        rp.print_verdict(P, PropertyId.IDEMPOTENT_ORDERED, check(P, PropertyId.IDEMPOTENT_ORDERED))
        if extension is not None:
            rp.print_hom_extension(extension)
    failed = extension is not None and not (extension.hom_law.holds and extension.diagram.holds
                                            and extension.monotone.holds)
    return EXIT_ASSERT if args.assert_ and failed else EXIT_OK


def run_build(args) -> int:
    S = build(args.template, *args.params)
    if args.out:
        write_structure(S, args.out)
        info(f"{S.name} written to {args.out}")
    if args.json:
        emit(serialize(S))
    else:
        rp.print_structure(S)
    return EXIT_OK


def run_enumerate(args) -> int:
    if args.plain and args.require is not None:
        error("--require needs ordered structures, drop --plain")
        return EXIT_INVALID
    cfg = EnumerationConfig(args.n, require=args.require, up_to_iso=args.up_to_iso, plain_only=args.plain)
    found = list(enumerate_structures(cfg))
    if args.count:
        if args.json:
            emit({"n": args.n, "count": len(found)})
        else:
            rp.out.print(f"[cyan]{len(found)}[/cyan] structure(s) of size {args.n}")
        return EXIT_OK
    if args.json:
        emit([serialize_plain(S) if args.plain else serialize(S) for S in found])
    else:
        for S in found:
            if args.plain:
                rp.out.print(f"{S.name}: {S.table.tolist()}")
            else:
                rp.out.print(f"{S.name}: {S.table.tolist()} order {rp.covers(S.leq)}")
        rp.out.print(f"[cyan]{len(found)}[/cyan] structure(s) of size {args.n}")
    return EXIT_OK


def run_counterexample(args) -> int:
    claim = ClaimSpec(frozenset(args.hyp), frozenset(args.concl), args.restrict)
    found = find_counterexample(claim, args.n_max, up_to_iso=not args.labeled)
    if args.json:
        emit(None if found is None else {
            "structure": serialize(found.structure),
            "property": found.property.value,
            **verdict_to_dict(found.verdict),
        })
    else:
        rp.print_counterexample(found)
    return EXIT_ASSERT if args.assert_ and found is not None else EXIT_OK


def run_corpus(args) -> int:
    report = corpus(args.n_max, workers=args.workers, up_to_iso=args.up_to_iso, progress=not args.json)
    if args.out:
        Path(args.out).write_text(dumps(report) + "\n", encoding="utf-8")
        info(f"corpus report written to {args.out}")
    if args.json:
        emit({k: v for k, v in report.items() if k != "entries"})
    else:
        rp.print_corpus_summary(report)
    return EXIT_ASSERT if args.assert_ and report["violations"] else EXIT_OK


VERBS = {
    "check": run_check,
    "classify": run_classify,
    "green": run_green,
    "decompose": run_decompose,
    "verify": run_verify,
    "power": run_power,
    "build": run_build,
    "enumerate": run_enumerate,
    "counterexample": run_counterexample,
    "corpus": run_corpus,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    reset_errors()
    where = getattr(args, "filename", None)
    try:
        return VERBS[args.verb](args)
    except StructureInvalid as e:
        rp.print_validation_errors(e, where or "")
        return EXIT_INVALID
    except SizeBoundError as e:
        error(describe(e), where)
        return EXIT_SIZE
    except WorkbenchError as e:
        error(describe(e), where)
        return EXIT_INVALID
    except (OSError, ValueError) as e:
        error(describe(e), where)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())

# Example usage:
# python osgw.py check ../Test/valid_tests/ch3.json --property rectangular --assert
# python osgw.py verify ../Test/valid_tests/lz2.json --all --json
# python osgw.py enumerate --n 3 --up-to-iso
