"""
Text rendering of every report with rich, and DOT output of quotient
semilattices with graphviz.
Everything here writes to stdout; diagnostics belong to Utils.errors.
"""

from typing import Dict, Iterable, List, Optional

import networkx as nx
from graphviz import Digraph
from rich.console import Console
from rich.table import Table
from rich.tree import Tree

from Utils.errors import StructureInvalid, console as err_console
from Utils.model import (Classification, CongruenceFlags, Counterexample, Decomposition,
                         HomExtension, OrderedSemigroup, Partition, PropertyId, TheoremReport,
                         Verdict)

out = Console()

OK = "✅"
FAIL = "❌"


def _mark(flag: bool) -> str:
    return OK if flag else FAIL


def _tuple(t) -> str:
    return "(" + ", ".join(str(v) for v in t) + ")" if t is not None else "-"


# =====================================================================
# Structures
# =====================================================================

def cayley_table(S: OrderedSemigroup) -> Table:
    table = Table(title=f"🧮 {S.name} (n={S.n})")
    table.add_column("*", style="bold cyan", justify="right")
    for b in S.elements:
        table.add_column(S.label(b), style="magenta", justify="right")
    for a in S.elements:
        table.add_row(S.label(a), *(S.label(S.mul(a, b)) for b in S.elements))
    return table


def covers(leq) -> List[tuple]:
    """ Hasse edges (a, b): a < b with nothing strictly between """
    n = len(leq)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((a, b) for a in range(n) for b in range(n) if a != b and leq[a][b])
    return sorted(nx.transitive_reduction(graph).edges)


def print_structure(S: OrderedSemigroup):
    out.print(cayley_table(S))
    edges = covers(S.leq)
    order = ", ".join(f"{S.label(a)} < {S.label(b)}" for a, b in edges) or "equality"
    out.print(f"[bold]Order (covers):[/bold] {order}")
    if S.description:
        out.print(f"[dim]{S.description}[/dim]")


def print_validation_errors(exc: StructureInvalid, where: str = ""):
    table = Table(title=f"{FAIL} Invalid structure {where or exc.name}")
    table.add_column("Kind", style="red")
    table.add_column("Witness", style="yellow")
    table.add_column("Detail", style="white")
    for e in exc.errors:
        table.add_row(e.kind, _tuple(e.witness), e.message)
    err_console.print(table)


# =====================================================================
# Verdicts and relations
# =====================================================================

def print_verdict(S: OrderedSemigroup, p: PropertyId, v: Verdict, show_witnesses: bool = False):
    if v.holds:
        out.print(f"{OK} [green]{S.name} is {p.value}[/green]")
        if show_witnesses and v.witnesses:
            table = Table(title="Witnesses")
            table.add_column("At", style="cyan")
            table.add_column("Witness", style="green")
            for at, w in sorted(v.witnesses.items()):
                table.add_row(_tuple(at), _tuple(w))
            out.print(table)
    else:
        out.print(f"{FAIL} [red]{S.name} is not {p.value}[/red], counterexample {_tuple(v.counterexample)}")


def print_classification_table(S: OrderedSemigroup, verdicts: Dict[PropertyId, Verdict]):
    table = Table(title=f"📋 Properties of {S.name}")
    table.add_column("Property", style="cyan")
    table.add_column("Holds", justify="center")
    table.add_column("Counterexample", style="yellow")
    for p, v in verdicts.items():
        table.add_row(p.value, _mark(v.holds), _tuple(v.counterexample))
    out.print(table)


def print_partition(S: OrderedSemigroup, P: Partition, title: str):
    tree = Tree(f"[bold]{title}[/bold] ({P.size} classes)")
    for cid, members in enumerate(P.classes):
        tree.add(f"[cyan]{cid}[/cyan]: {{{', '.join(S.label(m) for m in sorted(members))}}}")
    out.print(tree)


def print_flags(flags: CongruenceFlags):
    table = Table(title="Congruence flags")
    table.add_column("Flag", style="cyan")
    table.add_column("Holds", justify="center")
    table.add_column("Counterexample", style="yellow")
    for name in CongruenceFlags.FLAGS:
        table.add_row(name, _mark(getattr(flags, name)), _tuple(flags.counterexamples.get(name)))
    out.print(table)


# =====================================================================
# Theorems
# =====================================================================

def print_report(report: TheoremReport, structure: str = ""):
    status = _mark(report.relation_respected)
    table = Table(title=f"{status} {report.theorem.value} ({report.shape.value}) on {structure}")
    table.add_column("Condition", style="cyan")
    table.add_column("Value", justify="center")
    table.add_column("Counterexample", style="yellow")
    for c in report.conditions:
        table.add_row(c.label, _mark(c.value), _tuple(c.verdict.counterexample))
    out.print(table)


def print_reports(reports: Iterable[TheoremReport], structure: str = ""):
    reports = list(reports)
    for r in reports:
        print_report(r, structure)
    broken = [r.theorem.value for r in reports if not r.relation_respected]
    if broken:
        out.print(f"{FAIL} [red]{len(broken)} theorem(s) not respected: {', '.join(broken)}[/red]")
    else:
        out.print(f"{OK} [green]All {len(reports)} theorem(s) respected[/green]")


# =====================================================================
# Decompositions
# =====================================================================

def print_decomposition(D: Decomposition, C: Optional[Classification] = None):
    S = D.base
    print_partition(S, D.congruence, f"Classes of {S.name}")
    table = Table(title="Quotient semilattice")
    table.add_column("*", style="bold cyan", justify="right")
    k = D.quotient_table.shape[0]
    for b in range(k):
        table.add_column(str(b), style="magenta", justify="right")
    for a in range(k):
        table.add_row(str(a), *(str(int(v)) for v in D.quotient_table[a]))
    out.print(table)
    for i, c in enumerate(D.condition_checks, start=1):
        out.print(f"{_mark(c.holds)} condition ({i})" + (f" witness {_tuple(c.witness)}" if not c.holds else ""))
    if C is not None:
        checks = Table(title="Class reports")
        checks.add_column("Class", style="cyan")
        checks.add_column("Members")
        for p in PropertyId:
            checks.add_column(p.value, justify="center")
        for r in C.reports:
            checks.add_row(str(r.class_id), ", ".join(S.label(m) for m in r.members),
                           *(_mark(r.verdicts[p].holds) for p in PropertyId))
        out.print(checks)
        out.print(f"[bold green]{S.name} is a {C.headline}[/bold green]")


def hasse_dot(D: Decomposition) -> str:
    """ DOT source of the quotient's Hasse diagram, larger classes drawn on top """
    S = D.base
    dot = Digraph(comment=f"{S.name} quotient semilattice")
    dot.attr(rankdir="BT")
    dot.attr("node", shape="box", style="rounded,filled", fillcolor="lightblue")
    for cid, members in enumerate(D.congruence.classes):
        dot.node(f"c{cid}", "{" + ",".join(S.label(m) for m in sorted(members)) + "}")
    for a, b in covers(D.quotient_order):
        dot.edge(f"c{a}", f"c{b}")
    return dot.source


# =====================================================================
# Constructions and search
# =====================================================================

def print_hom_extension(E: HomExtension):
    from Constructions.power import subset_label
    table = Table(title="φ on nonempty subsets")
    table.add_column("Subset", style="cyan")
    table.add_column("φ", style="green", justify="right")
    for mask, image in sorted(E.phi.items()):
        table.add_row(subset_label(mask), str(image))
    out.print(table)
    for name in ("hom_law", "diagram", "monotone"):
        c = getattr(E, name)
        out.print(f"{_mark(c.holds)} {name}" + (f" witness {_tuple(c.witness)}" if not c.holds else ""))


def print_counterexample(found: Optional[Counterexample]):
    if found is None:
        out.print(f"{OK} [green]No counterexample in the searched range[/green]")
        return
    out.print(f"{FAIL} [red]Counterexample: {found.structure.name} is not {found.property.value}, "
              f"at {_tuple(found.verdict.counterexample)}[/red]")
    print_structure(found.structure)


def print_corpus_summary(report: dict):
    table = Table(title=f"📊 Corpus up to n={report['n_max']}")
    table.add_column("Structures", style="cyan", justify="right")
    table.add_column("Violations", style="red", justify="right")
    table.add_row(str(report["structures"]), str(len(report["violations"])))
    out.print(table)
    for v in report["violations"]:
        out.print(f"{FAIL} [red]{v['id']}: {v['theorem']}[/red]")
