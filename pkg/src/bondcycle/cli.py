"""Command line interface.

Graph-consuming commands read graph6 lines from ``--in FILE`` or standard
input and print one JSON object per input graph.  Exit codes: 0 success,
1 usage or parse error, 2 size guard exceeded, 3 theorem contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Iterator, TextIO

from . import __version__
from .bonds import (
    InfeasibleError,
    bond_upper_bound,
    co_spectrum,
    is_dual_hamiltonian,
    largest_bond,
    petersen_bond_of_size,
)
from .conjecture import TheoremContradiction, Verdict, batch_verify, check_conjecture, verify_theorem4_scope
from .cycles import circumference, cycle_spectrum, longest_cycles
from .generators import GraphFilter, counterexample_2connected, enumerate_graphs, petersen
from .graph import Graph, GraphError, vertex_connectivity_at_least
from .io import parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_CONTRADICTION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _run_report(command: str, parameters: dict, g: Graph | None, results: dict, started: float) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "graph": None if g is None else {"graph6": write_graph6(g), "n": g.n, "m": g.m},
        "results": results,
        "wall_time": round(time.perf_counter() - started, 6),
        "version": __version__,
    }


def _read_graphs(args: argparse.Namespace) -> Iterator[Graph]:
    if args.input_format == "edges":
        text = Path(args.input).read_text() if args.input else sys.stdin.read()
        yield parse_edge_list(text)
        return
    handle = open(args.input) if args.input else sys.stdin
    try:
        for line in handle:
            if line.strip():
                yield parse_graph6(line.strip())
    finally:
        if args.input:
            handle.close()


def _emit_graph(g: Graph, fmt: str, labels: dict[str, int], out: TextIO) -> None:
    if fmt == "g6":
        out.write(write_graph6(g) + "\n")
    elif fmt == "edges":
        out.write(write_edge_list(g))
    else:
        out.write(write_dot(g, labels={v: name for name, v in labels.items()}))


def _write_labels(path: str | None, labels: dict[str, int]) -> None:
    if path:
        Path(path).write_text(json.dumps(labels, indent=2) + "\n")


# -- per-graph commands ----------------------------------------------------------

def _largest_bond(g: Graph, args) -> dict:
    b = largest_bond(g)
    return {"bond": b.to_json(), "upper_bound": bond_upper_bound(g)}


def _circumference(g: Graph, args) -> dict:
    res = circumference(g)
    if res is None:
        return {"acyclic": True, "circumference": 0, "cycle": None}
    return {"acyclic": False, "circumference": res[0], "cycle": res[1].to_json()}


def _co_spectrum(g: Graph, args) -> dict:
    return co_spectrum(g).to_json()


def _cycle_spectrum(g: Graph, args) -> dict:
    return cycle_spectrum(g).to_json()


def _dual_hamiltonian(g: Graph, args) -> dict:
    w = is_dual_hamiltonian(g)
    if w is None:
        return {"dual_hamiltonian": False, "witness": None}
    return {"dual_hamiltonian": True, "witness": {"a": w.a.to_list(), "b": w.b.to_list(), "bond": w.bond.to_json()}}


def _check_conjecture(g: Graph, args) -> dict:
    two = vertex_connectivity_at_least(g, 2)
    three = two and vertex_connectivity_at_least(g, 3)
    if not two:
        return {"skipped": "not 2-connected"}
    if not three and not args.include_2_connected:
        return {"skipped": "not 3-connected"}
    r = check_conjecture(g)
    out = r.to_json()
    if r.three_connected:
        verdict = verify_theorem4_scope(r)
        out["verdict"] = verdict.value
        if verdict is Verdict.THEOREM_CONTRADICTION:
            raise TheoremContradiction(r, write_graph6(g))
    return out


def _dot(g: Graph, args) -> dict:
    cycle = bond = None
    if args.cycle:
        res = circumference(g)
        cycle = res[1] if res else None
    if args.bond:
        bond = largest_bond(g)
    return {"dot": write_dot(g, cycle=cycle, bond=bond)}


PER_GRAPH: dict[str, Callable[[Graph, argparse.Namespace], dict]] = {
    "largest-bond": _largest_bond,
    "circumference": _circumference,
    "co-spectrum": _co_spectrum,
    "cycle-spectrum": _cycle_spectrum,
    "dual-hamiltonian": _dual_hamiltonian,
    "check-conjecture": _check_conjecture,
    "dot": _dot,
}


def _per_graph(args, out: TextIO) -> int:
    fn = PER_GRAPH[args.command]
    for g in _read_graphs(args):
        started = time.perf_counter()
        if args.command == "dot":
            out.write(fn(g, args)["dot"])
            continue
        results = fn(g, args)
        params = {"include_2_connected": args.include_2_connected} if args.command == "check-conjecture" else {}
        _dump(_run_report(args.command, params, g, results, started), out)
    return EXIT_OK


# -- generator and batch commands ------------------------------------------------

def _petersen(args, out: TextIO) -> int:
    g, labels = petersen(args.n, args.k)
    _write_labels(args.labels, labels.mapping())
    _emit_graph(g, args.format, labels.mapping(), out)
    return EXIT_OK


def _counterexample(args, out: TextIO) -> int:
    g, labels = counterexample_2connected(args.subdiv)
    _write_labels(args.labels, labels.mapping())
    if not args.verify:
        _emit_graph(g, args.format, labels.mapping(), out)
        return EXIT_OK
    started = time.perf_counter()
    c, cycles = longest_cycles(g)
    r = check_conjecture(g)
    results = {
        "circumference": c,
        "num_longest_cycles": len(cycles),
        "largest_bond_size": r.largest_bond_size,
        "all_pairs_meet": r.all_pairs_meet,
        "report": r.to_json(),
        "labels": labels.mapping(),
    }
    _dump(_run_report("counterexample", {"subdiv": args.subdiv}, g, results, started), out)
    return EXIT_OK


def _petersen_bond(args, out: TextIO) -> int:
    started = time.perf_counter()
    g, labels = petersen(args.n, args.k)
    b = petersen_bond_of_size(args.n, args.k, args.size)
    names = {v: name for name, v in labels.mapping().items()}
    results = {
        "bond": b.to_json(),
        "x_labels": [names[v] for v in b.x],
        "construction": "step1" if args.size <= args.n - args.k + 2 else "step2",
    }
    _dump(_run_report("petersen-bond", {"n": args.n, "k": args.k, "size": args.size}, g, results, started), out)
    return EXIT_OK


def _sweep(args, out: TextIO) -> int:
    started = time.perf_counter()
    filt = GraphFilter.TRICONNECTED if args.three_connected else GraphFilter.CONNECTED
    summary = batch_verify(
        enumerate_graphs(args.n, filt),
        include_2_connected=args.include_2_connected,
        workers=args.workers,
        halt_on_contradiction=not args.no_halt,
    )
    if args.violations:
        Path(args.violations).write_text("".join(g6 + "\n" for g6 in summary.violation_graphs))
    params = {
        "n": args.n,
        "three_connected": args.three_connected,
        "include_2_connected": args.include_2_connected,
        "workers": args.workers,
    }
    _dump(_run_report("sweep", params, None, summary.to_json(), started), out)
    return EXIT_CONTRADICTION if summary.contradictions else EXIT_OK


def _verify_paper(args, out: TextIO) -> int:
    from .verification import run_all

    results = run_all(args.criterion or None)
    for r in results:
        print(r.line(), file=sys.stderr)
    _dump({"command": "verify-paper", "version": __version__, "criteria": [r.to_json() for r in results]}, out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bondcycle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("petersen", help="emit the generalized Petersen graph P(N,K)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=("g6", "edges", "dot"), default="g6")
    p.add_argument("--labels", metavar="FILE", help="write the x_i/y_i -> vertex id mapping as JSON")

    p = sub.add_parser("petersen-bond", help="explicit bond of a given size in P(N,K)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("counterexample", help="2-connected graph whose longest cycle misses a largest bond")
    p.add_argument("--subdiv", type=int, default=6, help="subdivision vertices per triangle side")
    p.add_argument("--format", choices=("g6", "edges", "dot"), default="g6")
    p.add_argument("--labels", metavar="FILE")
    p.add_argument("--verify", action="store_true", help="emit a JSON report with the exact extremal values")

    helps = {
        "largest-bond": "exact largest bond",
        "circumference": "exact longest cycle",
        "co-spectrum": "all bond sizes",
        "cycle-spectrum": "all cycle lengths",
        "dual-hamiltonian": "two-tree partition test",
        "check-conjecture": "compare all longest cycles with all largest bonds",
        "dot": "render graphs as DOT",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--in", dest="input", metavar="FILE", help="input file (default: stdin)")
        p.add_argument("--input-format", choices=("g6", "edges"), default="g6")
        if name == "check-conjecture":
            p.add_argument("--include-2-connected", action="store_true")
        if name == "dot":
            p.add_argument("--cycle", action="store_true", help="draw a longest cycle in bold")
            p.add_argument("--bond", action="store_true", help="draw a largest bond dashed")

    p = sub.add_parser("sweep", help="check every labeled graph on N vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--three-connected", action="store_true", help="enumerate only 3-connected graphs")
    p.add_argument("--include-2-connected", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--violations", metavar="FILE", help="write violating graphs as graph6 lines")
    p.add_argument("--no-halt", action="store_true", help="keep going after a theorem contradiction")

    p = sub.add_parser("verify-paper", help="run the reproduction checks")
    p.add_argument("--criterion", type=int, action="append", help="run only this criterion (repeatable)")
    return parser


COMMANDS = {
    "petersen": _petersen,
    "petersen-bond": _petersen_bond,
    "counterexample": _counterexample,
    "sweep": _sweep,
    "verify-paper": _verify_paper,
}


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    handler = COMMANDS.get(args.command, _per_graph)
    try:
        return handler(args, out)
    except TheoremContradiction as exc:
        print(f"bondcycle: {exc}", file=sys.stderr)
        if exc.report is not None:
            _dump({"theorem_contradiction": exc.report.to_json(), "graph6": exc.graph6}, out)
        return EXIT_CONTRADICTION
    except InfeasibleError as exc:
        print(f"bondcycle: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GraphError, OSError) as exc:
        print(f"bondcycle: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
