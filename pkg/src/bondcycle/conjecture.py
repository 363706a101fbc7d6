"""Checking that every longest cycle meets every largest bond.

:func:`check_conjecture` looks at one graph, :func:`batch_verify` folds a
stream of graphs into a :class:`SweepSummary`.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

from .bonds import Bond, _bond_from_mask, all_largest_bond_masks
from .cycles import Cycle, cycle_edge_mask, longest_cycles
from .graph import Graph, GraphError, cut_mask, is_connected, min_degree, vertex_connectivity_at_least

log = logging.getLogger(__name__)


class Verdict(enum.Enum):
    CONSISTENT = "CONSISTENT"
    THEOREM_CONTRADICTION = "THEOREM-CONTRADICTION"


class TheoremContradiction(RuntimeError):
    """A 3-connected graph meets a hypothesis of the proved theorem yet has a
    longest cycle disjoint from a largest bond; this can only be a bug."""

    def __init__(self, report: ConjectureReport, graph6: str | None = None):
        super().__init__(f"theorem contradicted on graph {graph6 or report.n}")
        self.report = report
        self.graph6 = graph6


@dataclass(frozen=True)
class Hypotheses:
    long_cycle: bool  # c >= n - 3
    large_bond: bool  # c* >= m - n - 1

    @property
    def any(self) -> bool:
        return self.long_cycle or self.large_bond


@dataclass
class ConjectureReport:
    n: int
    m: int
    three_connected: bool
    two_connected: bool
    circumference: int
    largest_bond_size: int
    num_longest_cycles: int
    num_largest_bonds: int
    all_pairs_meet: bool
    min_shared_edges: int | None
    hypotheses: Hypotheses
    # structural facts checked alongside the verdict
    shared_counts_even: bool = True
    meeting_pairs_share_two: bool = True
    side_containment_holds: bool = True
    min_largest_bond_side: int | None = None
    dirac_holds: bool | None = None
    disjoint_cycle: Cycle | None = None
    disjoint_bond: Bond | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "three_connected": self.three_connected,
            "two_connected": self.two_connected,
            "circumference": self.circumference,
            "largest_bond_size": self.largest_bond_size,
            "num_longest_cycles": self.num_longest_cycles,
            "num_largest_bonds": self.num_largest_bonds,
            "all_pairs_meet": self.all_pairs_meet,
            "min_shared_edges": self.min_shared_edges,
            "hypotheses": {
                "c_ge_n_minus_3": self.hypotheses.long_cycle,
                "cstar_ge_m_minus_n_minus_1": self.hypotheses.large_bond,
            },
            "shared_counts_even": self.shared_counts_even,
            "meeting_pairs_share_two": self.meeting_pairs_share_two,
            "side_containment_holds": self.side_containment_holds,
            "min_largest_bond_side": self.min_largest_bond_side,
            "dirac_holds": self.dirac_holds,
            "witness": None,
        }
        if self.disjoint_cycle is not None:
            out["witness"] = {
                "cycle": self.disjoint_cycle.to_json(),
                "bond": self.disjoint_bond.to_json(),
            }
        return out


def cycle_meets_bond(c: Cycle, b: Bond) -> int:
    """Number of edges the cycle shares with the bond's cut (even; >= 2 iff they meet)."""
    return len(c.edge_set & b.cut)


def classify_hypotheses(r: ConjectureReport) -> Hypotheses:
    return Hypotheses(
        long_cycle=r.circumference >= r.n - 3,
        large_bond=r.largest_bond_size >= r.m - r.n - 1,
    )


def check_conjecture(g: Graph) -> ConjectureReport:
    """Compare every longest cycle with every largest bond of ``g``.

    Graphs without a cycle (or with a single vertex) satisfy the conjecture
    vacuously; they get ``min_shared_edges = None``.
    """
    if not is_connected(g):
        raise GraphError("check_conjecture needs a connected graph")
    two = vertex_connectivity_at_least(g, 2)
    return _report(g, two, two and vertex_connectivity_at_least(g, 3))


def _report(g: Graph, two: bool, three: bool) -> ConjectureReport:
    n, m = g.n, g.m
    c, cycles = longest_cycles(g)
    bond_masks = all_largest_bond_masks(g) if n >= 2 else []
    cstar = cut_mask(g, bond_masks[0]).bit_count() if bond_masks else 0

    report = ConjectureReport(
        n=n, m=m, three_connected=three, two_connected=two,
        circumference=c, largest_bond_size=cstar,
        num_longest_cycles=len(cycles), num_largest_bonds=len(bond_masks),
        all_pairs_meet=True, min_shared_edges=None,
        hypotheses=Hypotheses(False, False),
    )
    report.hypotheses = classify_hypotheses(report)
    if two:
        report.dirac_holds = c >= min(n, 2 * min_degree(g))
    if bond_masks:
        report.min_largest_bond_side = min(
            min(x.bit_count(), n - x.bit_count()) for x in bond_masks
        )

    cyc = [(cy, cycle_edge_mask(g, cy), sum(1 << v for v in cy.vertices)) for cy in cycles]
    full = g.all_vertices
    min_shared = None
    for x in bond_masks:
        cut = cut_mask(g, x)
        y = full & ~x
        for cy, emask, vmask in cyc:
            shared = (emask & cut).bit_count()
            if min_shared is None or shared < min_shared:
                min_shared = shared
            if shared & 1:
                report.shared_counts_even = False
            if shared == 1:
                report.meeting_pairs_share_two = False
            inside_one_side = not vmask & y or not vmask & x
            if (shared == 0) != inside_one_side:
                report.side_containment_holds = False
            if shared == 0 and report.disjoint_cycle is None:
                report.disjoint_cycle = cy
                report.disjoint_bond = _bond_from_mask(g, x)
    report.min_shared_edges = min_shared
    report.all_pairs_meet = min_shared is None or min_shared >= 1
    return report


def verify_theorem4_scope(r: ConjectureReport) -> Verdict:
    """A 3-connected graph with c >= n-3 or c* >= m-n-1 must have all pairs meeting."""
    if not r.three_connected:
        raise GraphError("the theorem only covers 3-connected graphs")
    if r.hypotheses.any and not r.all_pairs_meet:
        return Verdict.THEOREM_CONTRADICTION
    return Verdict.CONSISTENT


@dataclass
class SweepSummary:
    graphs_seen: int = 0
    graphs_checked: int = 0
    three_connected_count: int = 0
    skipped: int = 0
    conjecture_violations: int = 0
    three_connected_violations: int = 0
    violation_graphs: list[str] = field(default_factory=list)
    hypothesis_coverage: dict[str, int] = field(
        default_factory=lambda: {"i_only": 0, "ii_only": 0, "both": 0, "neither": 0}
    )
    consistent: int = 0
    contradictions: int = 0
    contradiction_graphs: list[str] = field(default_factory=list)
    odd_shared_counts: int = 0
    single_shared_edges: int = 0
    side_containment_failures: int = 0
    small_largest_bond_sides: int = 0
    dirac_violations: int = 0
    failures: list[dict] = field(default_factory=list)

    def absorb(self, other: SweepSummary) -> None:
        """Add ``other``'s counts into this summary (associative, order-preserving)."""
        for name, value in vars(other).items():
            mine = getattr(self, name)
            if isinstance(mine, dict):
                for k, v in value.items():
                    mine[k] += v
            elif isinstance(mine, list):
                mine.extend(value)
            else:
                setattr(self, name, mine + value)

    def to_json(self) -> dict:
        return asdict(self)


def _coverage_key(h: Hypotheses) -> str:
    if h.long_cycle and h.large_bond:
        return "both"
    if h.long_cycle:
        return "i_only"
    if h.large_bond:
        return "ii_only"
    return "neither"


def _check_one(args: tuple[int, Graph, bool]) -> SweepSummary:
    from .io import write_graph6

    index, g, include_2_connected = args
    s = SweepSummary(graphs_seen=1)
    try:
        if not vertex_connectivity_at_least(g, 2):
            s.skipped = 1
            return s
        three = vertex_connectivity_at_least(g, 3)
        if not three and not include_2_connected:
            s.skipped = 1
            return s
        r = _report(g, True, three)
    except Exception as exc:  # recorded, the stream continues
        s.failures.append({"index": index, "error": f"{type(exc).__name__}: {exc}"})
        return s
    s.graphs_checked = 1
    s.odd_shared_counts = int(not r.shared_counts_even)
    s.single_shared_edges = int(not r.meeting_pairs_share_two)
    s.side_containment_failures = int(not r.side_containment_holds)
    s.dirac_violations = int(r.dirac_holds is False)
    if not r.all_pairs_meet:
        s.conjecture_violations = 1
        s.violation_graphs.append(write_graph6(g))
    if three:
        s.three_connected_count = 1
        s.three_connected_violations = s.conjecture_violations
        s.hypothesis_coverage[_coverage_key(r.hypotheses)] = 1
        if r.min_largest_bond_side is not None and r.min_largest_bond_side < 2:
            s.small_largest_bond_sides = 1
        if verify_theorem4_scope(r) is Verdict.CONSISTENT:
            s.consistent = 1
        else:
            s.contradictions = 1
            s.contradiction_graphs.append(write_graph6(g))
            log.error("theorem contradiction on %s", s.contradiction_graphs[-1])
    return s


def batch_verify(
    graphs: Iterable[Graph],
    include_2_connected: bool = False,
    workers: int = 1,
    halt_on_contradiction: bool = True,
    chunksize: int = 512,
) -> SweepSummary:
    """Check every 3-connected graph of the stream (and 2-connected ones when
    ``include_2_connected``); other graphs are only counted as skipped.

    Per-graph errors are recorded in ``failures``.  With ``halt_on_contradiction``
    a THEOREM-CONTRADICTION raises :class:`TheoremContradiction`.
    """
    jobs = ((i, g, include_2_connected) for i, g in enumerate(graphs))
    total = SweepSummary()

    def fold(results: Iterator[SweepSummary]) -> None:
        for part in results:
            total.absorb(part)
            if part.contradictions and halt_on_contradiction:
                g6 = part.contradiction_graphs[-1]
                from .io import parse_graph6

                raise TheoremContradiction(check_conjecture(parse_graph6(g6)), g6)

    if workers <= 1:
        fold(map(_check_one, jobs))
    else:
        with Pool(workers) as pool:
            fold(pool.imap(_check_one, jobs, chunksize=chunksize))
    return total
