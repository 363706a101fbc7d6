import pytest

from bondcycle import (
    GraphError,
    TheoremContradiction,
    Verdict,
    batch_verify,
    check_conjecture,
    counterexample_2connected,
    cycle_meets_bond,
    make_graph,
    petersen,
    validate_bond,
    verify_theorem4_scope,
)
from bondcycle.bonds import all_largest_bonds
from bondcycle.conjecture import SweepSummary
from bondcycle.cycles import all_longest_cycles
from bondcycle.generators import GraphFilter, enumerate_graphs
from bondcycle.graph import VertexSet

from conftest import cycle_graph, path_graph


def test_k4_report(k4):
    r = check_conjecture(k4)
    assert r.three_connected and r.all_pairs_meet
    assert (r.circumference, r.largest_bond_size) == (4, 4)
    assert (r.num_longest_cycles, r.num_largest_bonds) == (3, 3)
    assert r.min_shared_edges == 2
    assert verify_theorem4_scope(r) is Verdict.CONSISTENT


def test_petersen_report(pet52):
    g, _ = pet52
    r = check_conjecture(g)
    assert r.all_pairs_meet
    assert (r.num_longest_cycles, r.num_largest_bonds) == (20, 60)
    assert r.hypotheses.long_cycle and r.hypotheses.large_bond


def test_shared_edge_counts_are_even_and_at_least_two(pet52):
    g, _ = pet52
    for c in all_longest_cycles(g):
        for b in all_largest_bonds(g):
            shared = cycle_meets_bond(c, b)
            assert shared % 2 == 0 and shared >= 2


def test_counterexample_violates():
    g, labels = counterexample_2connected(6)
    r = check_conjecture(g)
    assert r.two_connected and not r.three_connected
    assert not r.all_pairs_meet and r.min_shared_edges == 0
    assert r.disjoint_cycle is not None
    # the disjoint cycle lives on one side of the witnessing bond
    vs = set(r.disjoint_cycle.vertices)
    assert vs <= set(r.disjoint_bond.x) or vs <= set(r.disjoint_bond.y)
    assert r.side_containment_holds
    y = validate_bond(g, VertexSet(labels.y_mask))
    assert cycle_meets_bond(r.disjoint_cycle, y) == 0
    with pytest.raises(GraphError):
        verify_theorem4_scope(r)


def test_cycle_graph_vacuous_bonds():
    r = check_conjecture(cycle_graph(5))
    assert r.all_pairs_meet and r.min_shared_edges == 2


def test_acyclic_graph_is_vacuous():
    r = check_conjecture(path_graph(4))
    assert r.all_pairs_meet and r.min_shared_edges is None and r.circumference == 0


def test_check_conjecture_needs_connected():
    with pytest.raises(GraphError):
        check_conjecture(make_graph(4, [(0, 1), (2, 3)]))


def test_batch_three_connected_small():
    s = batch_verify(enumerate_graphs(5, GraphFilter.TRICONNECTED))
    assert s.graphs_checked == s.three_connected_count == s.consistent == 26
    assert s.conjecture_violations == 0 and not s.failures
    assert sum(s.hypothesis_coverage.values()) == 26


def test_batch_skips_below_three_connected_by_default():
    s = batch_verify(enumerate_graphs(4, GraphFilter.CONNECTED))
    assert s.graphs_seen == 38
    assert s.graphs_checked == 1 and s.skipped == 37


def test_batch_include_two_connected_catches_counterexample():
    graphs = [counterexample_2connected(5)[0], petersen(5, 2)[0]]
    s = batch_verify(graphs, include_2_connected=True)
    assert s.graphs_checked == 2
    assert s.conjecture_violations == 1 and s.three_connected_violations == 0
    assert s.contradictions == 0 and len(s.violation_graphs) == 1
    plain = batch_verify(graphs)
    assert plain.graphs_checked == 1 and plain.conjecture_violations == 0


def test_batch_empty_stream():
    s = batch_verify([])
    assert s == SweepSummary()


def test_batch_records_failures_and_continues():
    disconnected = make_graph(4, [(0, 1), (2, 3)])
    s = batch_verify([disconnected, petersen(5, 2)[0]])
    assert s.graphs_seen == 2 and s.skipped == 1 and s.graphs_checked == 1


def test_parallel_matches_serial():
    graphs = list(enumerate_graphs(5, GraphFilter.BICONNECTED))
    serial = batch_verify(graphs, include_2_connected=True)
    parallel = batch_verify(graphs, include_2_connected=True, workers=2, chunksize=16)
    assert serial.to_json() == parallel.to_json()


def test_absorb_is_associative():
    graphs = list(enumerate_graphs(5, GraphFilter.TRICONNECTED))
    parts = [batch_verify(graphs[i:i + 7]) for i in range(0, len(graphs), 7)]
    left = SweepSummary()
    for p in parts:
        left.absorb(p)
    assert left.to_json() == batch_verify(graphs).to_json()


def test_contradiction_halts(monkeypatch):
    import bondcycle.conjecture as mod

    monkeypatch.setattr(mod, "verify_theorem4_scope", lambda r: Verdict.THEOREM_CONTRADICTION)
    with pytest.raises(TheoremContradiction):
        batch_verify([petersen(5, 2)[0]])
    s = batch_verify([petersen(5, 2)[0]], halt_on_contradiction=False)
    assert s.contradictions == 1
