import pytest

from bondcycle import (
    GraphError,
    GraphFilter,
    all_largest_bonds,
    counterexample_2connected,
    enumerate_graphs,
    is_connected,
    largest_bond,
    petersen,
    validate_bond,
    vertex_connectivity_at_least,
)
from bondcycle.cycles import longest_cycles
from bondcycle.graph import VertexSet, min_degree
from bondcycle.verification import petersen_params


@pytest.mark.parametrize("n, k, verts, edges", [(5, 2, 10, 15), (8, 3, 16, 24), (20, 4, 40, 60)])
def test_petersen_counts(n, k, verts, edges):
    g, labels = petersen(n, k)
    assert (g.n, g.m) == (verts, edges)
    assert all(g.degree(v) == 3 for v in range(g.n))
    assert set(labels.outer).isdisjoint(labels.inner)
    assert set(labels.outer) | set(labels.inner) == set(range(g.n))


def test_petersen_edge_rule():
    g, lab = petersen(8, 3)
    for i in range(1, 9):
        assert g.has_edge(lab.x(i), lab.x(i + 1))
        assert g.has_edge(lab.x(i), lab.y(i))
        assert g.has_edge(lab.y(i), lab.y(i + 3))


@pytest.mark.parametrize("n, k", [(2, 1), (4, 2), (6, 3), (5, 0), (5, 3), (32, 1)])
def test_petersen_rejects(n, k):
    with pytest.raises(GraphError):
        petersen(n, k)


def test_petersen_family_properties():
    for n, k in petersen_params(20):
        g, _ = petersen(n, k)
        assert g.n == 2 * n and g.m == 3 * n
        assert all(g.degree(v) == 3 for v in range(g.n))
        assert is_connected(g)


def test_petersen_disconnected_inner_rim_still_connected():
    # gcd(8, 2) = 2: inner rim splits into two 4-cycles
    g, lab = petersen(8, 2)
    inner = VertexSet(lab.inner)
    from bondcycle.graph import mask_connected

    assert not mask_connected(g, inner.mask)
    assert is_connected(g)


def test_counterexample_s6():
    g, lab = counterexample_2connected(6)
    assert (g.n, g.m) == (25, 34)
    assert vertex_connectivity_at_least(g, 2)
    assert not vertex_connectivity_at_least(g, 3)
    c, cycles = longest_cycles(g)
    assert c == 21 and len(cycles) == 1
    assert set(cycles[0].vertices) == set(range(g.n)) - set(lab.y_path)
    assert largest_bond(g).size == 10


@pytest.mark.parametrize("s", range(5, 13))
def test_counterexample_family(s):
    g, lab = counterexample_2connected(s)
    assert (g.n, g.m) == (3 * s + 7, 3 * s + 16)
    assert min_degree(g) == 2
    assert validate_bond(g, VertexSet(lab.y_mask)).size == 10


@pytest.mark.parametrize("s", [5, 7])
def test_counterexample_largest_bond_exactly_ten(s):
    g, _ = counterexample_2connected(s)
    assert largest_bond(g).size == 10


def test_counterexample_rejects_small_s():
    with pytest.raises(GraphError):
        counterexample_2connected(4)


def test_enumerate_counts():
    # brute-force recounts (independent oracle, frozen): 1 / 728 / 64 / 26
    assert len(list(enumerate_graphs(4, GraphFilter.TRICONNECTED))) == 1
    assert len(list(enumerate_graphs(5, GraphFilter.CONNECTED))) == 728
    assert len(list(enumerate_graphs(4))) == 64
    assert len(list(enumerate_graphs(5, GraphFilter.TRICONNECTED))) == 26


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_unfiltered_is_all_masks(n):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == 2 ** (n * (n - 1) // 2)
    assert len(set(graphs)) == len(graphs)


def test_enumerate_filters_agree_with_predicates():
    for g in enumerate_graphs(5, GraphFilter.BICONNECTED):
        assert vertex_connectivity_at_least(g, 2)
    assert all(min_degree(g) >= 3 for g in enumerate_graphs(5, GraphFilter.MIN_DEGREE_3))
    only_k4 = list(enumerate_graphs(4, GraphFilter.TRICONNECTED))
    assert only_k4[0].m == 6


@pytest.mark.parametrize("n", [0, 8])
def test_enumerate_rejects_range(n):
    with pytest.raises(GraphError):
        list(enumerate_graphs(n))
