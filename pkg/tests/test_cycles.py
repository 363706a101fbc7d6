import random

import pytest

from bondcycle import (
    GraphError,
    InfeasibleError,
    all_longest_cycles,
    circumference,
    counterexample_2connected,
    cycle_spectrum,
    dirac_bound,
    is_hamiltonian,
    make_graph,
    petersen,
    validate_cycle,
)
from bondcycle.cycles import cycles_of_length, longest_cycles
from bondcycle.generators import GraphFilter, enumerate_graphs
from bondcycle.verification import naive_circumference, random_connected_graph

from conftest import complete, cycle_graph, path_graph


def test_k4(k4):
    assert circumference(k4)[0] == 4
    assert cycle_spectrum(k4).lengths == [3, 4]
    assert len(all_longest_cycles(k4)) == 3


def test_c5(c5):
    assert cycle_spectrum(c5).lengths == [5]
    assert len(all_longest_cycles(c5)) == 1


def test_petersen_is_hypohamiltonian(pet52):
    g, _ = pet52
    c, cycle = circumference(g)
    assert c == 9
    validate_cycle(g, cycle.vertices)
    assert cycle_spectrum(g).lengths == [5, 6, 8, 9]
    assert len(all_longest_cycles(g)) == 20
    assert is_hamiltonian(g) == (False, None)


def test_petersen_83():
    g, _ = petersen(8, 3)
    assert circumference(g)[0] == 16
    assert cycle_spectrum(g).lengths == [6, 8, 10, 12, 14, 16]


def test_acyclic():
    g = path_graph(5)
    assert circumference(g) is None
    assert longest_cycles(g) == (0, [])
    assert cycle_spectrum(g).lengths == []
    with pytest.raises(GraphError):
        all_longest_cycles(g)


def test_every_cycle_counted_once():
    # K5 has 10 triangles, 15 four-cycles and 12 five-cycles
    g = complete(5)
    assert [len(cycles_of_length(g, L)) for L in (3, 4, 5)] == [10, 15, 12]


def test_circumference_matches_naive():
    rng = random.Random(17)
    for _ in range(500):
        g = random_connected_graph(rng, 1, 9)
        res = circumference(g)
        assert (res[0] if res else 0) == naive_circumference(g)


def test_spectrum_max_is_circumference():
    rng = random.Random(23)
    for _ in range(100):
        g = random_connected_graph(rng, 3, 9)
        res = circumference(g)
        lengths = cycle_spectrum(g).lengths
        assert (lengths[-1] if lengths else 0) == (res[0] if res else 0)


def test_spectrum_witnesses_are_cycles(pet52):
    g, _ = pet52
    for length, cyc in cycle_spectrum(g).witnesses.items():
        assert validate_cycle(g, cyc.vertices).length == length


def test_longest_cycles_are_distinct(pet52):
    g, _ = pet52
    edge_sets = {c.edge_set for c in all_longest_cycles(g)}
    assert len(edge_sets) == 20


def test_validate_cycle_errors(c5):
    with pytest.raises(GraphError):
        validate_cycle(c5, [0, 1])
    with pytest.raises(GraphError):
        validate_cycle(c5, [0, 1, 2])
    with pytest.raises(GraphError):
        validate_cycle(c5, [0, 1, 0])


def test_cycle_spectrum_guard():
    with pytest.raises(InfeasibleError):
        cycle_spectrum(petersen(13, 2)[0])


def test_hamiltonian(k4):
    ok, cyc = is_hamiltonian(k4)
    assert ok and cyc.length == 4


def test_dirac_bound_holds_for_small_two_connected_graphs():
    for n in range(3, 7):
        for g in enumerate_graphs(n, GraphFilter.BICONNECTED):
            assert circumference(g)[0] >= dirac_bound(g)


def test_dirac_bound_families():
    for n, k in [(5, 2), (8, 3), (9, 4)]:
        g, _ = petersen(n, k)
        assert circumference(g)[0] >= dirac_bound(g) == 6
    g, _ = counterexample_2connected(6)
    assert circumference(g)[0] >= dirac_bound(g) == 4


def test_dirac_needs_two_connected():
    with pytest.raises(GraphError):
        dirac_bound(make_graph(3, [(0, 1), (1, 2)]))
