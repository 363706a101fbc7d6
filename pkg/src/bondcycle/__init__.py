"""Exact largest bonds, longest cycles and the longest-cycle/largest-bond
conjecture on small graphs."""

from .bonds import (
    Bond,
    BondError,
    Certificate,
    CoSpectrum,
    InfeasibleError,
    all_largest_bonds,
    bond_upper_bound,
    certified_largest_bond,
    co_spectrum,
    is_dual_hamiltonian,
    largest_bond,
    petersen_bond_of_size,
    petersen_bond_step1,
    petersen_bond_step2,
    validate_bond,
)
from .conjecture import (
    ConjectureReport,
    SweepSummary,
    TheoremContradiction,
    Verdict,
    batch_verify,
    check_conjecture,
    classify_hypotheses,
    cycle_meets_bond,
    verify_theorem4_scope,
)
from .cycles import (
    Cycle,
    CycleSpectrum,
    all_longest_cycles,
    circumference,
    cycle_spectrum,
    dirac_bound,
    is_hamiltonian,
    validate_cycle,
)
from .generators import GraphFilter, counterexample_2connected, enumerate_graphs, petersen
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    cut_edges,
    is_connected,
    is_connected_induced,
    make_graph,
    min_degree,
    vertex_connectivity_at_least,
)
from .io import parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6

__version__ = "0.1.0"
