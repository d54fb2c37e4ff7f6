"""Constructive cycle-space decompositions for 3-connected graphs.

The cycle space of a 3-connected graph is generated by its non-separating
circuits (Tutte).  This package makes that constructive at desk scale:
ear-style thread reduction, path-chord splitting, theta pairs, certificate
decompositions, and Whitney-style cocircuit recovery, each checkable by
brute-force oracles.
"""

from .errors import GraphError
from .graph_core import (
    BlockDecomposition,
    EdgeSet,
    Graph,
    Thread,
    blocks,
    build_graph,
    contract_edges,
    delete_edges,
    fingerprint,
    is_connected,
    is_k_connected,
    is_top_3_connected,
    is_top_k4,
    suppress_degree_two,
    thread_delete,
    thread_from_edges,
    threads,
)
from .cycle_space import (
    Gf2Matrix,
    SpanCertificate,
    cyclomatic_number,
    express_in_span,
    fundamental_basis,
    gf2_rank,
    is_cycle_space_member,
    sym_diff,
)
from .circuits import (
    Circuit,
    NcCatalog,
    circuit_from_edges,
    enumerate_circuits,
    even_subgraph_to_circuits,
    is_path_chord,
    is_separating,
    non_separating_circuits,
    split_on_path_chord,
)
from .decomposition import (
    DecompositionCertificate,
    EarSequence,
    ThetaPair,
    count_threads,
    decompose_circuit,
    decompose_cs_element,
    ear_sequence,
    find_reducible_thread,
    lift_circuit,
    theta_pair,
)
from .cocircuits import (
    Bond,
    CounterexampleReport,
    bonds,
    circuits_meeting_once,
    is_cut_candidate,
    minimal_cut_candidates,
    verify_cocircuit_identity,
)
from .corpus import gen_corpus, subdivide_every_edge
from .verify import VerificationReport, verify_graph

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "Bond",
    "Circuit",
    "CounterexampleReport",
    "DecompositionCertificate",
    "EarSequence",
    "EdgeSet",
    "Gf2Matrix",
    "Graph",
    "GraphError",
    "NcCatalog",
    "SpanCertificate",
    "ThetaPair",
    "Thread",
    "VerificationReport",
    "blocks",
    "bonds",
    "build_graph",
    "circuit_from_edges",
    "circuits_meeting_once",
    "contract_edges",
    "count_threads",
    "cyclomatic_number",
    "decompose_circuit",
    "decompose_cs_element",
    "delete_edges",
    "ear_sequence",
    "enumerate_circuits",
    "even_subgraph_to_circuits",
    "express_in_span",
    "find_reducible_thread",
    "fingerprint",
    "fundamental_basis",
    "gen_corpus",
    "gf2_rank",
    "is_connected",
    "is_cut_candidate",
    "is_cycle_space_member",
    "is_k_connected",
    "is_path_chord",
    "is_separating",
    "is_top_3_connected",
    "is_top_k4",
    "lift_circuit",
    "minimal_cut_candidates",
    "non_separating_circuits",
    "split_on_path_chord",
    "subdivide_every_edge",
    "suppress_degree_two",
    "sym_diff",
    "theta_pair",
    "thread_delete",
    "thread_from_edges",
    "threads",
    "verify_cocircuit_identity",
    "verify_graph",
]
