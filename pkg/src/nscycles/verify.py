"""Named invariant checks bundled into a machine-readable report.

Each check exercises one statement the library is built around (rank of
the cycle space, spanning by non-separating circuits, ear reduction,
path-chord lifting, theta pairs, unit-overlap witnesses, cocircuit
recovery, orthogonality) plus two structural partitions.  Checks whose
hypotheses the input graph does not meet, or whose exhaustive form would
blow the size guards, report as skipped rather than failed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from .errors import AllDegreesTwo, GraphError
from .graph_core import (
    EdgeSet,
    Graph,
    delete_edges,
    blocks,
    fingerprint,
    is_connected,
    is_k_connected,
    is_top_3_connected,
    is_top_k4,
    thread_delete,
    threads,
)
from .cycle_space import (
    Gf2Matrix,
    cyclomatic_number,
    express_in_span,
    fundamental_basis,
    gf2_rank,
    is_cycle_space_member,
)
from .circuits import (
    enumerate_circuits,
    is_path_chord,
    is_separating,
    non_separating_circuits,
    split_on_path_chord,
)
from .decomposition import decompose_cs_element, ear_sequence, theta_pair
from .cocircuits import (
    CounterexampleReport,
    bonds,
    circuits_meeting_once,
    minimal_cut_candidates,
    verify_cocircuit_identity,
)

THETA_EDGE_BOUND = 15
TRIPLE_EDGE_BOUND = 12
ORTHOGONALITY_EDGE_BOUND = 12
WITNESS_SAMPLE_CAP = 150
DECOMPOSE_SAMPLE_CAP = 64


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


@dataclass(frozen=True)
class VerificationReport:
    graph_name: str
    checks: tuple[CheckResult, ...]
    elapsed_ms: int

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, include_timing: bool = False) -> dict:
        payload: dict = {
            "graph": self.graph_name,
            "checks": [
                {"name": c.name, "pass": c.passed, "details": c.details}
                for c in self.checks
            ],
        }
        if include_timing:
            payload["elapsed_ms"] = self.elapsed_ms
        return payload


def _skip(reason: str) -> tuple[bool, str]:
    return True, f"skipped: {reason}"


def _check_blocks_partition(g: Graph) -> tuple[bool, str]:
    decomposition = blocks(g)
    union = 0
    total = 0
    for block in decomposition.blocks:
        if union & block.bits:
            return False, "blocks overlap"
        union |= block.bits
        total += len(block)
    if union != g.full_edge_set().bits:
        return False, "blocks miss some edges"
    return True, f"{decomposition.block_count} blocks cover {total} edges"


def _check_threads_partition(g: Graph) -> tuple[bool, str]:
    if not is_connected(g):
        return _skip("graph is disconnected")
    try:
        ts = threads(g)
    except AllDegreesTwo:
        return _skip("thread partition undefined")
    seen: set[int] = set()
    for t in ts:
        if seen & set(t.edges):
            return False, "threads overlap"
        seen |= set(t.edges)
    if seen != set(g.edges):
        return False, "threads miss some edges"
    return True, f"{len(ts)} threads cover {len(seen)} edges"


def _check_host(g: Graph) -> tuple[bool, str]:
    ok = g.simple and is_k_connected(g, 3)
    return ok, "simple and 3-connected" if ok else "host must be simple and 3-connected"


def _check_cycle_space_rank(g: Graph) -> tuple[bool, str]:
    if not is_connected(g):
        return _skip("graph is disconnected")
    basis = fundamental_basis(g)
    rank = gf2_rank(Gf2Matrix.from_rows(basis, g.universe))
    dim = cyclomatic_number(g)
    ok = rank == dim == len(basis)
    return ok, f"rank {rank}, dimension {dim}"


def _check_nc_span(g: Graph, cap: int) -> tuple[bool, str]:
    if not (g.simple and is_k_connected(g, 3)):
        return _skip("requires a simple 3-connected host")
    nc = non_separating_circuits(g, cap)
    matrix = Gf2Matrix.from_rows(nc.edge_sets(), g.universe)
    rank = gf2_rank(matrix)
    dim = cyclomatic_number(g)
    if rank != dim:
        return False, f"rank {rank} != dimension {dim}"
    for circuit in fundamental_basis(g):
        express_in_span(circuit, matrix)
    return True, f"{len(nc)} circuits span dimension {dim}"


def _check_decomposition_replay(g: Graph, cap: int, rng: random.Random) -> tuple[bool, str]:
    if not is_top_3_connected(g):
        return _skip("requires a subdivision of a 3-connected graph")
    targets = [c.edges for c in enumerate_circuits(g, cap)]
    if len(targets) > DECOMPOSE_SAMPLE_CAP:
        targets = targets[:DECOMPOSE_SAMPLE_CAP // 2]
        basis = fundamental_basis(g)
        for _ in range(DECOMPOSE_SAMPLE_CAP // 2):
            x = EdgeSet.empty(g.universe)
            for row in basis:
                if rng.random() < 0.5:
                    x = x ^ row
            targets.append(x)
    checked = 0
    for target in targets:
        cert = decompose_cs_element(g, target)
        if cert.replay() != target:
            return False, "replay mismatch"
        for part in cert.parts:
            if is_separating(g, part):
                return False, "certificate part is separating"
        checked += 1
    return True, f"{checked} targets decomposed and replayed"


def _check_ear_assembly(g: Graph) -> tuple[bool, str]:
    if not is_top_3_connected(g):
        return _skip("requires a subdivision of a 3-connected graph")
    if is_top_k4(g):
        return True, "already a subdivision of K4"
    seq = ear_sequence(g)
    current = g
    for step_fingerprint, t in seq.steps:
        if fingerprint(current) != step_fingerprint or not is_top_3_connected(current):
            return False, "intermediate graph fails the reduction invariant"
        current = thread_delete(current, t)
    if current != seq.terminal or not is_top_k4(current):
        return False, "terminal graph is not a subdivision of K4"
    return True, f"{len(seq.steps)} reduction steps"


def _check_path_chord_lifting(g: Graph, cap: int) -> tuple[bool, str]:
    if not is_top_3_connected(g):
        return _skip("requires a subdivision of a 3-connected graph")
    thread_pool = threads(g)
    exhaustive = len(g.edges) <= TRIPLE_EDGE_BOUND
    if not exhaustive:
        thread_pool = thread_pool[:3]
    checked = 0
    for t in thread_pool:
        reduced = thread_delete(g, t)
        if not is_connected(reduced):
            continue
        pool = enumerate_circuits(reduced, cap)
        if not exhaustive:
            pool = pool[:200]
        for c in pool:
            if is_separating(reduced, c) or not is_path_chord(g, c, t):
                continue
            r, s = split_on_path_chord(g, c, t)
            if is_separating(g, r) or is_separating(g, s):
                return False, "split produced a separating circuit"
            checked += 1
    return True, f"{checked} split pairs verified"


def _check_theta_pairs(g: Graph, cap: int) -> tuple[bool, str]:
    if not is_top_3_connected(g):
        return _skip("requires a subdivision of a 3-connected graph")
    pool = threads(g)
    if len(g.edges) > THETA_EDGE_BOUND:
        pool = pool[:5]
    for t in pool:
        pair = theta_pair(g, t, cap)
        tset = g.edge_set(t.edges)
        if pair.first.edges & pair.second.edges != tset:
            return False, "edge intersection is not the thread"
        shared = set(pair.first.vertex_cycle) & set(pair.second.vertex_cycle)
        if shared != set(t.vertices):
            return False, "vertex intersection is not the thread"
        if is_separating(g, pair.first) or is_separating(g, pair.second):
            return False, "theta circuit is separating"
    return True, f"{len(pool)} threads paired"


def _check_unit_overlap_witnesses(g: Graph, cap: int) -> tuple[bool, str]:
    if not (g.simple and is_k_connected(g, 3)):
        return _skip("requires a simple 3-connected host")
    nc = non_separating_circuits(g, cap)
    ids = sorted(g.edges)
    pool = [(e,) for e in ids] + list(combinations(ids, 2))
    pool = pool[:WITNESS_SAMPLE_CAP]
    checked = 0
    for combo in pool:
        x = g.edge_set(combo)
        if not is_connected(delete_edges(g, x)):
            continue
        result = circuits_meeting_once(g, x, nc)
        if isinstance(result, CounterexampleReport):
            return False, f"no witness pair for edges {list(combo)}"
        checked += 1
    return True, f"{checked} cuts witnessed"


def _check_cocircuit_recovery(g: Graph) -> tuple[bool, str]:
    if not (g.simple and is_k_connected(g, 3)):
        return _skip("requires a simple 3-connected host")
    if len(g.edges) > 18 or len(g.vertices) > 16:
        return _skip("graph exceeds the exhaustive bounds")
    ok = verify_cocircuit_identity(g)
    return ok, "minimal cut candidates equal bonds" if ok else "families differ"


def _check_orthogonality(g: Graph, cap: int) -> tuple[bool, str]:
    if not is_connected(g):
        return _skip("graph is disconnected")
    if len(g.edges) > ORTHOGONALITY_EDGE_BOUND or len(g.vertices) > 16:
        return _skip("graph exceeds the exhaustive bounds")
    all_bonds = bonds(g)
    all_circuits = enumerate_circuits(g, cap)
    for b in all_bonds:
        for c in all_circuits:
            if len(b.edges & c.edges) % 2 != 0:
                return False, "odd bond-circuit intersection"
    return True, f"{len(all_bonds)} bonds x {len(all_circuits)} circuits all even"


def verify_graph(g: Graph, name: str, cap: int = 100_000) -> VerificationReport:
    """Run every named check against one graph."""
    rng = random.Random(f"verify:{name}:{fingerprint(g)}")
    started = time.monotonic()
    battery = [
        ("blocks_partition", lambda: _check_blocks_partition(g)),
        ("cocircuit_recovery", lambda: _check_cocircuit_recovery(g)),
        ("cut_cycle_orthogonality", lambda: _check_orthogonality(g, cap)),
        ("cycle_space_rank", lambda: _check_cycle_space_rank(g)),
        ("decomposition_replay", lambda: _check_decomposition_replay(g, cap, rng)),
        ("ear_assembly_reduction", lambda: _check_ear_assembly(g)),
        ("host_three_connected", lambda: _check_host(g)),
        ("nc_spans_cycle_space", lambda: _check_nc_span(g, cap)),
        ("path_chord_split_lifting", lambda: _check_path_chord_lifting(g, cap)),
        ("theta_pairs", lambda: _check_theta_pairs(g, cap)),
        ("threads_partition", lambda: _check_threads_partition(g)),
        ("unit_overlap_witnesses", lambda: _check_unit_overlap_witnesses(g, cap)),
    ]
    results = []
    for check_name, run in battery:
        try:
            passed, details = run()
        except GraphError as exc:
            passed, details = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check_name, passed, details))
    elapsed_ms = int((time.monotonic() - started) * 1000)
    return VerificationReport(name, tuple(results), elapsed_ms)
