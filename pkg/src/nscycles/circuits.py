"""Circuit enumeration, the separating test, and path-chord geometry."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CircuitExplosion,
    Disconnected,
    NotACircuit,
    NotAPathChord,
    NotEven,
)
from .graph_core import (
    EdgeSet,
    Graph,
    Thread,
    _validate_thread,
    blocks,
    contract_edges,
    fingerprint,
    is_connected,
)
from .cycle_space import is_cycle_space_member

DEFAULT_CIRCUIT_CAP = 100_000


@dataclass(frozen=True)
class Circuit:
    """Edge set of a single cycle, with its canonical cyclic vertex order."""

    edges: EdgeSet
    vertex_cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def sort_key(self) -> tuple[int, ...]:
        return self.edges.ids()


@dataclass(frozen=True)
class NcCatalog:
    """All non-separating circuits of one graph, in canonical order."""

    members: tuple[Circuit, ...]
    graph_fingerprint: str

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def edge_sets(self) -> tuple[EdgeSet, ...]:
        return tuple(c.edges for c in self.members)


def _canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    if len(seq) <= 2:
        return tuple(sorted(seq))
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def circuit_from_edges(g: Graph, edge_ids) -> Circuit:
    """Validate that the edges form one cycle of ``g`` and canonicalize it."""
    ids = sorted(set(edge_ids))
    if not ids:
        raise NotACircuit("empty edge set")
    for e in ids:
        if e not in g.edges:
            raise NotACircuit(f"edge {e} is not an edge of the graph")
    if len(ids) == 1:
        u, v = g.psi[ids[0]]
        if u != v:
            raise NotACircuit("a single non-loop edge is not a cycle")
        return Circuit(g.edge_set(ids), (u,))
    inc: dict = {}
    for e in ids:
        u, v = g.psi[e]
        if u == v:
            raise NotACircuit(f"loop edge {e} inside a multi-edge set")
        inc.setdefault(u, []).append((e, v))
        inc.setdefault(v, []).append((e, u))
    if any(len(lst) != 2 for lst in inc.values()):
        raise NotACircuit("some vertex does not have degree 2")
    start = min(inc)
    cycle = [start]
    prev_edge = None
    cur = start
    used = 0
    while True:
        e, w = next((e, w) for e, w in inc[cur] if e != prev_edge)
        used += 1
        if w == start:
            break
        cycle.append(w)
        prev_edge, cur = e, w
    if used != len(ids):
        raise NotACircuit("edges form more than one cycle")
    return Circuit(g.edge_set(ids), _canonical_cycle(tuple(cycle)))


def _validate_circuit(g: Graph, c: Circuit) -> Circuit:
    rebuilt = circuit_from_edges(g, c.edges.ids())
    if rebuilt.vertex_cycle != c.vertex_cycle:
        raise NotACircuit("vertex cycle does not match the edge set")
    return rebuilt


@lru_cache(maxsize=None)
def _enumerate(g: Graph, cap: int) -> tuple[Circuit, ...]:
    adjacency = g.adjacency
    found: dict[int, tuple[int, ...]] = {}

    def close(path_edges: list[int], path_verts: list[int], e: int) -> None:
        bits = 1 << e
        for x in path_edges:
            bits |= 1 << x
        if bits not in found:
            if len(found) >= cap:
                raise CircuitExplosion(f"more than {cap} circuits")
            found[bits] = tuple(path_verts)

    def extend(start: int, cur: int, path_edges: list[int],
               path_verts: list[int], on_path: set[int]) -> None:
        for e, w in adjacency[cur]:
            if e in path_edges_set:
                continue
            if w == start:
                close(path_edges, path_verts, e)
            elif w > start and w not in on_path:
                path_edges.append(e)
                path_edges_set.add(e)
                path_verts.append(w)
                on_path.add(w)
                extend(start, w, path_edges, path_verts, on_path)
                on_path.remove(w)
                path_verts.pop()
                path_edges_set.remove(e)
                path_edges.pop()

    for s in sorted(g.vertices):
        path_edges_set: set[int] = set()
        extend(s, s, [], [s], {s})

    circuits = [
        Circuit(EdgeSet(bits, g.universe), _canonical_cycle(verts))
        for bits, verts in found.items()
    ]
    circuits.sort(key=Circuit.sort_key)
    return tuple(circuits)


def enumerate_circuits(g: Graph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[Circuit]:
    """All circuits of ``g``, ordered lexicographically by sorted edge ids.

    Raises CircuitExplosion when the count exceeds ``cap``.
    """
    return list(_enumerate(g, cap))


@lru_cache(maxsize=None)
def _host_block_count(g: Graph) -> int:
    return blocks(g).block_count


@lru_cache(maxsize=None)
def _is_separating_edges(g: Graph, edges: EdgeSet) -> bool:
    contracted, _ = contract_edges(g, edges)
    return blocks(contracted).block_count > _host_block_count(g)


def is_separating(g: Graph, c: Circuit) -> bool:
    """True iff contracting the circuit leaves more blocks than the host has.

    Loops created by the contraction count as blocks, so a chord of the
    circuit is enough to make it separating.
    """
    if not is_connected(g):
        raise Disconnected("the separating test is defined on connected graphs")
    _validate_circuit(g, c)
    return _is_separating_edges(g, c.edges)


@lru_cache(maxsize=None)
def _nc_catalog(g: Graph, cap: int) -> NcCatalog:
    members = tuple(
        c for c in _enumerate(g, cap) if not _is_separating_edges(g, c.edges)
    )
    return NcCatalog(members, fingerprint(g))


def non_separating_circuits(g: Graph, cap: int = DEFAULT_CIRCUIT_CAP) -> NcCatalog:
    """Catalog of all non-separating circuits of a connected graph."""
    if not is_connected(g):
        raise Disconnected("non-separating circuits require a connected graph")
    return _nc_catalog(g, cap)


def is_path_chord(g: Graph, c: Circuit, t: Thread) -> bool:
    """True iff the thread meets the circuit exactly in its two endpoints
    and shares no edge with it."""
    _validate_thread(g, t)
    c = _validate_circuit(g, c)
    if not c.edges.isdisjoint(g.edge_set(t.edges)):
        return False
    return set(c.vertex_cycle) & set(t.vertices) == set(t.endpoints)


def split_on_path_chord(g: Graph, c: Circuit, t: Thread) -> tuple[Circuit, Circuit]:
    """Split circuit ``c`` along path-chord ``t`` into the two other cycles
    of their union.

    The first returned circuit is the one containing the lowest edge id of
    ``c``; both contain all of ``t``, and their symmetric difference is ``c``.
    """
    if not is_path_chord(g, c, t):
        raise NotAPathChord("thread is not a path-chord of the circuit")
    c = _validate_circuit(g, c)
    x, y = t.endpoints
    if len(c) == 2:
        arc_sets = [[c.edges.ids()[0]], [c.edges.ids()[1]]]
    else:
        pair_to_edge = {}
        for e in c.edges:
            u, v = g.psi[e]
            pair_to_edge[(u, v)] = e
        seq = c.vertex_cycle
        i = seq.index(x)
        seq = seq[i:] + seq[:i]
        j = seq.index(y)
        arcs = [list(seq[: j + 1]), [seq[0]] + list(reversed(seq[j:]))]
        arc_sets = []
        for arc in arcs:
            arc_sets.append(
                [pair_to_edge[(min(u, v), max(u, v))] for u, v in zip(arc, arc[1:])]
            )
    halves = [
        circuit_from_edges(g, arc + list(t.edges)) for arc in arc_sets
    ]
    lowest = c.edges.ids()[0]
    if lowest in halves[0].edges:
        return halves[0], halves[1]
    return halves[1], halves[0]


def even_subgraph_to_circuits(g: Graph, x: EdgeSet) -> list[Circuit]:
    """Peel an even edge set into edge-disjoint circuits.

    Greedy and deterministic: each round walks from the lowest remaining
    edge id, always choosing the lowest-id unused edge, and extracts the
    first cycle the walk closes.
    """
    if not is_cycle_space_member(g, x):
        raise NotEven("edge set has a vertex of odd degree")
    remaining = x.bits
    out = []
    while remaining:
        e0 = (remaining & -remaining).bit_length() - 1
        start = min(g.psi[e0])
        seq_verts = [start]
        seq_edges: list[int] = []
        pos = {start: 0}
        cur = start
        while True:
            e, w = next(
                (e, w)
                for e, w in g.adjacency[cur]
                if remaining >> e & 1 and (not seq_edges or e != seq_edges[-1])
            )
            seq_edges.append(e)
            if w in pos:
                cycle_edges = seq_edges[pos[w]:]
                break
            seq_verts.append(w)
            pos[w] = len(seq_verts) - 1
            cur = w
        for e in cycle_edges:
            remaining ^= 1 << e
        out.append(circuit_from_edges(g, cycle_edges))
    return out
