"""Multigraph core: stable edge ids, minors, blocks, threads, subdivisions.

Edge ids are assigned once and never renumbered: deletion and contraction
return new graphs over the same edge universe, so edge sets stay comparable
across a graph and its minors.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (
    AllDegreesTwo,
    DanglingVertexId,
    Disconnected,
    DuplicateEdge,
    LoopRejected,
    NotAThread,
    UniverseMismatch,
)


@dataclass(frozen=True)
class EdgeSet:
    """Subset of an edge universe, stored as a bitmask keyed by edge id."""

    bits: int
    universe: int

    @staticmethod
    def from_ids(ids, universe: int) -> EdgeSet:
        bits = 0
        for e in ids:
            if not 0 <= e < universe:
                raise UniverseMismatch(
                    f"edge id {e} outside universe of {universe} edges"
                )
            bits |= 1 << e
        return EdgeSet(bits, universe)

    @staticmethod
    def empty(universe: int) -> EdgeSet:
        return EdgeSet(0, universe)

    def ids(self) -> tuple[int, ...]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return tuple(out)

    def _check(self, other: EdgeSet) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(
                f"edge universes differ: {self.universe} vs {other.universe}"
            )

    def __xor__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits ^ other.bits, self.universe)

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits | other.bits, self.universe)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits & other.bits, self.universe)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._check(other)
        return EdgeSet(self.bits & ~other.bits, self.universe)

    def issubset(self, other: EdgeSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: EdgeSet) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.universe and self.bits >> e & 1 == 1

    def __iter__(self):
        return iter(self.ids())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"EdgeSet({set(self.ids()) or '{}'} / {self.universe})"


class Graph:
    """Undirected multigraph with immutable structure and stable edge ids.

    ``psi`` maps each edge id to its unordered endpoint pair; loops (equal
    endpoints) and parallel edges are allowed internally, though graphs
    built by :func:`build_graph` are simple.  Instances are values: all
    operations return new graphs.
    """

    __slots__ = ("vertices", "edges", "psi", "universe", "simple",
                 "_key", "_hash", "_adj", "_deg")

    def __init__(self, vertices, edges, psi, universe: int):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(edges)
        self.psi = {e: (min(p), max(p)) for e, p in psi.items() if e in self.edges}
        self.universe = universe
        pairs = list(self.psi.values())
        self.simple = (
            all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs)
        )
        self._key = (
            tuple(sorted(self.vertices)),
            tuple(sorted((e, u, v) for e, (u, v) in self.psi.items())),
            universe,
        )
        self._hash = hash(self._key)
        self._adj = None
        self._deg = None

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        kind = "simple" if self.simple else "multi"
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges, {kind})"

    @property
    def adjacency(self) -> dict:
        """Vertex -> tuple of (edge id, other endpoint), sorted by edge id.

        Loops appear once, as (edge, same vertex).
        """
        if self._adj is None:
            adj = {v: [] for v in self.vertices}
            for e in sorted(self.edges):
                u, v = self.psi[e]
                adj[u].append((e, v))
                if u != v:
                    adj[v].append((e, u))
            self._adj = {v: tuple(lst) for v, lst in adj.items()}
        return self._adj

    def degree(self, v: int) -> int:
        if self._deg is None:
            deg = {u: 0 for u in self.vertices}
            for u, w in self.psi.values():
                deg[u] += 1
                deg[w] += 1
            self._deg = deg
        return self._deg[v]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.psi[e]

    def edge_set(self, ids) -> EdgeSet:
        return EdgeSet.from_ids(ids, self.universe)

    def full_edge_set(self) -> EdgeSet:
        return EdgeSet.from_ids(self.edges, self.universe)


def fingerprint(g: Graph) -> str:
    """Stable 16-hex-digit digest of the graph's labeled structure."""
    return hashlib.sha256(repr(g._key).encode()).hexdigest()[:16]


def build_graph(vertex_count: int, edge_pairs) -> Graph:
    """Build a simple graph with edge ids 0..m-1 in input order."""
    vertices = range(vertex_count)
    psi = {}
    seen = set()
    for i, (u, v) in enumerate(edge_pairs):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise DanglingVertexId(f"edge ({u},{v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise LoopRejected(f"edge {i} is a loop at vertex {u}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise DuplicateEdge(f"edge {i} repeats pair {pair}")
        seen.add(pair)
        psi[i] = pair
    return Graph(vertices, range(len(psi)), psi, len(psi))


def _check_universe(g: Graph, z: EdgeSet) -> None:
    if z.universe != g.universe:
        raise UniverseMismatch(
            f"edge set universe {z.universe} does not match graph universe {g.universe}"
        )


def delete_edges(g: Graph, z: EdgeSet) -> Graph:
    """Remove the edges of ``z``; every vertex is retained."""
    _check_universe(g, z)
    keep = [e for e in g.edges if e not in z]
    return Graph(g.vertices, keep, g.psi, g.universe)


def contract_edges(g: Graph, z: EdgeSet) -> tuple[Graph, dict]:
    """Contract the edges of ``z``.

    Each connected component of the spanning subgraph (V, z) collapses to a
    single vertex named by its smallest member.  Surviving edges keep their
    ids; merged endpoints may create loops and parallel edges, which are
    retained.  Returns the contracted graph and the old-to-new vertex map.
    """
    _check_universe(g, z)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in z:
        if e in g.edges:
            u, v = g.psi[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    rep = {}
    for v in sorted(g.vertices):
        r = find(v)
        rep.setdefault(r, v)
    vertex_map = {v: rep[find(v)] for v in g.vertices}
    keep = [e for e in g.edges if e not in z]
    psi = {e: (vertex_map[g.psi[e][0]], vertex_map[g.psi[e][1]]) for e in keep}
    return Graph(set(vertex_map.values()), keep, psi, g.universe), vertex_map


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as edge sets), cut vertices, and the total block count."""

    blocks: tuple[EdgeSet, ...]
    cut_vertices: frozenset
    block_count: int


def blocks(g: Graph) -> BlockDecomposition:
    """Partition the edges into blocks (biconnected components).

    Every loop is its own block, as is every bridge.  Works on any
    multigraph, one component at a time.
    """
    adj = {v: [] for v in g.vertices}
    loop_blocks = []
    for e in sorted(g.edges):
        u, v = g.psi[e]
        if u == v:
            loop_blocks.append([e])
        else:
            adj[u].append((e, v))
            adj[v].append((e, u))

    disc: dict = {}
    low: dict = {}
    used = set()
    stack: list[int] = []
    found: list[list[int]] = []
    cut = set()
    counter = iter(range(len(g.vertices) + len(g.edges) + 1))

    def dfs(v: int, parent_edge) -> None:
        disc[v] = low[v] = next(counter)
        children = 0
        for e, w in adj[v]:
            if e == parent_edge or e in used:
                continue
            used.add(e)
            stack.append(e)
            if w not in disc:
                children += 1
                dfs(w, e)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    if parent_edge is not None:
                        cut.add(v)
                    block = []
                    while True:
                        x = stack.pop()
                        block.append(x)
                        if x == e:
                            break
                    found.append(block)
            else:
                low[v] = min(low[v], disc[w])
        if parent_edge is None and children > 1:
            cut.add(v)

    for v in sorted(g.vertices):
        if v not in disc:
            dfs(v, None)

    all_blocks = [EdgeSet.from_ids(b, g.universe) for b in found + loop_blocks]
    all_blocks.sort(key=lambda b: b.ids())
    return BlockDecomposition(tuple(all_blocks), frozenset(cut), len(all_blocks))


def is_connected(g: Graph) -> bool:
    if len(g.vertices) <= 1:
        return True
    start = min(g.vertices)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for _, w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def _simple_pairs(g: Graph) -> set[tuple[int, int]]:
    return {(u, v) for u, v in g.psi.values() if u != v}


def _connected_without(vertices, pairs, removed) -> bool:
    left = [v for v in vertices if v not in removed]
    if len(left) <= 1:
        return True
    adj = {v: [] for v in left}
    for u, v in pairs:
        if u not in removed and v not in removed:
            adj[u].append(v)
            adj[v].append(u)
    seen = {left[0]}
    queue = deque([left[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(left)


@lru_cache(maxsize=None)
def is_k_connected(g: Graph, k: int) -> bool:
    """Exhaustive vertex-connectivity test on the underlying simple graph.

    True iff |V| > k and no vertex set of size < k disconnects the graph.
    Intended for desk-scale graphs only.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(g.vertices)
    if n <= k:
        return False
    pairs = _simple_pairs(g)
    verts = sorted(g.vertices)
    for size in range(k):
        for removed in combinations(verts, size):
            if not _connected_without(verts, pairs, set(removed)):
                return False
    return True


@dataclass(frozen=True)
class Thread:
    """Maximal path whose inner vertices all have degree two in the host.

    ``edges`` and ``vertices`` run along the path; the orientation is
    canonical, so equal threads compare equal.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def inner_vertices(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @staticmethod
    def oriented(edges, vertices) -> Thread:
        fwd = (tuple(edges), tuple(vertices))
        rev = (tuple(reversed(edges)), tuple(reversed(vertices)))
        return Thread(*min(fwd, rev))


@lru_cache(maxsize=None)
def _threads(g: Graph) -> tuple[Thread, ...]:
    if not is_connected(g):
        raise Disconnected("thread partition requires a connected graph")
    deg = {v: g.degree(v) for v in g.vertices}
    branch = sorted(v for v in g.vertices if deg[v] != 2)
    if g.edges and not branch:
        raise AllDegreesTwo("every vertex has degree 2: the graph is a cycle")
    covered: set[int] = set()
    out = []
    for v in branch:
        for e, w in g.adjacency[v]:
            if e in covered:
                continue
            if w == v:
                raise AllDegreesTwo(f"loop at vertex {v}: thread partition undefined")
            covered.add(e)
            edge_seq = [e]
            vert_seq = [v, w]
            cur = w
            while deg[cur] == 2:
                step = [(e2, w2) for e2, w2 in g.adjacency[cur] if e2 != edge_seq[-1]]
                if len(step) != 1:
                    raise AllDegreesTwo(
                        f"degree-2 vertex {cur} has a loop: thread partition undefined"
                    )
                e2, w2 = step[0]
                covered.add(e2)
                edge_seq.append(e2)
                vert_seq.append(w2)
                cur = w2
            if cur == v:
                raise AllDegreesTwo(
                    f"degree-2 run closes on vertex {v}: thread partition undefined"
                )
            out.append(Thread.oriented(edge_seq, vert_seq))
    if covered != set(g.edges):
        raise AllDegreesTwo("some degree-2 run never reaches a branch vertex")
    out.sort(key=lambda t: tuple(sorted(t.edges)))
    return tuple(out)


def threads(g: Graph) -> list[Thread]:
    """The unique partition of the edges into maximal threads."""
    return list(_threads(g))


def _validate_thread(g: Graph, t: Thread) -> None:
    if len(t.edges) + 1 != len(t.vertices) or not t.edges:
        raise NotAThread("malformed thread")
    if len(set(t.vertices)) != len(t.vertices):
        raise NotAThread("thread repeats a vertex")
    for e, u, v in zip(t.edges, t.vertices, t.vertices[1:]):
        if e not in g.edges:
            raise NotAThread(f"edge {e} not in graph")
        if g.psi[e] != (min(u, v), max(u, v)):
            raise NotAThread(f"edge {e} does not join {u} and {v}")
    for v in t.inner_vertices():
        if g.degree(v) != 2:
            raise NotAThread(f"inner vertex {v} has degree {g.degree(v)}")
    for v in t.endpoints:
        if g.degree(v) == 2:
            raise NotAThread(f"end vertex {v} has degree 2")


def thread_delete(g: Graph, t: Thread) -> Graph:
    """Remove a thread: all of its edges and all of its inner vertices."""
    _validate_thread(g, t)
    keep_edges = g.edges - set(t.edges)
    keep_vertices = g.vertices - set(t.inner_vertices())
    return Graph(keep_vertices, keep_edges, g.psi, g.universe)


def thread_from_edges(g: Graph, edge_ids) -> Thread:
    """Reassemble a thread of ``g`` from its (unordered) edge ids."""
    ids = sorted(set(edge_ids))
    if not ids:
        raise NotAThread("empty edge list")
    inc: dict = {}
    for e in ids:
        if e not in g.edges:
            raise NotAThread(f"edge {e} not in graph")
        u, v = g.psi[e]
        if u == v:
            raise NotAThread(f"edge {e} is a loop")
        inc.setdefault(u, []).append((e, v))
        inc.setdefault(v, []).append((e, u))
    ends = sorted(v for v, lst in inc.items() if len(lst) == 1)
    if len(ends) != 2 or any(len(lst) > 2 for lst in inc.values()):
        raise NotAThread("edges do not form a path")
    cur = ends[0]
    prev_edge = None
    edge_seq: list[int] = []
    vert_seq = [cur]
    while True:
        step = [(e, w) for e, w in inc[cur] if e != prev_edge]
        if not step:
            break
        e, w = step[0]
        edge_seq.append(e)
        vert_seq.append(w)
        prev_edge, cur = e, w
    if len(edge_seq) != len(ids) or len(set(vert_seq)) != len(vert_seq):
        raise NotAThread("edges do not form a simple path")
    t = Thread.oriented(edge_seq, vert_seq)
    _validate_thread(g, t)
    return t


def suppress_degree_two(g: Graph) -> tuple[Graph, dict]:
    """Replace every maximal thread by a single edge joining its endpoints.

    The result lives in a fresh edge universe (edge i stands for thread i);
    ``thread_map`` records which original thread each new edge represents.
    The result may be a multigraph when two threads share both endpoints.
    """
    ts = _threads(g)
    branch = [v for v in sorted(g.vertices) if g.degree(v) != 2]
    psi = {i: t.endpoints for i, t in enumerate(ts)}
    thread_map = {i: t for i, t in enumerate(ts)}
    return Graph(branch, range(len(ts)), psi, len(ts)), thread_map


@lru_cache(maxsize=None)
def is_top_3_connected(g: Graph) -> bool:
    """True iff the graph is a subdivision of a simple 3-connected graph."""
    if not g.edges or not is_connected(g):
        return False
    try:
        suppressed, _ = suppress_degree_two(g)
    except AllDegreesTwo:
        return False
    return suppressed.simple and is_k_connected(suppressed, 3)


@lru_cache(maxsize=None)
def is_top_k4(g: Graph) -> bool:
    """True iff suppressing degree-2 vertices yields K4."""
    if not g.edges or not is_connected(g):
        return False
    try:
        suppressed, _ = suppress_degree_two(g)
    except AllDegreesTwo:
        return False
    return (
        suppressed.simple
        and len(suppressed.vertices) == 4
        and len(suppressed.edges) == 6
        and all(suppressed.degree(v) == 3 for v in suppressed.vertices)
    )
