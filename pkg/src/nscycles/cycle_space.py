"""GF(2) linear algebra over the edge universe of a graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, NotInSpan, UniverseMismatch, VerificationFailed
from .graph_core import EdgeSet, Graph, is_connected


@dataclass(frozen=True)
class Gf2Matrix:
    """A list of edge sets over one shared universe, treated as GF(2) rows."""

    rows: tuple[EdgeSet, ...]
    universe: int

    def __post_init__(self):
        for r in self.rows:
            if r.universe != self.universe:
                raise UniverseMismatch(
                    f"row universe {r.universe} does not match matrix universe {self.universe}"
                )

    @staticmethod
    def from_rows(rows, universe: int | None = None) -> Gf2Matrix:
        rows = tuple(rows)
        if universe is None:
            if not rows:
                raise ValueError("universe required for an empty matrix")
            universe = rows[0].universe
        return Gf2Matrix(rows, universe)


@dataclass(frozen=True)
class SpanCertificate:
    """Indices of generator rows whose GF(2) sum equals the target."""

    coefficients: tuple[int, ...]
    target: EdgeSet


def sym_diff(x: EdgeSet, y: EdgeSet) -> EdgeSet:
    """Symmetric difference of two edge sets over one universe."""
    return x ^ y


def _require_in_graph(g: Graph, x: EdgeSet) -> None:
    if x.universe != g.universe:
        raise UniverseMismatch(
            f"edge set universe {x.universe} does not match graph universe {g.universe}"
        )
    missing = [e for e in x if e not in g.edges]
    if missing:
        raise UniverseMismatch(f"edge ids {missing} are not edges of the graph")


def is_cycle_space_member(g: Graph, x: EdgeSet) -> bool:
    """True iff every vertex has even degree in the subgraph on ``x``."""
    _require_in_graph(g, x)
    deg: dict = {}
    for e in x:
        u, v = g.psi[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return all(d % 2 == 0 for d in deg.values())


def fundamental_basis(g: Graph) -> list[EdgeSet]:
    """Fundamental circuits w.r.t. the lowest-edge-id-first spanning tree.

    One circuit per non-tree edge, in ascending edge-id order.
    """
    if not is_connected(g):
        raise Disconnected("fundamental basis requires a connected graph")
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree: list[int] = []
    non_tree: list[int] = []
    for e in sorted(g.edges):
        u, v = g.psi[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            non_tree.append(e)
        else:
            parent[ru] = rv
            tree.append(e)

    adj: dict = {v: [] for v in g.vertices}
    for e in tree:
        u, v = g.psi[e]
        adj[u].append((e, v))
        adj[v].append((e, u))

    def tree_path(a: int, b: int) -> list[int]:
        if a == b:
            return []
        prev = {a: (None, None)}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if w not in prev:
                    prev[w] = (v, e)
                    if w == b:
                        queue.clear()
                        break
                    queue.append(w)
        path = []
        v = b
        while v != a:
            v, e = prev[v]
            path.append(e)
        return path

    basis = []
    for e in non_tree:
        u, v = g.psi[e]
        basis.append(EdgeSet.from_ids(tree_path(u, v) + [e], g.universe))
    return basis


def gf2_rank(matrix: Gf2Matrix) -> int:
    """Rank of the rows over GF(2), by elimination on ascending edge ids."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in matrix.rows:
        r = row.bits
        while r:
            col = (r & -r).bit_length() - 1
            if col in pivots:
                r ^= pivots[col]
            else:
                pivots[col] = r
                rank += 1
                break
    return rank


def express_in_span(target: EdgeSet, generators: Gf2Matrix) -> SpanCertificate:
    """Write ``target`` as a GF(2) sum of generator rows.

    Deterministic: rows are consumed in order with ascending-edge-id pivots,
    and the first solution found is returned.  Raises NotInSpan when the
    target lies outside the span.
    """
    if target.universe != generators.universe:
        raise UniverseMismatch(
            f"target universe {target.universe} does not match generators {generators.universe}"
        )
    pivots: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(generators.rows):
        r, marker = row.bits, 1 << i
        while r:
            col = (r & -r).bit_length() - 1
            if col in pivots:
                pr, pm = pivots[col]
                r ^= pr
                marker ^= pm
            else:
                pivots[col] = (r, marker)
                break
    t, marker = target.bits, 0
    while t:
        col = (t & -t).bit_length() - 1
        if col not in pivots:
            raise NotInSpan(f"no generator combination covers edge {col}")
        pr, pm = pivots[col]
        t ^= pr
        marker ^= pm
    coefficients = []
    while marker:
        low = marker & -marker
        coefficients.append(low.bit_length() - 1)
        marker ^= low
    replay = 0
    for i in coefficients:
        replay ^= generators.rows[i].bits
    if replay != target.bits:
        raise VerificationFailed("span certificate replay mismatch")
    return SpanCertificate(tuple(coefficients), target)


def cyclomatic_number(g: Graph) -> int:
    """Dimension of the cycle space of a connected graph: |E| - |V| + 1."""
    if not is_connected(g):
        raise Disconnected("cyclomatic number requires a connected graph")
    return len(g.edges) - len(g.vertices) + 1
