"""Property-based checks of the structural invariants."""

from hypothesis import given, settings, strategies as st

from nscycles import (
    EdgeSet,
    Gf2Matrix,
    blocks,
    bonds,
    build_graph,
    contract_edges,
    cyclomatic_number,
    delete_edges,
    enumerate_circuits,
    even_subgraph_to_circuits,
    express_in_span,
    fundamental_basis,
    gf2_rank,
    is_connected,
    is_cycle_space_member,
    sym_diff,
    threads,
)
from nscycles.errors import AllDegreesTwo, NotInSpan


@st.composite
def connected_graphs(draw, min_vertices=2, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    tree = []
    for v in range(1, n):
        tree.append((draw(st.integers(0, v - 1)), v))
    tree_pairs = {(min(u, v), max(u, v)) for u, v in tree}
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n)
        if (u, v) not in tree_pairs
    ]
    extras = draw(
        st.sets(st.sampled_from(candidates)) if candidates else st.just(set())
    )
    pairs = sorted(tree_pairs | extras)
    return build_graph(n, pairs)


@st.composite
def graph_with_edge_set(draw):
    g = draw(connected_graphs())
    ids = [e for e in sorted(g.edges) if draw(st.booleans())]
    return g, g.edge_set(ids)


@given(graph_with_edge_set(), graph_with_edge_set())
def test_sym_diff_group_laws(gx, gy):
    g, x = gx
    _, y0 = gy
    y = EdgeSet(y0.bits & ((1 << x.universe) - 1), x.universe)
    assert sym_diff(x, x) == EdgeSet.empty(x.universe)
    assert sym_diff(x, EdgeSet.empty(x.universe)) == x
    assert sym_diff(x, y) == sym_diff(y, x)


@given(connected_graphs(), st.data())
def test_cycle_space_closed_under_sym_diff(g, data):
    basis = fundamental_basis(g)
    pick = lambda: [row for row in basis if data.draw(st.booleans())]
    x = EdgeSet.empty(g.universe)
    for row in pick():
        x = x ^ row
    y = EdgeSet.empty(g.universe)
    for row in pick():
        y = y ^ row
    assert is_cycle_space_member(g, x)
    assert is_cycle_space_member(g, y)
    assert is_cycle_space_member(g, sym_diff(x, y))


@given(connected_graphs())
def test_basis_rank_is_cyclomatic(g):
    basis = fundamental_basis(g)
    assert len(basis) == cyclomatic_number(g)
    assert gf2_rank(Gf2Matrix.from_rows(basis, g.universe)) == len(basis)
    assert all(is_cycle_space_member(g, row) for row in basis)


@given(graph_with_edge_set())
def test_express_agrees_with_rank_growth(gx):
    g, x = gx
    basis = fundamental_basis(g)
    generators = Gf2Matrix.from_rows(basis[::2], g.universe)
    base_rank = gf2_rank(generators)
    grown_rank = gf2_rank(Gf2Matrix.from_rows(list(generators.rows) + [x], g.universe))
    try:
        cert = express_in_span(x, generators)
        replay = EdgeSet.empty(g.universe)
        for i in cert.coefficients:
            replay = replay ^ generators.rows[i]
        assert replay == x
        assert grown_rank == base_rank
    except NotInSpan:
        assert grown_rank == base_rank + 1


@given(graph_with_edge_set())
def test_minor_edge_id_stability(gx):
    g, z = gx
    deleted = delete_edges(g, z)
    assert deleted.edges == g.edges - set(z.ids())
    contracted, vertex_map = contract_edges(g, z)
    assert contracted.edges == g.edges - set(z.ids())
    assert set(vertex_map) == set(g.vertices)
    for e in contracted.edges:
        u, v = g.psi[e]
        assert contracted.psi[e] == tuple(sorted((vertex_map[u], vertex_map[v])))


@given(connected_graphs(), st.data())
def test_contract_delete_commute_on_disjoint_sets(g, data):
    ids = sorted(g.edges)
    a_ids = [e for e in ids if data.draw(st.booleans())]
    b_ids = [e for e in ids if e not in a_ids and data.draw(st.booleans())]
    a, b = g.edge_set(a_ids), g.edge_set(b_ids)
    one = contract_edges(delete_edges(g, a), b)[0]
    other = delete_edges(contract_edges(g, b)[0], a)
    assert one == other


@given(connected_graphs())
def test_blocks_partition(g):
    decomposition = blocks(g)
    union = 0
    for block in decomposition.blocks:
        assert union & block.bits == 0
        union |= block.bits
    assert union == g.full_edge_set().bits
    if g.edges:
        assert decomposition.block_count >= 1


@given(connected_graphs(min_vertices=3))
def test_threads_partition_when_defined(g):
    try:
        ts = threads(g)
    except AllDegreesTwo:
        return
    seen: list[int] = []
    for t in ts:
        seen.extend(t.edges)
    assert sorted(seen) == sorted(g.edges)
    for t in ts:
        assert all(g.degree(v) == 2 for v in t.inner_vertices())
        assert all(g.degree(v) != 2 for v in t.endpoints)


@given(connected_graphs(), st.data())
def test_even_subgraph_peeling_replays(g, data):
    basis = fundamental_basis(g)
    x = EdgeSet.empty(g.universe)
    for row in basis:
        if data.draw(st.booleans()):
            x = x ^ row
    peeled = even_subgraph_to_circuits(g, x)
    total = EdgeSet.empty(g.universe)
    for c in peeled:
        assert total.isdisjoint(c.edges)
        total = total ^ c.edges
    assert total == x


@settings(max_examples=30)
@given(connected_graphs(max_vertices=6))
def test_bond_circuit_orthogonality(g):
    if len(g.edges) > 10:
        return
    for b in bonds(g):
        for c in enumerate_circuits(g):
            assert len(b.edges & c.edges) % 2 == 0
