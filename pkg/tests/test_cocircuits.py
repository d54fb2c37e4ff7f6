import pytest

from nscycles import (
    CounterexampleReport,
    EdgeSet,
    bonds,
    build_graph,
    circuits_meeting_once,
    delete_edges,
    enumerate_circuits,
    gen_corpus,
    is_cut_candidate,
    minimal_cut_candidates,
    non_separating_circuits,
    verify_cocircuit_identity,
)
from nscycles.errors import Disconnected, EmptyX, TooLarge

import oracles


def test_bonds_triangle(triangle):
    found = bonds(triangle)
    assert [b.edges.ids() for b in found] == [(0, 1), (0, 2), (1, 2)]
    assert all(len(b.edges) == 2 for b in found)


def test_bonds_k4(k4):
    found = bonds(k4)
    assert len(found) == 7
    sizes = sorted(len(b.edges) for b in found)
    assert sizes == [3, 3, 3, 3, 4, 4, 4]
    for b in found:
        assert oracles.is_minimal_edge_cut(k4, b.edges.ids())


def test_bonds_path():
    path = build_graph(3, [(0, 1), (1, 2)])
    found = bonds(path)
    assert [b.edges.ids() for b in found] == [(0,), (1,)]


def test_bonds_are_minimal_cuts(prism, w4):
    for g in (prism, w4):
        for b in bonds(g):
            assert oracles.is_minimal_edge_cut(g, b.edges.ids())
        # and conversely: every minimal cut shows up
        from itertools import combinations
        ids = sorted(g.edges)
        cuts = {
            frozenset(combo)
            for size in range(1, len(ids) + 1)
            for combo in combinations(ids, size)
            if oracles.is_minimal_edge_cut(g, combo)
        }
        assert {frozenset(b.edges.ids()) for b in bonds(g)} == cuts


def test_bond_size_guard():
    big = build_graph(17, [(i, i + 1) for i in range(16)])
    with pytest.raises(TooLarge):
        bonds(big)


def test_cut_candidate_predicate(k4):
    nc = non_separating_circuits(k4)
    assert not is_cut_candidate(EdgeSet.empty(6), nc)
    for b in bonds(k4):
        assert is_cut_candidate(b.edges, nc)
    assert not is_cut_candidate(k4.edge_set([0]), nc)


def test_minimal_cut_candidates_equal_bonds(k4, prism):
    for g in (k4, prism):
        nc = non_separating_circuits(g)
        candidates = minimal_cut_candidates(g, nc)
        assert sorted(x.ids() for x in candidates) == \
            sorted(b.edges.ids() for b in bonds(g))
        for x in candidates:
            assert is_cut_candidate(x, nc)
        # minimality: no member contains another
        for x in candidates:
            for y in candidates:
                if x != y:
                    assert not x.issubset(y)


def test_minimal_cut_candidates_size_cap(k4):
    nc = non_separating_circuits(k4)
    small = minimal_cut_candidates(k4, nc, size_cap=3)
    assert sorted(x.ids() for x in small) == \
        sorted(b.edges.ids() for b in bonds(k4) if len(b.edges) <= 3)


def test_subset_size_guard():
    g = gen_corpus("random3c-12", 3)
    if len(g.edges) > 20:
        with pytest.raises(TooLarge):
            minimal_cut_candidates(g, non_separating_circuits(g))


def test_circuits_meeting_once_k4(k4):
    nc = non_separating_circuits(k4)
    a, b = circuits_meeting_once(k4, k4.edge_set([0]), nc)
    assert {a.edges.ids(), b.edges.ids()} == {(0, 1, 3), (0, 2, 4)}
    a, b = circuits_meeting_once(k4, k4.edge_set([0, 1]), nc)
    assert a != b
    assert len(a.edges & k4.edge_set([0, 1])) == 1
    assert len(b.edges & k4.edge_set([0, 1])) == 1


def test_circuits_meeting_once_preconditions(k4):
    nc = non_separating_circuits(k4)
    with pytest.raises(EmptyX):
        circuits_meeting_once(k4, EdgeSet.empty(6), nc)
    star = k4.edge_set([0, 1, 2])  # all edges at vertex 0
    from nscycles import is_connected
    assert not is_connected(delete_edges(k4, star))
    with pytest.raises(Disconnected):
        circuits_meeting_once(k4, star, nc)


def test_cocircuit_identity(k4, w4):
    assert verify_cocircuit_identity(k4)
    assert verify_cocircuit_identity(gen_corpus("k33"))
    assert verify_cocircuit_identity(w4)


def test_orthogonality(k4, prism):
    for g in (k4, prism):
        for b in bonds(g):
            for c in enumerate_circuits(g):
                assert len(b.edges & c.edges) % 2 == 0
