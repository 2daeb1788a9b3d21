from __future__ import annotations

import random

import pytest

from minorclub.errors import DomainError
from minorclub.graph import (Graph, complement, disjoint_union, diameter,
                             induced_subgraph, is_connected, join)
from minorclub.recognition import (Certificate, Cotree, StrongOrdering,
                                   diameter_dominating_pair, find_induced_p4,
                                   is_at_free, is_chordal_bipartite,
                                   is_cobipartite, is_dominating_pair,
                                   is_split, recognize_cograph,
                                   restrict_ordering, strong_ordering,
                                   verify_ordering)

from genutil import (all_graphs, connected_graphs, induced_p4_exists,
                     ordering_exists_exhaustive, random_bipperm,
                     random_cograph)


# Cotrees ------------------------------------------------------------------

def test_single_vertex_is_a_leaf():
    tree = recognize_cograph(Graph.empty(1))
    assert isinstance(tree, Cotree) and tree.kind == "leaf"


def test_p4_yields_certificate_in_path_order():
    cert = recognize_cograph(Graph.path(4))
    assert cert == (0, 1, 2, 3)


def test_c4_cotree_shape():
    tree = recognize_cograph(Graph.cycle(4))
    assert isinstance(tree, Cotree)
    assert tree.kind == "join"
    assert sorted(c.kind for c in tree.children) == ["union", "union"]
    assert tree.to_graph(4) == Graph.cycle(4)
    assert tree.to_text() == "(J (U 0 2) (U 1 3))"


def _check_canonical(tree: Cotree):
    if tree.kind == "leaf":
        return
    assert len(tree.children) >= 2
    for child in tree.children:
        assert child.kind != tree.kind
        _check_canonical(child)


def test_cotree_reproduces_edges_and_is_canonical():
    rng = random.Random(11)
    for _ in range(60):
        G = random_cograph(rng.randint(1, 9), rng)
        tree = recognize_cograph(G)
        assert isinstance(tree, Cotree)
        assert tree.to_graph(G.n) == G
        _check_canonical(tree)


def test_cograph_recognition_matches_p4_search():
    for n in range(1, 7):
        for G in all_graphs(n):
            got = recognize_cograph(G)
            if isinstance(got, Cotree):
                assert not induced_p4_exists(G)
                assert got.to_graph(G.n) == G
            else:
                a, b, c, d = got
                assert induced_p4_exists(G)
                assert G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(c, d)
                assert not G.has_edge(a, c) and not G.has_edge(a, d)
                assert not G.has_edge(b, d)


def test_find_induced_p4_none_on_cograph():
    assert find_induced_p4(Graph.complete(5)) is None


# Strong orderings ---------------------------------------------------------

def test_star_ordering():
    got = strong_ordering(Graph.complete_bipartite(1, 2))
    assert got is not None and verify_ordering(Graph.complete_bipartite(1, 2), got)


def test_path_ordering_verifies():
    G = Graph.path(5)
    got = strong_ordering(G)
    assert got is not None and verify_ordering(G, got)


def test_c6_has_no_strong_ordering():
    assert strong_ordering(Graph.cycle(6)) is None
    assert not ordering_exists_exhaustive(Graph.cycle(6))


def test_verify_ordering_examples():
    G = Graph.complete_bipartite(2, 2)
    assert verify_ordering(G, StrongOrdering((0, 1), (2, 3)))
    assert verify_ordering(G, StrongOrdering((0, 1), (3, 2)))
    # P4: any order of a two-element side works
    P4 = Graph.path(4)
    assert verify_ordering(P4, StrongOrdering((0, 2), (1, 3)))
    assert verify_ordering(P4, StrongOrdering((1, 3), (2, 0)))
    # P5 with the middle ordered-side vertex moved out of path position
    # leaves a non-contiguous neighborhood
    P5 = Graph.path(5)
    assert verify_ordering(P5, StrongOrdering((1, 3), (0, 2, 4)))
    assert not verify_ordering(P5, StrongOrdering((1, 3), (0, 4, 2)))
    # edgeless side order is vacuously fine
    E = Graph.empty(3)
    assert verify_ordering(E, StrongOrdering((), (0, 1, 2)))


def test_verify_ordering_rejects_bad_bipartition():
    G = Graph.path(3)
    with pytest.raises(DomainError):
        verify_ordering(G, StrongOrdering((0,), (1,)))  # does not cover V
    with pytest.raises(DomainError):
        verify_ordering(G, StrongOrdering((0, 1), (2,)))  # edge inside side1


def test_strong_ordering_matches_exhaustive_on_small_graphs():
    for n in range(1, 7):
        for G in all_graphs(n):
            got = strong_ordering(G)
            want = ordering_exists_exhaustive(G)
            assert (got is not None) == want, G.edges()
            if got is not None:
                assert verify_ordering(G, got)


def test_isolated_vertices_go_last():
    G = disjoint_union(Graph.path(3), Graph.empty(2))
    got = strong_ordering(G)
    assert got is not None
    assert set(got.order2[-2:]) == {3, 4}


def test_restrict_ordering_on_random_subsets():
    rng = random.Random(5)
    for _ in range(40):
        G = random_bipperm(rng.randint(2, 10), rng)
        full = strong_ordering(G)
        assert full is not None
        keep = sorted(rng.sample(range(G.n), rng.randint(1, G.n)))
        sub = induced_subgraph(G, keep)
        assert verify_ordering(sub, restrict_ordering(full, keep))


# AT-freeness --------------------------------------------------------------

def test_small_paths_and_cycles_are_at_free():
    for G in (Graph.path(6), Graph.cycle(4), Graph.cycle(5), Graph.complete(5)):
        assert is_at_free(G) is True


def test_c6_asteroidal_triple():
    assert is_at_free(Graph.cycle(6)) == (0, 2, 4)


def test_subdivided_claw_has_at():
    # a claw with every leg subdivided once: tips form an asteroidal triple
    G = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    triple = is_at_free(G)
    assert triple == (2, 4, 6)


def test_returned_triple_is_asteroidal_by_definition():
    G = Graph.cycle(6)
    a, b, c = is_at_free(G)
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        assert not G.has_edge(x, y)
        # a path between x and y avoiding N[z] exists
        banned = set(G.neighbors(z)) | {z}
        frontier = {x}
        seen = {x}
        while frontier:
            nxt = set()
            for w in frontier:
                for t in G.neighbors(w):
                    if t not in seen and t not in banned:
                        nxt.add(t)
                        seen.add(t)
            frontier = nxt
        assert y in seen


# Dominating pairs ---------------------------------------------------------

def test_dominating_pair_examples():
    assert diameter_dominating_pair(Graph.path(6)) == (0, 5)
    u, v = diameter_dominating_pair(Graph.cycle(4))
    assert diameter(Graph.cycle(4)) == 2 and not Graph.cycle(4).has_edge(u, v)
    assert diameter_dominating_pair(Graph.complete(4)) == (0, 1)


def test_dominating_pair_definition_holds():
    for G in (Graph.path(7), Graph.complete(3), Graph.cycle(5)):
        u, v = diameter_dominating_pair(G)
        assert is_dominating_pair(G, u, v)


def test_dominating_pair_needs_connected_graph():
    with pytest.raises(DomainError):
        diameter_dominating_pair(Graph.empty(3))


def test_connected_at_free_graphs_have_diameter_dominating_pair():
    for G in connected_graphs(6):
        if is_at_free(G) is True:
            u, v = diameter_dominating_pair(G)
            assert is_dominating_pair(G, u, v)


# Simple predicates --------------------------------------------------------

def test_split_recognition_against_brute_force():
    from itertools import combinations

    def brute_split(G):
        verts = range(G.n)
        for r in range(G.n + 1):
            for clique in combinations(verts, r):
                cs = set(clique)
                if all(G.has_edge(a, b) for a, b in combinations(clique, 2)) and \
                   all(not G.has_edge(a, b)
                       for a, b in combinations([v for v in verts if v not in cs], 2)):
                    return True
        return False

    for n in range(1, 6):
        for G in all_graphs(n):
            assert is_split(G) == brute_split(G), G.edges()


def test_class_examples():
    assert is_split(Graph.complete(6))
    assert is_cobipartite(Graph.complete(6))
    assert not is_split(Graph.cycle(4))
    assert is_chordal_bipartite(Graph.cycle(4))
    assert not is_chordal_bipartite(Graph.cycle(6))
    assert not is_chordal_bipartite(Graph.complete(3))
    assert is_cobipartite(Graph.cycle(4))  # two adjacent cliques of size 2
    assert not is_cobipartite(Graph.cycle(6))
    assert not is_cobipartite(join(Graph.empty(2), Graph.empty(3)))


def test_certificate_text():
    tree = recognize_cograph(Graph.cycle(4))
    assert Certificate("cotree", tree).to_text() == "(J (U 0 2) (U 1 3))"
    assert Certificate("induced-P4", (0, 1, 2, 3)).to_text() == "0 1 2 3"
    o = StrongOrdering((0,), (1, 2))
    assert Certificate("ordering", o).to_text() == "side1 0 | order2 1 2"
    assert Certificate("none").to_text() == "none"
