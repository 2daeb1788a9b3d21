from __future__ import annotations

import random

import pytest

from minorclub.bipperm_dp import (BippermHadwiger, hadwiger_bipperm,
                                  is_clique_matching, max_clique_matching)
from minorclub.errors import DomainError
from minorclub.graph import Graph, disjoint_union, induced_subgraph
from minorclub.oracle import clique_matching_oracle, hadwiger_oracle
from minorclub.recognition import strong_ordering

from genutil import (connected_graphs, maximum_clique_matchings,
                     random_bipperm)


def test_examples():
    size, M = max_clique_matching(Graph.path(4))
    assert size == 2 and is_clique_matching(Graph.path(4), M.edges)
    assert max_clique_matching(Graph.complete_bipartite(1, 3))[0] == 1
    assert max_clique_matching(Graph.complete_bipartite(3, 3))[0] == 3
    assert max_clique_matching(Graph.empty(4))[0] == 0


def test_is_clique_matching():
    G = Graph.path(5)
    assert is_clique_matching(G, [(0, 1), (2, 3)])
    assert not is_clique_matching(G, [(0, 1), (3, 4)])  # no cross adjacency
    assert not is_clique_matching(G, [(0, 1), (1, 2)])  # shares a vertex
    assert not is_clique_matching(G, [(0, 2)])          # not an edge


def test_rejects_non_bipartite_permutation_inputs():
    with pytest.raises(DomainError):
        max_clique_matching(Graph.cycle(6))
    with pytest.raises(DomainError):
        hadwiger_bipperm(Graph.cycle(5))


def test_rejects_invalid_supplied_ordering():
    from minorclub.recognition import StrongOrdering

    P5 = Graph.path(5)
    with pytest.raises(DomainError):
        max_clique_matching(P5, StrongOrdering((1, 3), (0, 4, 2)))


def test_hadwiger_examples():
    assert hadwiger_bipperm(Graph.path(6)) == 2
    assert hadwiger_bipperm(Graph.complete_bipartite(3, 3)) == 4
    det = hadwiger_bipperm(Graph.cycle(4), with_details=True)
    assert det.h == 3 and det.case == 2
    assert hadwiger_bipperm(Graph.empty(3)) == 1


def test_exhaustive_small_graphs_match_oracle():
    for n in range(1, 7):
        for G in connected_graphs(n):
            if strong_ordering(G) is None:
                continue
            size, M = max_clique_matching(G)
            assert is_clique_matching(G, M.edges)
            assert size == clique_matching_oracle(G), G.edges()
            assert hadwiger_bipperm(G) == hadwiger_oracle(G), G.edges()


def test_random_instances_match_oracle():
    rng = random.Random(20)
    for _ in range(60):
        G = random_bipperm(rng.randint(2, 10), rng)
        if rng.random() < 0.3:
            G = disjoint_union(G, random_bipperm(rng.randint(2, 4), rng))
        if G.n > 12:
            continue
        size, M = max_clique_matching(G)
        assert is_clique_matching(G, M.edges) and len(M.edges) == size
        assert size == clique_matching_oracle(G)
        assert hadwiger_bipperm(G) == hadwiger_oracle(G)


def test_threads_do_not_change_results():
    rng = random.Random(21)
    for _ in range(10):
        G = random_bipperm(rng.randint(3, 9), rng)
        assert max_clique_matching(G)[0] == max_clique_matching(G, threads=3)[0]
        assert hadwiger_bipperm(G) == hadwiger_bipperm(G, threads=2)


def test_forced_pairs_extend_to_some_maximum_matching():
    # anchored preprocessing claim: with the anchor forced, the greedy pairs
    # (cover vertices matched to the rightmost ranks above the anchor's
    # reach) appear in some maximum clique-matching
    rng = random.Random(22)
    checked = 0
    for _ in range(80):
        G = random_bipperm(rng.randint(3, 8), rng)
        ordering = strong_ordering(G)
        best, all_max = maximum_clique_matchings(G)
        if best == 0:
            continue
        rank = {v: i + 1 for i, v in enumerate(ordering.order2)}
        side1 = set(ordering.side1)
        for M in all_max:
            ranks = sorted(rank[u] if u not in side1 else rank[v] for u, v in M)
            vmin = ranks[0]
            anchor = next((e for e in M
                           if rank[e[0] if e[0] not in side1 else e[1]] == vmin))
            u = anchor[0] if anchor[0] in side1 else anchor[1]
            v2 = anchor[1] if anchor[0] in side1 else anchor[0]
            forced = _forced_pairs(G, ordering, u, rank[v2])
            if not forced:
                continue
            target = {(w, j) for w, j in forced}
            ok = any(
                target <= {(a if a in side1 else b,
                            rank[b if a in side1 else a])
                           for a, b in Mx}
                for Mx in all_max
                if anchor in Mx or (u, v2) in Mx or (v2, u) in Mx
            )
            assert ok, (G.edges(), anchor, forced)
            checked += 1
    assert checked > 5


def _forced_pairs(G, ordering, u, v_rank):
    """Reimplementation of the forced-pair greedy, independent of the DP."""
    rank = {v: i + 1 for i, v in enumerate(ordering.order2)}
    side1 = list(ordering.side1)
    iv = {}
    for w in side1:
        rs = sorted(rank[x] for x in G.neighbors(w))
        if rs:
            iv[w] = (rs[0], rs[-1])
    if u not in iv:
        return []
    r = iv[u][1]
    cands = sorted((w for w in iv if w != u
                    and max(iv[w][0], v_rank) <= v_rank and iv[w][1] >= r),
                   key=lambda w: (-iv[w][1], w))
    used = set()
    out = []
    for w in cands:
        pick = next((j for j in range(iv[w][1], r, -1) if j not in used), None)
        if pick is None:
            break
        used.add(pick)
        out.append((w, pick))
    return out


def test_induced_subgraphs_inherit_valid_orderings():
    from minorclub.recognition import restrict_ordering, verify_ordering

    rng = random.Random(23)
    for _ in range(30):
        G = random_bipperm(rng.randint(3, 10), rng)
        full = strong_ordering(G)
        keep = sorted(rng.sample(range(G.n), rng.randint(1, G.n)))
        sub = induced_subgraph(G, keep)
        assert verify_ordering(sub, restrict_ordering(full, keep))
