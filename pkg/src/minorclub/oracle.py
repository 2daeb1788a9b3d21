"""Brute-force reference solvers for small graphs.

Every polynomial-time algorithm in this library is certified against these
oracles on small instances.  All enumeration orders are deterministic so
failures reproduce exactly.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterator

from .errors import CapacityError, DomainError
from .graph import (Graph, _iter_bits, _mask_connected, _quotient, diameter,
                    components, induced_subgraph, max_clique)

PARTITION_CAP = 12
MATCHING_CAP = 14
SUBSET_BUDGET = 5_000_000


def connected_partitions(G: Graph) -> Iterator[list[tuple[int, ...]]]:
    """All partitions of V(G) into blocks inducing connected subgraphs.

    Vertices are assigned in label order (restricted-growth style); a branch
    is abandoned as soon as some block can no longer be reconnected through
    unassigned vertices.
    """
    n = G.n
    if n == 0:
        yield []
        return

    def reconnectable(mask: int, future: int) -> bool:
        if _mask_connected(G, mask):
            return True
        allowed = mask | future
        start = mask & -mask
        comp = start
        frontier = comp
        while frontier:
            reach = 0
            for u in _iter_bits(frontier):
                reach |= G.rows[u]
            frontier = reach & allowed & ~comp
            comp |= frontier
        return mask & ~comp == 0

    blocks: list[int] = []

    def assign(v: int):
        if v == n:
            if all(_mask_connected(G, b) for b in blocks):
                yield [tuple(_iter_bits(b)) for b in blocks]
            return
        future = ((1 << n) - 1) & ~((1 << (v + 1)) - 1)
        for i in range(len(blocks)):
            blocks[i] |= 1 << v
            if all(reconnectable(b, future) for b in blocks):
                yield from assign(v + 1)
            blocks[i] &= ~(1 << v)
        blocks.append(1 << v)
        yield from assign(v + 1)
        blocks.pop()

    yield from assign(0)


def _edge_bound(m: int) -> int:
    """Largest h with h(h-1)/2 <= m; a complete minor needs that many edges."""
    return (1 + math.isqrt(1 + 8 * m)) // 2


def hadwiger_oracle(G: Graph, cap: int = PARTITION_CAP,
                    with_witness: bool = False):
    """Largest p such that some component has p disjoint connected bags that
    are pairwise adjacent.  Searches all quotients reachable by contractions
    (equivalently, all full connected partitions per component) and takes the
    best clique over them.
    """
    if G.n == 0:
        return (0, None) if with_witness else 0
    best = 0
    best_bags = None
    for comp in components(G):
        if len(comp) > cap:
            raise CapacityError(
                f"component of size {len(comp)} exceeds oracle cap {cap}")
        value, bags = _component_hadwiger(induced_subgraph(G, comp))
        if value > best:
            best = value
            best_bags = tuple(tuple(comp[v] for v in bag) for bag in bags)
    return (best, best_bags) if with_witness else best


def _component_hadwiger(H: Graph) -> tuple[int, tuple[tuple[int, ...], ...]]:
    best = 0
    best_bags: tuple = ()
    seen: set[tuple[int, ...]] = set()
    stack = [(H, tuple((v,) for v in range(H.n)))]
    while stack:
        g, bags = stack.pop()
        if g.n <= best or g.rows in seen:
            continue
        seen.add(g.rows)
        w, wverts = max_clique(g)
        if w > best:
            best = w
            best_bags = tuple(bags[v] for v in wverts)
        if _edge_bound(g.m) <= best or g.n - 1 <= best:
            continue
        for e in g.edges():
            q, vmap = _quotient(g, [e])
            if q.n > best and q.rows not in seen:
                merged: list[list[int]] = [[] for _ in range(q.n)]
                for old, new in enumerate(vmap):
                    merged[new].extend(bags[old])
                stack.append((q, tuple(tuple(sorted(b)) for b in merged)))
    return best, best_bags


def max_s_club_minor_oracle(G: Graph, s: int, cap: int = PARTITION_CAP) -> int:
    """Maximum block count over full connected partitions whose quotient has
    diameter at most s."""
    if G.n == 0:
        return 0
    if len(components(G)) != 1:
        raise DomainError("disconnected graphs cannot be contracted to finite diameter")
    if G.n > cap:
        raise CapacityError(f"graph of size {G.n} exceeds oracle cap {cap}")
    best = 0
    for blocks in connected_partitions(G):
        if len(blocks) <= best:
            continue
        quotient, _ = _quotient(G, _spanning_edges(G, blocks))
        if diameter(quotient) <= s:
            best = len(blocks)
    return best


def _spanning_edges(G: Graph, blocks: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """A spanning forest of each block, as contractible edges."""
    out = []
    for block in blocks:
        mask = 0
        for v in block:
            mask |= 1 << v
        reached = 1 << block[0]
        while reached != mask:
            grown = False
            for u in _iter_bits(reached):
                cand = G.rows[u] & mask & ~reached
                if cand:
                    v = (cand & -cand).bit_length() - 1
                    out.append((min(u, v), max(u, v)))
                    reached |= 1 << v
                    grown = True
                    break
            assert grown, "block is not connected"
    return out


def min_club_contraction_oracle(G: Graph, s: int, k_max: int,
                                budget: int = SUBSET_BUDGET):
    """Smallest k <= k_max with some k-edge set S satisfying
    diam(G/S) <= s, by increasing-size subset enumeration; None if no such
    set exists within the bound."""
    if len(components(G)) != 1 or G.n == 0:
        raise DomainError("graph must be connected")
    if diameter(G) <= s:
        return 0
    edges = G.edges()
    total = 0
    for k in range(1, min(k_max, len(edges)) + 1):
        total += math.comb(len(edges), k)
        if total > budget:
            raise CapacityError(
                f"subset enumeration up to size {k} needs {total} checks "
                f"(budget {budget})")
        for S in combinations(edges, k):
            if diameter(_quotient(G, S)[0]) <= s:
                return k
    return None


def clique_matching_oracle(G: Graph, cap: int = MATCHING_CAP) -> int:
    """Maximum size of a matching whose edges pairwise have adjacent
    end-vertices, by branch and bound over lexicographic edge choices."""
    if G.n > cap:
        raise CapacityError(f"graph of size {G.n} exceeds matching cap {cap}")
    edges = G.edges()
    k = len(edges)
    compat = [[False] * k for _ in range(k)]
    for i in range(k):
        a, b = edges[i]
        for j in range(i + 1, k):
            c, d = edges[j]
            if len({a, b, c, d}) == 4 and (
                G.has_edge(a, c) or G.has_edge(a, d)
                or G.has_edge(b, c) or G.has_edge(b, d)
            ):
                compat[i][j] = compat[j][i] = True
    best = 0

    def dfs(count: int, cands: list[int]):
        nonlocal best
        best = max(best, count)
        if count + len(cands) <= best:
            return
        for pos, i in enumerate(cands):
            dfs(count + 1, [j for j in cands[pos + 1:] if compat[i][j]])

    dfs(0, list(range(k)))
    return best


def enumerate_nice_structures(G: Graph) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All nonempty families of pairwise-adjacent disjoint bags where every
    bag is a single vertex or an edge, in deterministic order."""
    cands: list[tuple[tuple[int, ...], int, int]] = []
    for v in range(G.n):
        cands.append(((v,), 1 << v, G.rows[v]))
    for u, v in G.edges():
        cands.append(((u, v), (1 << u) | (1 << v), G.rows[u] | G.rows[v]))

    chosen: list[tuple[tuple[int, ...], int, int]] = []

    def dfs(start: int, used: int):
        for i in range(start, len(cands)):
            bag, mask, nbr = cands[i]
            if mask & used:
                continue
            if any(nbr & cmask == 0 for _, cmask, _ in chosen):
                continue
            chosen.append(cands[i])
            yield tuple(b for b, _, _ in chosen)
            yield from dfs(i + 1, used | mask)
            chosen.pop()

    yield from dfs(0, 0)


def nice_structure_oracle(G: Graph, cap: int = PARTITION_CAP) -> tuple[int, tuple[int, ...]]:
    """Best pairwise-adjacent family of singleton and edge bags.

    Returns (max bag count, table) where table[r] is the maximum bag count
    over families with exactly r two-vertex bags (0 when none exists).
    """
    if G.n > cap:
        raise CapacityError(f"graph of size {G.n} exceeds oracle cap {cap}")
    table = [0] * (G.n + 1)
    for bags in enumerate_nice_structures(G):
        r = sum(1 for b in bags if len(b) == 2)
        table[r] = max(table[r], len(bags))
    return max(table, default=0), tuple(table)
