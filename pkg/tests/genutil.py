"""Test-support generators and independent brute-force helpers.

Everything here is deliberately separate from the library so that oracle
cross-checks do not share code with the implementations they certify.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from minorclub.graph import (Graph, _iter_bits, _mask_connected, complement,
                             components, contract_edges, disjoint_union,
                             is_connected, join)

# Canonical forms and isomorph-free enumeration ---------------------------


def refined_colors(G: Graph) -> list[int]:
    colors = [G.degree(v) for v in range(G.n)]
    while True:
        combined = [(colors[v], tuple(sorted(colors[w] for w in G.neighbors(v))))
                    for v in range(G.n)]
        ranks = {c: i for i, c in enumerate(sorted(set(combined)))}
        new = [ranks[combined[v]] for v in range(G.n)]
        if new == colors:
            return colors
        colors = new


def canonical_key(G: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: minimum edge bitmask over all vertex
    orderings consistent with the refined color classes."""
    n = G.n
    if n == 0:
        return (0, 0)
    colors = refined_colors(G)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    edges = G.edges()
    best = None
    for perm_parts in product(*(permutations(cell) for cell in ordered_cells)):
        pos = {}
        base = 0
        for part in perm_parts:
            for offset, v in enumerate(part):
                pos[v] = base + offset
            base += len(part)
        mask = 0
        for u, v in edges:
            i, j = pos[u], pos[v]
            if i > j:
                i, j = j, i
            mask |= 1 << (i * n + j)
        if best is None or mask < best:
            best = mask
    return (n, best)


def isomorphic(G: Graph, H: Graph) -> bool:
    return canonical_key(G) == canonical_key(H)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All unlabeled graphs on n vertices (one representative each), built
    by vertex extension with canonical deduplication."""
    if n == 0:
        return (Graph.empty(0),)
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[tuple[int, int], Graph] = {}
    for H in all_graphs(n - 1):
        base_edges = H.edges()
        for nb in range(1 << (n - 1)):
            edges = base_edges + [(w, n - 1) for w in _iter_bits(nb)]
            G = Graph.from_edges(n, edges)
            key = canonical_key(G)
            if key not in seen:
                seen[key] = G
    return tuple(seen[k] for k in sorted(seen))


def connected_graphs(n: int) -> list[Graph]:
    return [G for G in all_graphs(n) if is_connected(G)]


# Random structured families ----------------------------------------------


def random_cograph(leaves: int, rng: random.Random) -> Graph:
    """Graph of a random cotree with the given number of leaves."""

    def build(k: int, kind: str) -> Graph:
        if k == 1:
            return Graph.empty(1)
        parts = []
        remaining = k
        want = rng.randint(2, min(k, 4))
        for i in range(want - 1):
            take = rng.randint(1, remaining - (want - 1 - i))
            parts.append(take)
            remaining -= take
        parts.append(remaining)
        other = "join" if kind == "union" else "union"
        acc = build(parts[0], other)
        for p in parts[1:]:
            child = build(p, other)
            acc = disjoint_union(acc, child) if kind == "union" else join(acc, child)
        return acc

    return build(leaves, rng.choice(["union", "join"]))


def random_bipperm(n: int, rng: random.Random) -> Graph:
    """Monotone interval staircase over one side; always admits a strong
    ordering with the natural orders."""
    n1 = rng.randint(1, n - 1)
    n2 = n - n1
    lo = hi = 1
    edges = []
    for u in range(n1):
        lo = min(rng.randint(lo, n2), n2)
        hi = max(hi, rng.randint(lo, n2))
        edges += [(u, n1 + v - 1) for v in range(lo, hi + 1)]
        if rng.random() < 0.6:
            lo = min(lo + rng.randint(0, 2), n2)
            hi = min(max(hi + rng.randint(0, 2), lo), n2)
    return Graph.from_edges(n, edges)


def random_interval_graph(n: int, rng: random.Random, spread: float = 0.8) -> Graph:
    xs = []
    x = 0.0
    for _ in range(n):
        x += rng.random() * spread
        xs.append((x, x + 0.5 + rng.random()))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if xs[i][0] <= xs[j][1] and xs[j][0] <= xs[i][1]]
    return Graph.from_edges(n, edges)


def random_permutation_graph(n: int, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if perm[i] > perm[j]]
    return Graph.from_edges(n, edges)


def random_caterpillar(n: int, rng: random.Random) -> Graph:
    spine = rng.randint(max(3, n // 2), n - 1) if n > 3 else n - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    for extra in range(spine, n):
        edges.append((rng.randrange(spine), extra))
    return Graph.from_edges(n, edges)


def random_chordal(n: int, rng: random.Random, attach_max: int = 4) -> Graph:
    """Grow by attaching each new vertex to a clique of the current graph,
    so the reverse insertion order is a perfect elimination ordering."""
    adj: list[set[int]] = [set()]
    for v in range(1, n):
        anchor = rng.randrange(v)
        clique = {anchor}
        cands = list(adj[anchor])
        rng.shuffle(cands)
        for w in cands:
            if len(clique) >= attach_max:
                break
            if clique <= adj[w] and rng.random() < 0.7:
                clique.add(w)
        adj.append(set(clique))
        for w in clique:
            adj[w].add(v)
    return Graph.from_edges(n, [(min(u, v), max(u, v))
                                for u in range(n) for v in adj[u] if u < v])


def is_chordal_peo(G: Graph) -> bool:
    """Independent chordality test via simplicial elimination."""
    alive = set(range(G.n))
    for _ in range(G.n):
        pick = None
        for v in sorted(alive):
            nb = [w for w in G.neighbors(v) if w in alive]
            if all(G.has_edge(a, b) for a, b in combinations(nb, 2)):
                pick = v
                break
        if pick is None:
            return False
        alive.discard(pick)
    return True


# Independent brute-force routes -------------------------------------------


def brute_minor_bags(G: Graph) -> int:
    """Maximum number of disjoint connected pairwise-adjacent bags where
    bags need not cover the graph (partial route, vs. the oracle's full
    quotient route)."""
    subsets = []
    for mask in range(1, 1 << G.n):
        if _mask_connected(G, mask):
            nbr = 0
            for v in _iter_bits(mask):
                nbr |= G.rows[v]
            subsets.append((mask, nbr))
    subsets.sort(key=lambda t: (t[0] & -t[0], t[0]))
    best = 0

    def dfs(start: int, used: int, chosen: list[tuple[int, int]]):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(subsets)):
            mask, nbr = subsets[i]
            if mask & used:
                continue
            if any(nbr & cm == 0 for cm, _ in chosen):
                continue
            chosen.append(subsets[i])
            dfs(i + 1, used | mask, chosen)
            chosen.pop()

    dfs(0, 0, [])
    return best


def complete_after_contractions(G: Graph, k: int) -> bool:
    """Is G k-contractible to a complete graph?  Branches on the first
    non-adjacent pair: one of its vertices must be merged along an incident
    edge.  Equivalent to searching all edge subsets of size <= k."""
    nonedge = next(((a, b) for a in range(G.n) for b in range(a + 1, G.n)
                    if not G.has_edge(a, b)), None)
    if nonedge is None:
        return True
    if k == 0:
        return False
    a, b = nonedge
    for v in (a, b):
        for w in sorted(G.neighbors(v)):
            e = (min(v, w), max(v, w))
            if complete_after_contractions(contract_edges(G, [e]), k - 1):
                return True
    return False


def complete_after_contractions_subsets(G: Graph, k: int) -> bool:
    """Plain subset enumeration; for cross-validating the branching search."""
    edges = G.edges()
    full = (1 << G.n) - 1
    for size in range(0, k + 1):
        for S in combinations(edges, size):
            H = contract_edges(G, S)
            if all(H.rows[v] == ((1 << H.n) - 1) ^ (1 << v) for v in range(H.n)):
                return True
    return False


def all_matchings(G: Graph):
    edges = G.edges()

    def rec(i, used, cur):
        yield tuple(cur)
        for j in range(i, len(edges)):
            u, v = edges[j]
            if used & (1 << u) or used & (1 << v):
                continue
            cur.append(edges[j])
            yield from rec(j + 1, used | 1 << u | 1 << v, cur)
            cur.pop()

    yield from rec(0, 0, [])


def maximum_clique_matchings(G: Graph):
    """All maximum clique-matchings, by exhaustive matching enumeration."""
    from minorclub.bipperm_dp import is_clique_matching

    best = 0
    out = []
    for M in all_matchings(G):
        if not is_clique_matching(G, M):
            continue
        if len(M) > best:
            best = len(M)
            out = [M]
        elif len(M) == best:
            out.append(M)
    return best, out


def ordering_exists_exhaustive(G: Graph) -> bool:
    """Does some bipartition-plus-order satisfy both ordering properties?
    Tries every order of the smaller side; independent of the constructor."""
    from minorclub.graph import is_bipartite
    from minorclub.recognition import StrongOrdering, verify_ordering

    bip = is_bipartite(G)
    if bip is None:
        return False
    for v1, v2 in ((bip[0], bip[1]), (bip[1], bip[0])):
        if len(v2) > 8:
            continue
        for perm in permutations(v2):
            if verify_ordering(G, StrongOrdering(tuple(v1), tuple(perm))):
                return True
    return False


def induced_p4_exists(G: Graph) -> bool:
    for quad in combinations(range(G.n), 4):
        H = [[G.has_edge(a, b) for b in quad] for a in quad]
        degs = sorted(sum(row) for row in H)
        if degs == [1, 1, 2, 2] and is_connected(Graph.from_edges(
                4, [(i, j) for i in range(4) for j in range(i + 1, 4)
                    if H[i][j]])):
            return True
    return False
