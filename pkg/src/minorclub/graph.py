"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency rows.

Every algorithm in this library works on small dense graphs, so adjacency is
stored as one Python int per vertex (bit v of ``rows[u]`` set iff uv is an
edge).  Graphs are immutable; all operations return fresh graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DomainError

Edge = tuple[int, int]

DEFAULT_CHORDALITY_CAP = 16


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Invariants: no loops, no parallel edges, symmetric adjacency, vertex
    labels are exactly 0..n-1.
    """

    n: int
    rows: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph.from_edges(n, [])

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle(n: int) -> "Graph":
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def complete_bipartite(a: int, b: int) -> "Graph":
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        return _iter_bits(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[Edge]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            for v in _iter_bits(row):
                out.append((u, v))
        return out

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertices(self) -> range:
        return range(self.n)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(G.rows)))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union; G2's labels are shifted up by G1.n."""
    rows = list(G1.rows) + [r << G1.n for r in G2.rows]
    return Graph(G1.n + G2.n, tuple(rows))


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n1, n2 = G1.n, G2.n
    mask1 = (1 << n1) - 1
    mask2 = ((1 << n2) - 1) << n1
    rows = [r | mask2 for r in G1.rows] + [(r << n1) | mask1 for r in G2.rows]
    return Graph(n1 + n2, tuple(rows))


def induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Subgraph induced by U, relabeled 0..|U|-1 in increasing label order."""
    keep = sorted(set(U))
    for u in keep:
        if not 0 <= u < G.n:
            raise DomainError(f"vertex {u} not in graph of order {G.n}")
    pos = {u: i for i, u in enumerate(keep)}
    rows = [0] * len(keep)
    for u in keep:
        for v in _iter_bits(G.rows[u]):
            if v in pos:
                rows[pos[u]] |= 1 << pos[v]
    return Graph(len(keep), tuple(rows))


def _bfs(G: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable vertices."""
    dist = [-1] * G.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        reach = 0
        for u in _iter_bits(frontier):
            reach |= G.rows[u]
        frontier = reach & ~seen
        seen |= frontier
        d += 1
        for u in _iter_bits(frontier):
            dist[u] = d
    return dist


def distances(G: Graph, u: int) -> list[int | float]:
    """Exact BFS distances from u; math.inf for unreachable vertices."""
    if not 0 <= u < G.n:
        raise DomainError(f"vertex {u} not in graph of order {G.n}")
    return [d if d >= 0 else math.inf for d in _bfs(G, u)]


def eccentricity(G: Graph, u: int) -> int | float:
    dist = _bfs(G, u)
    if min(dist) < 0:
        return math.inf
    return max(dist)


def diameter(G: Graph) -> int | float:
    """Largest hop distance over all vertex pairs; inf iff disconnected (n >= 2)."""
    if G.n == 0:
        return 0
    best = 0
    for u in range(G.n):
        ecc = eccentricity(G, u)
        if ecc is math.inf:
            return math.inf
        best = max(best, ecc)
    return best


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = 0
    comps = []
    for start in range(G.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for u in _iter_bits(frontier):
                reach |= G.rows[u]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_iter_bits(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def _mask_connected(G: Graph, mask: int) -> bool:
    """Is the subgraph induced by the vertex bitmask connected?"""
    if mask == 0:
        return True
    start = mask & -mask
    comp = start
    frontier = comp
    while frontier:
        reach = 0
        for u in _iter_bits(frontier):
            reach |= G.rows[u]
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp == mask


def contract_edges(G: Graph, S: Iterable[Edge]) -> Graph:
    """Contract every edge in S simultaneously.

    The result is the quotient of G by the connected components of the
    spanning subgraph (V, S); it is independent of any contraction order.
    Each component keeps the smallest label among its members, and labels are
    then compressed to 0..n'-1 preserving order.
    """
    return _quotient(G, S)[0]


def contraction_map(G: Graph, S: Iterable[Edge]) -> list[int]:
    """For each original vertex, the label of its bag in contract_edges(G, S)."""
    return _quotient(G, S)[1]


def _quotient(G: Graph, S: Iterable[Edge]) -> tuple[Graph, list[int]]:
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in S:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise DomainError(f"({u},{v}) is not an edge of the graph")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, int] = {}
    for v in range(G.n):
        r = find(v)
        groups[r] = groups.get(r, 0) | (1 << v)
    reps = sorted(groups)
    label = {r: i for i, r in enumerate(reps)}
    vmap = [label[find(v)] for v in range(G.n)]
    k = len(reps)
    rows = [0] * k
    union_rows = []
    for r in reps:
        acc = 0
        for v in _iter_bits(groups[r]):
            acc |= G.rows[v]
        union_rows.append(acc)
    for i in range(k):
        for j in range(i + 1, k):
            if union_rows[i] & groups[reps[j]]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(k, tuple(rows)), vmap


def contract_edge(G: Graph, e: Edge) -> Graph:
    """Contract a single edge; the new vertex keeps the smaller endpoint's label."""
    return contract_edges(G, [e])


def chordality(G: Graph, cap: int = DEFAULT_CHORDALITY_CAP) -> int:
    """Length of a longest induced cycle; 0 if the graph is acyclic.

    Exponential search over induced paths, intended for n <= cap.
    """
    if G.n > cap:
        raise CapacityError(f"chordality supports at most {cap} vertices, got {G.n}")
    best = 0
    for s in range(G.n):
        # Search induced cycles whose minimum vertex is s.  A path
        # s, p1, ..., pk is grown keeping it induced; closing back to s is
        # allowed once it has length >= 2.
        start_nbrs = [v for v in _iter_bits(G.rows[s]) if v > s]
        for p1 in start_nbrs:
            stack = [([s, p1], 1 << s | 1 << p1)]
            while stack:
                path, used = stack.pop()
                last = path[-1]
                closing = G.rows[last] >> s & 1 and len(path) >= 3
                if closing and path[1] < path[-1]:
                    best = max(best, len(path))
                if closing:
                    continue  # a chord to s forbids any longer induced cycle
                forbidden = 0
                for w in path[:-1]:
                    if w != s:
                        forbidden |= G.rows[w]
                cand = G.rows[last] & ~used & ~forbidden & ~(1 << s)
                for w in _iter_bits(cand):
                    if w > s:
                        stack.append((path + [w], used | 1 << w))
    return best


def max_clique(G: Graph) -> tuple[int, list[int]]:
    """Maximum clique size and its lexicographically smallest witness."""
    best = 0
    best_set: list[int] = []

    def grow(chosen: list[int], cand: int):
        nonlocal best, best_set
        if len(chosen) + cand.bit_count() <= best:
            return
        if cand == 0:
            if len(chosen) > best:
                best = len(chosen)
                best_set = list(chosen)
            return
        v = (cand & -cand).bit_length() - 1
        grow(chosen + [v], cand & G.rows[v] & ~((1 << (v + 1)) - 1))
        grow(chosen, cand & ~(1 << v))

    grow([], (1 << G.n) - 1)
    return best, best_set


def clique_number(G: Graph) -> int:
    return max_clique(G)[0]


def is_bipartite(G: Graph) -> tuple[list[int], list[int]] | None:
    """A bipartition (sides sorted, first side holds the smaller-labelled
    vertex of each component) if G is bipartite, else None.  Isolated
    vertices are placed in the second side."""
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] != -1:
            continue
        if G.rows[start] == 0:
            color[start] = 1
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in _iter_bits(G.rows[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    side0 = [v for v in range(G.n) if color[v] == 0]
    side1 = [v for v in range(G.n) if color[v] == 1]
    return side0, side1


def shortest_path(G: Graph, u: int, v: int) -> list[int] | None:
    """A lexicographically smallest shortest (u, v)-path, or None."""
    dist = _bfs(G, u)
    if dist[v] < 0:
        return None
    path = [v]
    cur = v
    while cur != u:
        prev = min(w for w in _iter_bits(G.rows[cur]) if dist[w] == dist[cur] - 1)
        path.append(prev)
        cur = prev
    return path[::-1]


def all_pairs_distances(G: Graph) -> list[list[int]]:
    """BFS distance matrix with -1 for unreachable pairs."""
    return [_bfs(G, u) for u in range(G.n)]


def edge_subsets(edges: Sequence[Edge], size: int) -> Iterator[tuple[Edge, ...]]:
    """Deterministic lexicographic enumeration of edge subsets of a given size."""
    return combinations(edges, size)
