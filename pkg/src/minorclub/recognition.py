"""Recognition of the structured graph classes used by the solvers.

Each recognizer either certifies membership with a structural object the
solvers consume (cotree, strong ordering, dominating pair) or exhibits a
small obstruction (an induced P4, an asteroidal triple).  Constructions are
always re-checked by the corresponding verifier before being returned, so
correctness rests on the verifiers rather than on the constructors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .errors import CapacityError, DomainError
from .graph import (DEFAULT_CHORDALITY_CAP, Graph, _iter_bits,
                    all_pairs_distances, chordality, complement, components,
                    induced_subgraph, is_bipartite)

EXHAUSTIVE_ORDER_CAP = 8


# Cotrees ----------------------------------------------------------------

@dataclass(frozen=True)
class Cotree:
    """Rooted cotree: leaves carry vertex labels, internal nodes are typed
    union or join, have at least two children, and never repeat the type of
    their parent (canonical form)."""

    kind: str  # "leaf" | "union" | "join"
    children: tuple["Cotree", ...] = ()
    vertex: int | None = None

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out: list[int] = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_graph(self, n: int | None = None) -> Graph:
        """Rebuild the graph encoded by this cotree (lowest common ancestor
        of two leaves is a join node iff the vertices are adjacent)."""
        leaves = self.leaves()
        size = max(leaves) + 1 if n is None else n
        edges: list[tuple[int, int]] = []

        def walk(node: Cotree) -> list[int]:
            if node.kind == "leaf":
                return [node.vertex]
            groups = [walk(c) for c in node.children]
            if node.kind == "join":
                for i in range(len(groups)):
                    for j in range(i + 1, len(groups)):
                        edges.extend((u, v) for u in groups[i] for v in groups[j])
            return [v for g in groups for v in g]

        walk(self)
        return Graph.from_edges(size, edges)

    def to_text(self) -> str:
        if self.kind == "leaf":
            return str(self.vertex)
        tag = "U" if self.kind == "union" else "J"
        return "(" + tag + " " + " ".join(c.to_text() for c in self.children) + ")"


def recognize_cograph(G: Graph):
    """A canonical cotree for G, or the four vertices of an induced P4.

    Recursive decomposition: a disconnected graph is a union over its
    components, a graph with disconnected complement is a join over its
    co-components, and a graph where both are connected contains an induced
    P4 (located by direct search).
    """
    if G.n == 0:
        raise DomainError("cograph recognition needs at least one vertex")
    return _build_cotree(G, list(range(G.n)))


def _build_cotree(G: Graph, verts: list[int]):
    if len(verts) == 1:
        return Cotree("leaf", vertex=verts[0])
    H = induced_subgraph(G, verts)
    comps = components(H)
    if len(comps) > 1:
        kids = []
        for comp in comps:
            sub = _build_cotree(G, [verts[i] for i in comp])
            if not isinstance(sub, Cotree):
                return sub
            kids.append(sub)
        return Cotree("union", tuple(kids))
    co_comps = components(complement(H))
    if len(co_comps) > 1:
        kids = []
        for comp in co_comps:
            sub = _build_cotree(G, [verts[i] for i in comp])
            if not isinstance(sub, Cotree):
                return sub
            kids.append(sub)
        return Cotree("join", tuple(kids))
    p4 = _find_induced_p4(H)
    assert p4 is not None, "connected graph with connected complement has a P4"
    return tuple(verts[i] for i in p4)


def _find_induced_p4(G: Graph):
    """First induced path a-b-c-d in deterministic scan order, or None."""
    for b in range(G.n):
        for c in _iter_bits(G.rows[b]):
            if b == c:
                continue
            a_cands = G.rows[b] & ~G.rows[c] & ~(1 << c)
            d_cands = G.rows[c] & ~G.rows[b] & ~(1 << b)
            for a in _iter_bits(a_cands):
                picks = d_cands & ~G.rows[a] & ~(1 << a)
                if picks:
                    d = (picks & -picks).bit_length() - 1
                    return (a, b, c, d)
    return None


def find_induced_p4(G: Graph):
    """Four vertices inducing a path, or None when G is a cograph."""
    return _find_induced_p4(G)


# Strong orderings -------------------------------------------------------

@dataclass(frozen=True)
class StrongOrdering:
    """Bipartition with a total order on the second side.

    Adjacency property: every first-side neighborhood occupies consecutive
    positions of ``order2``.  Enclosure property: whenever one first-side
    neighborhood contains another, their difference is consecutive too.
    """

    side1: tuple[int, ...]
    order2: tuple[int, ...]


def verify_ordering(G: Graph, ordering: StrongOrdering) -> bool:
    """Direct definition check of the adjacency and enclosure properties."""
    side1 = list(ordering.side1)
    order2 = list(ordering.order2)
    if sorted(side1 + order2) != list(range(G.n)):
        raise DomainError("ordering sides do not partition the vertex set")
    for side in (side1, order2):
        sset = set(side)
        for u in side:
            if any(v in sset for v in G.neighbors(u)):
                raise DomainError("ordering sides are not a bipartition")
    pos = {v: i for i, v in enumerate(order2)}
    nbrs = {u: sorted(pos[v] for v in G.neighbors(u)) for u in side1}
    for u in side1:
        ps = nbrs[u]
        if ps and ps[-1] - ps[0] + 1 != len(ps):
            return False
    for u in side1:
        for v in side1:
            if u == v:
                continue
            su, sv = set(nbrs[u]), set(nbrs[v])
            if su <= sv:
                diff = sorted(sv - su)
                if diff and diff[-1] - diff[0] + 1 != len(diff):
                    return False
    return True


def strong_ordering(G: Graph) -> StrongOrdering | None:
    """A verified strong ordering if G is a bipartite permutation graph.

    Returns None when G is not bipartite or provably admits no ordering.
    Candidate orders come from an alternating neighborhood-interval sort per
    connected component; an exhaustive search over the smaller side settles
    components where the heuristic fails (CapacityError beyond that size).
    Isolated vertices go last in the order.
    """
    bip = is_bipartite(G)
    if bip is None:
        return None
    side1: list[int] = []
    order2: list[int] = []
    isolated: list[int] = []
    for comp in components(G):
        if len(comp) == 1:
            isolated.append(comp[0])
            continue
        got = _component_ordering(G, comp)
        if got is None:
            return None
        s1, o2 = got
        side1.extend(s1)
        order2.extend(o2)
    order2.extend(isolated)
    ordering = StrongOrdering(tuple(side1), tuple(order2))
    assert verify_ordering(G, ordering)
    return ordering


def _component_ordering(G: Graph, comp: list[int]):
    H = induced_subgraph(G, comp)
    bip = is_bipartite(H)
    assert bip is not None
    c0, c1 = bip
    for v1, v2 in ((c0, c1), (c1, c0)):
        order = _staircase_iterate(H, v1, v2)
        if order is not None and _sides_ok(H, v1, order):
            return [comp[u] for u in v1], [comp[v] for v in order]
    small, big = (c0, c1) if len(c0) <= len(c1) else (c1, c0)
    if len(small) > EXHAUSTIVE_ORDER_CAP:
        raise CapacityError(
            f"cannot certify strong ordering for a component with sides "
            f"{len(c0)}/{len(c1)}; exhaustive fallback capped at {EXHAUSTIVE_ORDER_CAP}"
        )
    for perm in permutations(small):
        if _sides_ok(H, big, list(perm)):
            return [comp[u] for u in big], [comp[v] for v in perm]
    return None


def _sides_ok(H: Graph, v1: list[int], order: list[int]) -> bool:
    return verify_ordering(H, StrongOrdering(tuple(v1), tuple(order)))


def _staircase_iterate(H: Graph, v1: list[int], v2: list[int]):
    """Alternately sort each side by (first, last) neighbor positions of the
    other side's current order; converges to a staircase when one exists."""
    order2 = sorted(v2)
    for _ in range(2 * H.n + 4):
        pos2 = {v: i for i, v in enumerate(order2)}
        order1 = sorted(v1, key=lambda u: _interval_key(H, u, pos2))
        pos1 = {v: i for i, v in enumerate(order1)}
        new2 = sorted(v2, key=lambda v: _interval_key(H, v, pos1))
        if new2 == order2:
            break
        order2 = new2
    return order2


def _interval_key(H: Graph, u: int, pos: dict[int, int]):
    ps = sorted(pos[v] for v in H.neighbors(u))
    if not ps:
        return (len(pos) + 1, len(pos) + 1, u)
    return (ps[0], ps[-1], u)


def restrict_ordering(ordering: StrongOrdering, keep: list[int]) -> StrongOrdering:
    """Ordering inherited by the induced subgraph on ``keep`` (which
    induced_subgraph relabels to 0..len(keep)-1 in sorted label order)."""
    keep_sorted = sorted(set(keep))
    pos = {v: i for i, v in enumerate(keep_sorted)}
    side1 = tuple(pos[v] for v in ordering.side1 if v in pos)
    order2 = tuple(pos[v] for v in ordering.order2 if v in pos)
    return StrongOrdering(side1, order2)


# AT-freeness and dominating pairs ---------------------------------------

def _avoiding_components(G: Graph, w: int) -> list[int]:
    """Component id of each vertex in G minus the closed neighborhood of w
    (-1 inside the neighborhood)."""
    banned = G.rows[w] | (1 << w)
    comp_id = [-1] * G.n
    cid = 0
    for start in range(G.n):
        if comp_id[start] != -1 or (banned >> start) & 1:
            continue
        mask = 1 << start
        frontier = mask
        while frontier:
            reach = 0
            for u in _iter_bits(frontier):
                reach |= G.rows[u]
            frontier = reach & ~mask & ~banned
            mask |= frontier
        for u in _iter_bits(mask):
            comp_id[u] = cid
        cid += 1
    return comp_id


def is_at_free(G: Graph):
    """True, or the lexicographically first asteroidal triple.

    A triple of pairwise non-adjacent vertices is asteroidal when each pair
    lies in one component of the graph minus the third's closed neighborhood.
    """
    comp = [_avoiding_components(G, w) for w in range(G.n)]

    def linked(a: int, b: int, through: int) -> bool:
        return comp[through][a] != -1 and comp[through][a] == comp[through][b]

    for a in range(G.n):
        for b in range(a + 1, G.n):
            if G.has_edge(a, b):
                continue
            for c in range(b + 1, G.n):
                if G.has_edge(a, c) or G.has_edge(b, c):
                    continue
                if linked(a, b, c) and linked(a, c, b) and linked(b, c, a):
                    return (a, b, c)
    return True


def is_dominating_pair(G: Graph, u: int, v: int) -> bool:
    """Does every (u, v)-path dominate the graph?  Equivalently, no third
    vertex z leaves u and v in one component of G minus N[z]."""
    for z in range(G.n):
        if z in (u, v):
            continue
        comp = _avoiding_components(G, z)
        if comp[u] != -1 and comp[u] == comp[v]:
            return False
    return True


def diameter_dominating_pair(G: Graph) -> tuple[int, int]:
    """Lexicographically smallest pair at distance diam(G) whose every
    connecting path dominates G.  Exists on connected AT-free graphs."""
    dist = all_pairs_distances(G)
    if G.n == 0 or any(d < 0 for row in dist for d in row):
        raise DomainError("graph must be connected")
    d = max(max(row) for row in dist)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if dist[u][v] == d and is_dominating_pair(G, u, v):
                return (u, v)
    if G.n == 1:
        return (0, 0)
    raise DomainError("no diameter dominating pair exists; is the graph AT-free?")


# Simple class predicates -------------------------------------------------

def is_split(G: Graph) -> bool:
    """Degree-sequence characterization of split graphs."""
    degs = sorted((G.degree(v) for v in range(G.n)), reverse=True)
    m = 0
    for i, dv in enumerate(degs, start=1):
        if dv >= i - 1:
            m = i
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    return lhs == rhs


def is_cobipartite(G: Graph) -> bool:
    return is_bipartite(complement(G)) is not None


def is_chordal_bipartite(G: Graph, cap: int = DEFAULT_CHORDALITY_CAP) -> bool:
    if is_bipartite(G) is None:
        return False
    return chordality(G, cap=cap) <= 4


# Certificates ------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Outcome of one recognizer: the certifying object or an obstruction."""

    variant: str  # cotree | ordering | induced-P4 | asteroidal-triple | dominating-pair | none
    payload: object = None

    def to_text(self) -> str:
        if self.variant == "cotree":
            return self.payload.to_text()
        if self.variant == "ordering":
            o: StrongOrdering = self.payload
            return ("side1 " + " ".join(map(str, o.side1))
                    + " | order2 " + " ".join(map(str, o.order2)))
        if self.variant in ("induced-P4", "asteroidal-triple", "dominating-pair"):
            return " ".join(map(str, self.payload))
        return "none"
