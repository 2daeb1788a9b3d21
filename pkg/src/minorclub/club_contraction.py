"""Deciding how many edge contractions bring an AT-free graph to diameter
at most s (s >= 2).

Writing d for the diameter, the minimum number of contractions always lies
in [d-s, d-s+2].  The decision procedure is driven by paths between a
diameter dominating pair (u, v): a path Q = x_0..x_k is *satisfying* when it
extends to a (u,v)-path of length d and its end segments stay close to the
far vertex sets X_v, Y_v, X_u, Y_u (vertices at distance d and d-1 from v
and u).  Contracting an interior satisfying path of length d-s is enough;
when every satisfying path starts at u or ends at v, the near-end edges of
the unique shortest chain are forced and only two edges remain to guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .graph import (Edge, Graph, _bfs, _iter_bits, contract_edges,
                    contraction_map, diameter, is_connected, shortest_path)
from .recognition import diameter_dominating_pair, is_at_free


@dataclass(frozen=True)
class DistanceProfile:
    """Distance data of a diameter pair: d = dist(u, v) = diam(G), the far
    sets X/Y at distance d and d-1 from each endpoint, and both BFS rows."""

    u: int
    v: int
    d: int
    X_u: frozenset[int]
    Y_u: frozenset[int]
    X_v: frozenset[int]
    Y_v: frozenset[int]
    dist_u: tuple[int, ...]
    dist_v: tuple[int, ...]


@dataclass(frozen=True)
class SatisfyingPath:
    vertices: tuple[int, ...]
    profile: DistanceProfile

    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(tuple(sorted((vs[i], vs[i + 1])))
                     for i in range(len(vs) - 1))


@dataclass(frozen=True)
class ClubDecision:
    yes: bool
    witness: tuple[Edge, ...] | None = None


def distance_profile(G: Graph, u: int, v: int) -> DistanceProfile:
    """Profile for a diameter pair; errors when dist(u, v) != diam(G)."""
    if not is_connected(G):
        raise DomainError("graph must be connected")
    du = _bfs(G, u)
    dv = _bfs(G, v)
    d = du[v]
    if d != diameter(G):
        raise DomainError(f"({u},{v}) is not a diameter pair")
    return DistanceProfile(
        u, v, d,
        frozenset(x for x in range(G.n) if du[x] == d),
        frozenset(x for x in range(G.n) if du[x] == d - 1),
        frozenset(x for x in range(G.n) if dv[x] == d),
        frozenset(x for x in range(G.n) if dv[x] == d - 1),
        tuple(du), tuple(dv),
    )


def is_satisfying_path(G: Graph, prof: DistanceProfile, Q) -> bool:
    """Definition check of conditions i) through iii) for the path Q.

    i) holds iff Q climbs one breadth-first layer from u per step and its
    end distances sum with its length to d; any such path extends to a
    (u, v)-path of length d, every one of which is a shortest path.
    """
    Q = list(Q)
    if len(Q) < 2 or len(set(Q)) != len(Q):
        raise DomainError("Q must be a path on at least two distinct vertices")
    for a, b in zip(Q, Q[1:]):
        if not G.has_edge(a, b):
            raise DomainError("Q must be a path in the graph")
    k = len(Q) - 1
    du, dv = prof.dist_u, prof.dist_v
    base = du[Q[0]]
    if any(du[x] != base + i for i, x in enumerate(Q)):
        return False
    if base + k + dv[Q[-1]] != prof.d:
        return False
    return _end_conditions_ok(G, prof, Q[0], Q[1]) and \
        _end_conditions_ok_far(G, prof, Q[-1], Q[-2])


def _end_conditions_ok(G: Graph, prof: DistanceProfile, x0: int, x1: int) -> bool:
    d0 = _bfs(G, x0)
    d1 = _bfs(G, x1)
    ref = prof.dist_u[x0]
    if any(d0[z] != ref for z in prof.X_v):
        return False
    return all(d0[z] <= ref or d1[z] <= ref for z in prof.Y_v)


def _end_conditions_ok_far(G: Graph, prof: DistanceProfile, xk: int, xk1: int) -> bool:
    dk = _bfs(G, xk)
    dk1 = _bfs(G, xk1)
    ref = prof.dist_v[xk]
    if any(dk[z] != ref for z in prof.X_u):
        return False
    return all(dk[z] <= ref or dk1[z] <= ref for z in prof.Y_u)


def find_satisfying_path(G: Graph, prof: DistanceProfile, k: int):
    """Search for a satisfying path of length k >= 3 by trying all ordered
    choices of the first and last edge.

    Returns (path_or_None, pinned) where the path avoids x_0 = u and
    x_k = v whenever possible, and pinned is True iff paths exist but all
    of them start at u or end at v.
    """
    unpinned, found_any, pinned_example = _scan_paths(G, prof, k)
    if unpinned is not None:
        return SatisfyingPath(tuple(unpinned), prof), False
    if pinned_example is not None:
        return SatisfyingPath(tuple(pinned_example), prof), True
    assert not found_any
    return None, False


def _scan_paths(G: Graph, prof: DistanceProfile, k: int):
    """(first unpinned path, any path found, first pinned path)."""
    assert k >= 3
    du, dv = prof.dist_u, prof.dist_v
    d = prof.d
    layered = [(a, b) for a in range(G.n) for b in _iter_bits(G.rows[a])
               if du[b] == du[a] + 1]
    start_ok = {}
    end_ok = {}
    pinned_example = None
    found_any = False
    for x0, x1 in layered:
        if du[x0] + k > d:
            continue
        if (x0, x1) not in start_ok:
            start_ok[(x0, x1)] = _end_conditions_ok(G, prof, x0, x1)
        if not start_ok[(x0, x1)]:
            continue
        for xk1, xk in layered:
            if du[xk1] != du[x0] + k - 1 or du[xk] != du[x0] + k:
                continue
            if du[x0] + k + dv[xk] != d:
                continue
            if (xk, xk1) not in end_ok:
                end_ok[(xk, xk1)] = _end_conditions_ok_far(G, prof, xk, xk1)
            if not end_ok[(xk, xk1)]:
                continue
            interior = _layered_interior(G, du, x1, xk1, k - 2)
            if interior is None:
                continue
            path = [x0] + interior + [xk]
            found_any = True
            if x0 != prof.u and xk != prof.v:
                return path, True, pinned_example
            if pinned_example is None:
                pinned_example = path
    return None, found_any, pinned_example


def _layered_interior(G: Graph, du, x1: int, xk1: int, steps: int):
    """A path from x1 to xk1 moving up one u-layer per step, or None."""
    if steps == 0:
        return [x1] if x1 == xk1 else None
    reach = [1 << x1]
    for t in range(steps):
        layer = du[x1] + t + 1
        nxt = 0
        for w in _iter_bits(reach[-1]):
            nxt |= G.rows[w]
        nxt &= _layer_mask(G, du, layer)
        reach.append(nxt)
    if not (reach[-1] >> xk1) & 1:
        return None
    path = [xk1]
    cur = xk1
    for t in range(steps - 1, -1, -1):
        prev = min(w for w in _iter_bits(G.rows[cur] & reach[t]))
        path.append(prev)
        cur = prev
    return path[::-1]


def _layer_mask(G: Graph, du, layer: int) -> int:
    mask = 0
    for w in range(G.n):
        if du[w] == layer:
            mask |= 1 << w
    return mask


# Decision procedure ------------------------------------------------------

def s_club_contract_decide(G: Graph, k: int, s: int) -> ClubDecision:
    """Can at most k edge contractions bring diam(G) down to s or less?

    Every yes comes with a witness edge set that has been re-verified by
    contracting it and measuring the diameter.
    """
    _check_inputs(G, s)
    if k < 0:
        raise DomainError("contraction budget must be non-negative")
    if not is_connected(G):
        return ClubDecision(False)
    d = diameter(G)
    if d <= s:
        return ClubDecision(True, ())
    if k < d - s:
        return ClubDecision(False)
    if k >= d - s + 2:
        return ClubDecision(True, _dominating_path_witness(G, s))
    if k == d - s:
        return _decide_tight(G, s)
    # k == d - s + 1
    sub = _decide_tight(G, s)
    if sub.yes:
        return sub
    if k <= 2:
        return _brute_force(G, k, s)
    res = _one_extra_contraction(G, s, d)
    if res is not None:
        return _verified_yes(G, res, k, s)
    return ClubDecision(False)


def _one_extra_contraction(G: Graph, s: int, d: int):
    """Budget d - s + 1 >= 3 after the tight budget failed: some set of at
    most two contractions must leave the diameter at exactly one above the
    new tight bound; guess it and solve the quotient tightly."""
    for size in (1, 2):
        for Sp in combinations(G.edges(), size):
            Gq = contract_edges(G, Sp)
            if diameter(Gq) != d - size + 1:
                continue
            rec = _decide_tight(Gq, s)
            if rec.yes:
                return Sp + _lift_edges(G, Sp, rec.witness)
    return None


def _check_inputs(G: Graph, s: int):
    if s <= 1:
        raise DomainError(
            "only s >= 2 is supported on AT-free graphs; use the brute-force "
            "oracle for s = 1")
    at = is_at_free(G)
    if at is not True:
        raise DomainError("graph has an asteroidal triple", certificate=at)


def _verified_yes(G: Graph, S, k: int, s: int) -> ClubDecision:
    S = tuple(sorted(set(tuple(sorted(e)) for e in S)))
    assert len(S) <= k and diameter(contract_edges(G, S)) <= s
    return ClubDecision(True, S)


def _dominating_path_witness(G: Graph, s: int) -> tuple[Edge, ...]:
    """Contract d-s+2 edges of a shortest path between a diameter dominating
    pair; what remains of the path still dominates and has length s-2."""
    d = diameter(G)
    u, v = diameter_dominating_pair(G)
    P = shortest_path(G, u, v)
    S = tuple(tuple(sorted((P[i], P[i + 1]))) for i in range(d - s + 2))
    assert diameter(contract_edges(G, S)) <= s
    return S


def _brute_force(G: Graph, k: int, s: int) -> ClubDecision:
    edges = G.edges()
    for size in range(1, min(k, len(edges)) + 1):
        for S in combinations(edges, size):
            if diameter(contract_edges(G, S)) <= s:
                return ClubDecision(True, S)
    return ClubDecision(False)


def _decide_tight(G: Graph, s: int) -> ClubDecision:
    """Budget exactly d - s >= 1."""
    d = diameter(G)
    k = d - s
    if k <= 2:
        return _brute_force(G, k, s)
    u, v = diameter_dominating_pair(G)
    prof = distance_profile(G, u, v)
    unpinned, found_any, _ = _scan_paths(G, prof, k)
    if unpinned is not None:
        S = tuple(tuple(sorted((unpinned[i], unpinned[i + 1]))) for i in range(k))
        return _verified_yes(G, S, k, s)
    if not found_any:
        return ClubDecision(False)
    for dist_row in (prof.dist_u, prof.dist_v):
        S = _pinned_attempt(G, s, k, dist_row)
        if S is not None:
            return _verified_yes(G, S, k, s)
    return ClubDecision(False)


def _pinned_attempt(G: Graph, s: int, k: int, dist_from):
    """All satisfying paths start at this anchor: the vertex at each distance
    0..k-2 from it must be unique, those chain edges are forced, and two
    more contractions are guessed exhaustively."""
    chain = []
    for i in range(k - 1):
        layer = [w for w in range(G.n) if dist_from[w] == i]
        if len(layer) != 1:
            return None
        chain.append(layer[0])
    if any(not G.has_edge(a, b) for a, b in zip(chain, chain[1:])):
        return None
    forced = [tuple(sorted((chain[i], chain[i + 1]))) for i in range(k - 2)]
    Gq = contract_edges(G, forced)
    q_edges = Gq.edges()
    for e, f in combinations(q_edges, 2):
        if diameter(contract_edges(Gq, (e, f))) <= s:
            lifts = _lift_edges(G, forced, (e, f))
            return tuple(forced) + lifts
    return None


def _lift_edges(G: Graph, contracted, quotient_edges) -> tuple[Edge, ...]:
    """Map quotient edges back to concrete edges of G (smallest preimage)."""
    vmap = contraction_map(G, contracted)
    lifts = []
    for a, b in quotient_edges:
        pick = min((u, v) for u, v in G.edges()
                   if {vmap[u], vmap[v]} == {a, b})
        lifts.append(pick)
    return tuple(lifts)


def minimum_contraction(G: Graph, s: int) -> tuple[int, tuple[Edge, ...]]:
    """Smallest k with diam(G/S) <= s for some k-edge set S, plus a witness."""
    _check_inputs(G, s)
    if not is_connected(G):
        raise DomainError("disconnected graphs cannot reach finite diameter")
    d = diameter(G)
    if d <= s:
        return 0, ()
    tight = _decide_tight(G, s)
    if tight.yes:
        return d - s, tight.witness
    k1 = d - s + 1
    if k1 <= 2:
        res = _brute_force(G, k1, s)
        if res.yes:
            return k1, res.witness
    else:
        S = _one_extra_contraction(G, s, d)
        if S is not None:
            return k1, _verified_yes(G, S, k1, s).witness
    return d - s + 2, _dominating_path_witness(G, s)


def min_club_contraction_atfree(G: Graph, s: int) -> int:
    return minimum_contraction(G, s)[0]


def max_s_club_minor_atfree(G: Graph, s: int) -> int:
    """Each contraction loses exactly one vertex, so the largest bounded-
    diameter minor has n minus the minimum contraction count vertices."""
    return G.n - min_club_contraction_atfree(G, s)
