"""Generators for the hard-instance constructions, with brute-force solvers
for the source problems so generated instances can be validated end to end.

Constructions: not-all-equal 3-SAT to clique contraction on a co-bipartite
graph; hitting set to diameter-2 contraction on a split graph and to
diameter-3 contraction on a chordal graph; the pendant lift raising the
diameter target by two; and the one-subdivision making any graph bipartite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapacityError, DomainError, ParseError
from .graph import Graph, _iter_bits
from .recognition import is_cobipartite, is_split

SOLVER_CAP = 20


@dataclass(frozen=True)
class NaeFormula:
    """3-CNF formula for the not-all-equal interpretation.

    Clauses are triples of nonzero signed 1-based variable indexes, DIMACS
    style: literal 3 is variable 3 positive, -3 its negation.
    """

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise DomainError("clauses must have exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise DomainError(f"literal {lit} out of range")

    @property
    def m(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class HittingSetInstance:
    """Universe 0..n-1, family of nonempty subsets, and a budget k."""

    n: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(S) for S in self.sets))
        for S in self.sets:
            if not S:
                raise DomainError("sets must be nonempty")
            if any(not 0 <= x < self.n for x in S):
                raise DomainError("set element outside the universe")


@dataclass(frozen=True)
class ReductionInstance:
    """A generated hard instance: the graph, the contraction budget, a
    human-readable target, role labels for every constructed vertex, and the
    source object for round-trip checks."""

    graph: Graph
    k: int
    target: str
    labels: dict[str, int] = field(default_factory=dict)
    source: object = None


def nae3sat_to_cobipartite(phi: NaeFormula) -> ReductionInstance:
    """Build the co-bipartite graph that is (2n-2)-contractible to a
    complete graph exactly when the formula has a not-all-equal assignment.

    Two adjacent literal vertices per variable form the clique X; each
    clause contributes 4n-3 copies adjacent to its literals, each variable
    4n-3 dummies adjacent to its two literals, and everything outside X is
    completed to a clique.
    """
    n, m = phi.n, phi.m
    if n < 1:
        raise DomainError("formula needs at least one variable")
    copies = 4 * n - 3
    labels: dict[str, int] = {}
    for i in range(1, n + 1):
        labels[f"literal:+{i}"] = 2 * (i - 1)
        labels[f"literal:-{i}"] = 2 * (i - 1) + 1
    nv = 2 * n
    for j in range(m):
        for p in range(copies):
            labels[f"clause:{j}:{p}"] = nv
            nv += 1
    for i in range(1, n + 1):
        for p in range(copies):
            labels[f"dummy:{i}:{p}"] = nv
            nv += 1
    x_clique = list(range(2 * n))
    rest = list(range(2 * n, nv))
    edges = set()
    for group in (x_clique, rest):
        edges.update((a, b) for a, b in combinations(group, 2))
    for j, clause in enumerate(phi.clauses):
        for lit in clause:
            lv = labels[f"literal:{'+' if lit > 0 else '-'}{abs(lit)}"]
            for p in range(copies):
                cv = labels[f"clause:{j}:{p}"]
                edges.add((min(lv, cv), max(lv, cv)))
    for i in range(1, n + 1):
        for p in range(copies):
            dv = labels[f"dummy:{i}:{p}"]
            edges.add((labels[f"literal:+{i}"], dv))
            edges.add((labels[f"literal:-{i}"], dv))
    G = Graph.from_edges(nv, edges)
    assert is_cobipartite(G)
    N = copies * (n + m)
    assert N == nv - 2 * n
    return ReductionInstance(G, 2 * n - 2, f"complete graph on {N + 2} vertices",
                             labels, phi)


def hitting_set_to_split(inst: HittingSetInstance) -> ReductionInstance:
    """Split graph that is k-contractible to diameter 2 exactly when the
    instance has a hitting set of size at most k.

    The universe becomes a clique, each set gets 2k+1 copy vertices adjacent
    to its members, a hub x sees the whole universe, and 2k+1 pendants hang
    off the hub."""
    G, labels = _hitting_core(inst)
    assert is_split(G)
    return ReductionInstance(G, inst.k, "diameter at most 2", labels, inst)


def hitting_set_to_chordal(inst: HittingSetInstance) -> ReductionInstance:
    """Chordal variant for diameter 3: the pendants are pushed one level
    down behind a clique of 2k+1 middle vertices."""
    G, labels = _hitting_core(inst, chordal_variant=True)
    assert _is_chordal(G)
    return ReductionInstance(G, inst.k, "diameter at most 3", labels, inst)


def _hitting_core(inst: HittingSetInstance, chordal_variant: bool = False):
    n, k = inst.n, inst.k
    copies = 2 * k + 1
    labels: dict[str, int] = {f"universe:{i}": i for i in range(n)}
    nv = n
    for j in range(len(inst.sets)):
        for p in range(copies):
            labels[f"set:{j}:{p}"] = nv
            nv += 1
    labels["hub"] = nv
    hub = nv
    nv += 1
    edges = set((a, b) for a, b in combinations(range(n), 2))
    edges.update((i, hub) for i in range(n))
    for j, S in enumerate(inst.sets):
        for p in range(copies):
            cv = labels[f"set:{j}:{p}"]
            edges.update((min(i, cv), max(i, cv)) for i in S)
    if not chordal_variant:
        for p in range(copies):
            labels[f"pendant:{p}"] = nv
            edges.add((hub, nv))
            nv += 1
    else:
        mids = []
        for p in range(copies):
            labels[f"mid:{p}"] = nv
            mids.append(nv)
            nv += 1
        edges.update((min(a, b), max(a, b)) for a, b in combinations(mids + [hub], 2))
        for p in range(copies):
            labels[f"pendant:{p}"] = nv
            edges.add((mids[p], nv))
            nv += 1
    return Graph.from_edges(nv, edges), labels


def _is_chordal(G: Graph) -> bool:
    """Simplicial elimination: repeatedly delete a vertex whose neighborhood
    is a clique."""
    rows = list(G.rows)
    alive = (1 << G.n) - 1
    for _ in range(G.n):
        pick = -1
        for v in _iter_bits(alive):
            nb = rows[v] & alive
            if all(rows[a] & (nb & ~(1 << a)) == (nb & ~(1 << a))
                   for a in _iter_bits(nb)):
                pick = v
                break
        if pick < 0:
            return False
        alive &= ~(1 << pick)
    return True


def pendant_lift(G: Graph, k: int) -> Graph:
    """Attach k+1 new degree-one vertices to every vertex; n(k+2) vertices
    total, chordality unchanged."""
    edges = list(G.edges())
    nv = G.n
    for v in range(G.n):
        for _ in range(k + 1):
            edges.append((v, nv))
            nv += 1
    return Graph.from_edges(nv, edges)


def subdivide_edges(G: Graph) -> Graph:
    """Replace every edge by a length-2 path; the result is bipartite on
    n + m vertices."""
    edges = []
    nv = G.n
    for u, v in G.edges():
        edges.append((u, nv))
        edges.append((v, nv))
        nv += 1
    return Graph.from_edges(nv, edges)


def nae3sat_solve(phi: NaeFormula, cap: int = SOLVER_CAP):
    """First assignment (as a bool tuple) giving every clause at least one
    true and one false literal, else None.  Exhaustive, n <= cap."""
    if phi.n > cap:
        raise CapacityError(f"solver capped at {cap} variables")
    for bits in range(1 << phi.n):
        assign = [(bits >> i) & 1 == 1 for i in range(phi.n)]
        ok = True
        for clause in phi.clauses:
            vals = [assign[abs(l) - 1] == (l > 0) for l in clause]
            if all(vals) or not any(vals):
                ok = False
                break
        if ok:
            return tuple(assign)
    return None


def hitting_set_solve(inst: HittingSetInstance, cap: int = SOLVER_CAP):
    """Smallest hitting set within the budget, else None.  Exhaustive."""
    if inst.n > cap:
        raise CapacityError(f"solver capped at {cap} universe elements")
    for size in range(0, inst.k + 1):
        for U in combinations(range(inst.n), size):
            chosen = set(U)
            if all(chosen & S for S in inst.sets):
                return tuple(U)
    return None


# Input formats ------------------------------------------------------------

def parse_dimacs_cnf(text: str) -> NaeFormula:
    """DIMACS CNF: 'p cnf n m' then clauses terminated by 0."""
    n = None
    clauses = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("malformed problem line, expected 'p cnf n m'")
            n = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                    current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if n is None:
        raise ParseError("missing 'p cnf n m' line")
    return NaeFormula(n, tuple(clauses))


def parse_set_system(text: str, k: int) -> HittingSetInstance:
    """Line format: 'n m' header, then one set per line as member indexes."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty set system")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("set system needs an 'n m' header")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} sets but {len(lines) - 1} follow")
    sets = [frozenset(int(tok) for tok in ln.split()) for ln in lines[1:]]
    return HittingSetInstance(n, tuple(sets), k)
