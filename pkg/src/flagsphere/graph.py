"""Simple graphs and stable-set computations.

Graphs carry dense vertex ids ``0..n-1`` plus labels. Adjacency is kept both
as frozensets and as integer bitmasks; the exact solver works on bitmasks.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidInput, PreconditionFailed, SolverTimeout

HARD_CAP = 2000

EXACT = "exact"
TURAN_GREEDY = "turan_greedy"
LINK_RECURSIVE = "link_recursive"


class Graph:
    """Undirected simple graph on ``0..n-1`` with string labels."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise InvalidInput("negative vertex count")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(a) for a in adj)
        self.labels = tuple(str(s) for s in labels) if labels is not None else tuple(map(str, range(n)))
        if len(self.labels) != n:
            raise InvalidInput("label count does not match n")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in a) for a in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.labels)}

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, renumbered in ascending id order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[w]) for u in vs for w in self.adj[u] if w in pos and u < w]
        return Graph(len(vs), edges, [self.labels[v] for v in vs])

    def complement(self) -> "Graph":
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if v not in self.adj[u]]
        return Graph(self.n, edges, self.labels)

    def edge_set(self) -> frozenset:
        """Edges as frozensets of labels (id-independent)."""
        return frozenset(frozenset((self.labels[u], self.labels[v])) for u, v in self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((frozenset(self.labels), self.edge_set()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n1 = G1.n
    edges = list(G1.edges()) + [(u + n1, v + n1) for u, v in G2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(G2.n)]
    return Graph(n1 + G2.n, edges, [s + "#L" for s in G1.labels] + [s + "#R" for s in G2.labels])


@dataclass(frozen=True)
class StableSetWitness:
    vertices: frozenset
    method: str
    size: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if self.size < 0:
            object.__setattr__(self, "size", len(self.vertices))

    def to_json(self, G: Graph) -> dict:
        return {"method": self.method, "size": self.size,
                "vertices": sorted(G.labels[v] for v in self.vertices)}


def is_stable(G: Graph, S: Iterable[int]) -> bool:
    S = set(S)
    for v in S:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InvalidInput(f"vertex {v!r} not in graph")
    return all(not (G.adj[v] & S) for v in S)


# -- exact solver ---------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _Search:
    """Branch and bound for maximum stable sets on bitmask graphs.

    Pruning uses a greedy clique cover of the candidate set (a clique holds at
    most one vertex of any stable set). Before branching, the candidate set is
    reduced: isolated and simplicial vertices are taken, dominated vertices
    are dropped, and connected components are solved separately.
    """

    def __init__(self, masks: Sequence[int], deadline: float | None):
        self.adj = list(masks)
        self.closed = [m | (1 << v) for v, m in enumerate(masks)]
        self.deadline = deadline
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise _Expired

    def cover_bound(self, P: int) -> int:
        """Number of cliques in a greedy clique cover of ``P``."""
        adj = self.adj
        classes: list[int] = []  # common neighbourhood of each clique
        for v in _bits(P):
            bit = 1 << v
            for i, common in enumerate(classes):
                if common & bit:
                    classes[i] = common & adj[v]
                    break
            else:
                classes.append(adj[v])
        return len(classes)

    def reduce(self, P: int) -> tuple[int, int]:
        """Apply safe reductions; return (forced vertices, remaining set)."""
        adj, closed = self.adj, self.closed
        forced = 0
        changed = True
        while changed and P:
            changed = False
            for v in _bits(P):
                if not (P >> v) & 1:
                    continue
                nb = adj[v] & P
                # simplicial: N(v) is a clique, so some maximum set contains v
                simplicial = True
                for w in _bits(nb):
                    if nb & ~closed[w]:
                        simplicial = False
                        break
                if simplicial:
                    forced |= 1 << v
                    P &= ~(nb | (1 << v))
                    changed = True
                    continue
                # v is dominated by a neighbour u with N[u] within N[v]
                cv = closed[v] & P
                for u in _bits(nb):
                    if not (closed[u] & P) & ~cv:
                        P &= ~(1 << v)
                        changed = True
                        break
        return forced, P

    def components(self, P: int) -> list[int]:
        comps = []
        adj = self.adj
        while P:
            seed = P & -P
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= adj[v]
                nxt &= P & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            P &= ~comp
        return comps

    def solve(self, P: int, lb: int) -> int | None:
        """Maximum stable subset of ``P`` if its size exceeds ``lb``, else None."""
        self._tick()
        forced, P = self.reduce(P)
        nf = _popcount(forced)
        lb -= nf
        if not P:
            return forced if lb < 0 else None
        comps = self.components(P)
        if len(comps) > 1:
            bounds = [self.cover_bound(c) for c in comps]
            if sum(bounds) <= lb:
                return None
            order = sorted(range(len(comps)), key=lambda i: bounds[i])
            exact_total = 0
            chosen = forced
            remaining_ub = sum(bounds)
            for i in order:
                remaining_ub -= bounds[i]
                sub_lb = lb - exact_total - remaining_ub
                got = self.solve(comps[i], sub_lb)
                if got is None:
                    return None
                exact_total += _popcount(got)
                chosen |= got
            return chosen if exact_total > lb else None
        if self.cover_bound(P) <= lb:
            return None
        v = self._branch_vertex(P)
        best = None
        got = self.solve(P & ~self.closed[v], lb - 1)
        if got is not None:
            best = got | (1 << v)
            lb = _popcount(best)
        got = self.solve(P & ~(1 << v), lb)
        if got is not None:
            best = got
        return None if best is None else best | forced

    def _branch_vertex(self, P: int) -> int:
        adj = self.adj
        best_v, best_deg = -1, -1
        for v in _bits(P):
            deg = _popcount(adj[v] & P)
            if deg > best_deg:
                best_v, best_deg = v, deg
        return best_v


class _Expired(Exception):
    pass


def _greedy_stable_mask(masks: Sequence[int], P: int) -> int:
    """Minimum-degree greedy inside ``P``; ties by smallest id."""
    chosen = 0
    while P:
        v = min(_bits(P), key=lambda x: (_popcount(masks[x] & P), x))
        chosen |= 1 << v
        P &= ~(masks[v] | (1 << v))
    return chosen


def alpha_exact(G: Graph, time_budget: float | None = None,
                hard_cap: int = HARD_CAP) -> StableSetWitness:
    """Maximum stable set by branch and bound.

    Raises :class:`SolverTimeout` carrying the best set found when
    ``time_budget`` seconds elapse before optimality is proven.
    """
    if G.n > hard_cap:
        raise InvalidInput(f"graph has {G.n} vertices, above the cap of {hard_cap}")
    full = (1 << G.n) - 1
    incumbent = _greedy_stable_mask(G.masks, full)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    search = _Search(G.masks, deadline)
    try:
        better = search.solve(full, _popcount(incumbent))
    except _Expired:
        raise SolverTimeout(f"no optimality proof within {time_budget}s",
                            StableSetWitness(frozenset(_bits(incumbent)), EXACT)) from None
    if better is not None:
        incumbent = better
    return StableSetWitness(frozenset(_bits(incumbent)), EXACT)


def alpha(G: Graph) -> int:
    return alpha_exact(G).size


def turan_stable(G: Graph) -> StableSetWitness:
    """Greedy: repeatedly take a minimum-degree vertex and delete its closed
    neighbourhood. The result has at least ``n / (avg_degree + 1)`` vertices."""
    chosen = _greedy_stable_mask(G.masks, (1 << G.n) - 1)
    return StableSetWitness(frozenset(_bits(chosen)), TURAN_GREEDY)


def turan_guarantee(G: Graph) -> int:
    """``ceil(n / (avg_degree + 1))``, computed exactly."""
    if G.n == 0:
        return 0
    return ceil(Fraction(G.n) / (G.average_degree() + 1))


# -- link recursion -------------------------------------------------------

def meets_power_bound(size: int, n: int, d: int) -> bool:
    """Exact test of ``size >= n ** (1/(d-2)) / 4``, i.e. ``(4 size)^(d-2) >= n``."""
    return (4 * size) ** (d - 2) >= n


def _link_recursive(G: Graph, d: int) -> frozenset:
    """Stable set in the graph of a flag (d-1)-sphere, following the
    induction on dimension: descend into a large vertex link when there is
    one, otherwise pick vertices greedily."""
    n = G.n
    if d == 4:
        # each link is a planar triangulation; an exact solve stands in for
        # the four-colour bound ceil(|V(link)|/4)
        threshold_ok = lambda size: size * size >= n  # noqa: E731
    else:
        threshold_ok = lambda size: size ** (d - 2) >= n ** (d - 3)  # noqa: E731
    v = min(range(n), key=lambda x: (-G.degree(x), x))
    nb = sorted(G.adj[v])
    if threshold_ok(len(nb)):
        sub = G.induced(nb)
        if d == 4:
            inner = alpha_exact(sub).vertices
            if 4 * len(inner) < len(nb):
                raise AssertionError("planar link below the four-colour bound")
        else:
            inner = _link_recursive(sub, d - 1)
        return frozenset(nb[i] for i in inner)
    return frozenset(_bits(_greedy_stable_mask(G.masks, (1 << n) - 1)))


def link_recursive_stable(K, d: int, cert=None, check: bool = True) -> StableSetWitness:
    """Stable set of size at least ``n^(1/(d-2)) / 4`` in a flag (d-1)-sphere.

    ``K`` must be a flag sphere; unless ``check`` is False this is verified
    (flagness here, sphere-ness through ``cert`` or a fresh certification).
    For a flag complex the link of a vertex is the clique complex of its
    neighbourhood, so the recursion runs on induced subgraphs.
    """
    from .complex import is_flag, skeleton_graph
    from .verify import verify_sphere, NOT_SPHERE

    if d < 4:
        raise PreconditionFailed("link recursion needs d >= 4")
    if K.dim != d - 1 or not K.is_pure:
        raise PreconditionFailed(f"expected a pure {d - 1}-dimensional complex")
    if check:
        if not is_flag(K):
            raise PreconditionFailed("complex is not flag")
        cert = cert if cert is not None else verify_sphere(K)
        if cert.verdict == NOT_SPHERE:
            raise PreconditionFailed(f"not a sphere: {cert.reason}")
    G = skeleton_graph(K)
    S = _link_recursive(G, d)
    assert is_stable(G, S)
    assert meets_power_bound(len(S), G.n, d), "size below n^(1/(d-2))/4"
    return StableSetWitness(S, LINK_RECURSIVE)


# -- .graph files ---------------------------------------------------------

def write_graph(G: Graph, path) -> None:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{G.labels[u]} {G.labels[v]}" for u, v in G.edges()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_graph(text: str, source: str = "<string>") -> Graph:
    rows = [(i, line.split()) for i, line in enumerate(text.splitlines(), 1)
            if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise InvalidInput(f"{source}: empty graph file")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise InvalidInput(f"{source}:{lineno}: expected 'n m' header") from None
    if len(rows) - 1 != m:
        raise InvalidInput(f"{source}: header says {m} edges, found {len(rows) - 1}")
    index: dict[str, int] = {}
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise InvalidInput(f"{source}:{lineno}: expected two labels")
        for p in parts:
            index.setdefault(p, len(index))
        edges.append((index[parts[0]], index[parts[1]]))
    if len(index) > n:
        raise InvalidInput(f"{source}: {len(index)} labels exceed n={n}")
    labels = list(index) + [f"v{i}" for i in range(len(index), n)]
    return Graph(n, edges, labels)


def read_graph(path) -> Graph:
    path = Path(path)
    return parse_graph(path.read_text(encoding="utf-8"), str(path))


def witness_json(G: Graph, w: StableSetWitness) -> str:
    return json.dumps(w.to_json(G), sort_keys=True)
