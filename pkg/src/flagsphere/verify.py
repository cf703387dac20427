"""Sphere recognition for pure complexes.

The verdict is three-valued. ``CertifiedSphere`` is only returned when the
argument is sound: a cycle in dimension 1, a connected closed surface with
Euler characteristic 2 in dimension 2, and in dimensions 3 and 4 a sequence
of bistellar flips ending at the boundary of a simplex (with all vertex
links certified). When the homology is that of a sphere but the flip search
gives up, or the dimension is 5 or more, the verdict is ``HomologySphere``.
"""
from __future__ import annotations

import random
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Complex, euler_characteristic, link
from .errors import Inconclusive, NotPure, PreconditionFailed

CERTIFIED = "CertifiedSphere"
HOMOLOGY_SPHERE = "HomologySphere"
NOT_SPHERE = "NotSphere"

DEFAULT_ROUNDS = 10_000
DEFAULT_RESTARTS = 5
MAX_FLIP_DIM = 4


@dataclass
class SphereCert:
    verdict: str
    reason: str = ""
    betti: tuple[int, ...] | None = None
    links: dict = field(default_factory=dict)
    trace_length: int | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason,
                "betti": list(self.betti) if self.betti is not None else None,
                "links": dict(sorted(self.links.items())),
                "trace_length": self.trace_length}


@dataclass
class PseudomanifoldCheck:
    ok: bool
    witness: str = ""

    def __bool__(self):
        return self.ok


def is_pseudomanifold(K: Complex) -> PseudomanifoldCheck:
    """Every ridge lies in exactly two facets and the dual graph is connected."""
    if not K.is_pure:
        raise NotPure("complex is not pure")
    if K.dim < 1:
        return PseudomanifoldCheck(K.dim == 0 and K.n == 2 or K.dim == -1,
                                   "" if K.n == 2 else f"0-dimensional with {K.n} points")
    ridges: dict[frozenset, list[frozenset]] = defaultdict(list)
    for f in K.facets:
        for v in f:
            ridges[f - {v}].append(f)
    for r, fs in ridges.items():
        if len(fs) != 2:
            names = sorted(K.label(v) for v in r)
            return PseudomanifoldCheck(False, f"ridge {names} lies in {len(fs)} facet(s)")
    facets = list(K.facets)
    seen = {facets[0]}
    queue = deque([facets[0]])
    while queue:
        f = queue.popleft()
        for v in f:
            for g in ridges[f - {v}]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
    if len(seen) != len(facets):
        return PseudomanifoldCheck(False, f"dual graph disconnected ({len(seen)} of {len(facets)} facets reachable)")
    return PseudomanifoldCheck(True)


def gf2_rank(columns) -> int:
    """Rank over GF(2) of vectors given as integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for vec in columns:
        while vec:
            top = vec.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = vec
                rank += 1
                break
            vec ^= p
    return rank


def betti_mod2(K: Complex) -> tuple[int, ...]:
    """Betti numbers ``(b_0, ..., b_dim)`` with coefficients in GF(2)."""
    D = K.dim
    if D < 0:
        return ()
    index = {}
    for k in range(D + 1):
        index[k] = {f: i for i, f in enumerate(sorted(K.faces(k), key=sorted))}
    ranks = {0: 0, D + 1: 0}
    for k in range(1, D + 1):
        lower = index[k - 1]
        cols = (sum(1 << lower[f - {v}] for v in f) for f in index[k])
        ranks[k] = gf2_rank(cols)
    return tuple(len(index[k]) - ranks[k] - ranks[k + 1] for k in range(D + 1))


def sphere_betti(D: int) -> tuple[int, ...]:
    if D == 0:
        return (2,)
    return (1,) + (0,) * (D - 1) + (1,)


# -- bistellar flips -------------------------------------------------------

class _Triangulation:
    """Mutable facet set with a vertex-to-facets index."""

    def __init__(self, facets, D: int):
        self.D = D
        self.facets = set(facets)
        self.star = defaultdict(set)
        for f in self.facets:
            for v in f:
                self.star[v].add(f)

    def containing(self, A: frozenset) -> list[frozenset]:
        pivot = min(A, key=lambda v: len(self.star[v]))
        return [f for f in self.star[pivot] if A <= f]

    def has_face(self, B: frozenset) -> bool:
        pivot = min(B, key=lambda v: len(self.star[v]))
        return any(B <= f for f in self.star[pivot])

    def move_for(self, A: frozenset):
        """The complementary face B when a flip on A is possible, else None."""
        star = self.containing(A)
        b = self.D + 2 - len(A)
        if len(star) != b:
            return None
        B = frozenset().union(*star) - A
        if len(B) != b:
            return None
        if b > 1 and self.has_face(B):
            return None
        return B

    def apply(self, A: frozenset, B: frozenset):
        for b in B:
            f = A | (B - {b})
            self.facets.remove(f)
            for v in f:
                self.star[v].discard(f)
        for a in A:
            f = (A - {a}) | B
            self.facets.add(f)
            for v in f:
                self.star[v].add(f)
        for a in A:
            if not self.star[a]:
                del self.star[a]

    def candidates(self, size: int) -> set[frozenset]:
        out = set()
        for f in self.facets:
            out.update(map(frozenset, combinations(sorted(f), size)))
        return out

    @property
    def n(self) -> int:
        return len(self.star)

    def is_simplex_boundary(self) -> bool:
        return self.n == self.D + 2 and len(self.facets) == self.D + 2


def bistellar_reduce(K: Complex, max_rounds: int = DEFAULT_ROUNDS, seed: int = 0):
    """Search for flips reducing ``K`` to the boundary of a simplex.

    Flips that shrink the f-vector are applied greedily, smallest face first
    (so vertex removals win). When none is available the search heats up:
    a burst of random flips on larger faces is applied, and the burst length
    grows the longer the vertex count fails to improve. Returns
    ``(reduced complex, trace)`` with the trace listing ``(A, B)`` label pairs
    for each flip; raises :class:`Inconclusive` when ``max_rounds`` run out.
    """
    if not is_pseudomanifold(K):
        raise PreconditionFailed("bistellar reduction needs a pseudomanifold")
    D = K.dim
    rng = random.Random(seed)
    T = _Triangulation(K.facets, D)
    labels = K.labels
    trace = []
    reducing = range(1, (D + 1) // 2 + 1)  # |A| < |B|
    heating = range((D + 1) // 2 + 1, D + 1)  # |A| >= |B|, no new vertices
    heat, stall, best = 0, 0, (T.n, len(T.facets))

    def ready(size):
        if size == 1:
            faces = [frozenset([v]) for v in T.star if len(T.star[v]) == D + 1]
        else:
            faces = sorted(T.candidates(size), key=sorted)
        return [(A, B) for A in faces if (B := T.move_for(A)) is not None]

    for _ in range(max_rounds):
        if T.is_simplex_boundary():
            return Complex(T.facets, labels, maximal=True), trace
        move = None
        if heat == 0:
            for size in reducing:
                moves = ready(size)
                if moves:
                    move = moves[rng.randrange(len(moves))]
                    break
            if move is None:
                heat = rng.randint(1, 1 + stall // 20)
        if move is None:
            moves = [m for size in heating for m in ready(size)]
            if not moves:
                break
            move = moves[rng.randrange(len(moves))]
            heat -= 1
        A, B = move
        T.apply(A, B)
        trace.append((tuple(sorted(labels[v] for v in A)),
                      tuple(sorted(labels[v] for v in B))))
        now = (T.n, len(T.facets))
        if now < best:
            best, stall = now, 0
        else:
            stall += 1
    raise Inconclusive(f"no reduction within {max_rounds} rounds", trace)


# -- full pipeline -------------------------------------------------------

def _cycle_ok(K: Complex) -> bool:
    return K.dim == 1 and K.is_pure and bool(is_pseudomanifold(K))


def verify_sphere(K: Complex, seed: int = 0, max_rounds: int = DEFAULT_ROUNDS,
                  restarts: int = DEFAULT_RESTARTS, flips: bool = True,
                  _cache: dict | None = None) -> SphereCert:
    """Decide whether ``K`` is a triangulated sphere (see module docstring).

    With ``flips=False`` no bistellar search is run, so dimensions 3 and up
    end at ``HomologySphere`` at best. Links of complexes above dimension 4
    are checked this way, since the top verdict cannot exceed
    ``HomologySphere`` there anyway.
    """
    cache = {} if _cache is None else _cache
    flips = flips and K.dim <= MAX_FLIP_DIM
    key = (K.facets, flips)
    if key in cache:
        return cache[key]
    cert = _verify(K, seed, max_rounds, restarts, flips, cache)
    cache[key] = cert
    return cert


def _verify(K, seed, max_rounds, restarts, flips, cache) -> SphereCert:
    if not K.facets:
        return SphereCert(NOT_SPHERE, "empty complex")
    if not K.is_pure:
        return SphereCert(NOT_SPHERE, "complex is not pure")
    D = K.dim
    if D == -1:
        return SphereCert(CERTIFIED, "empty sphere")
    if D == 0:
        ok = K.n == 2
        return SphereCert(CERTIFIED if ok else NOT_SPHERE,
                          "two points" if ok else f"{K.n} points, expected 2", (K.n,))
    pm = is_pseudomanifold(K)
    if not pm:
        return SphereCert(NOT_SPHERE, pm.witness)
    if D == 1:
        return SphereCert(CERTIFIED, "connected cycle", (1, 1))
    chi = euler_characteristic(K)
    if chi != 1 + (-1) ** D:
        return SphereCert(NOT_SPHERE, f"Euler characteristic {chi}, expected {1 + (-1) ** D}")
    link_certs = {}
    worst = CERTIFIED
    for v in K.vertices:
        c = verify_sphere(link(K, frozenset([v])), seed, max_rounds, restarts, flips, cache)
        link_certs[K.label(v)] = c.verdict
        if c.verdict == NOT_SPHERE:
            return SphereCert(NOT_SPHERE, f"link of {K.label(v)}: {c.reason}", links=link_certs)
        if c.verdict == HOMOLOGY_SPHERE:
            worst = HOMOLOGY_SPHERE
    summary = {"certified": sum(x == CERTIFIED for x in link_certs.values()),
               "homology": sum(x == HOMOLOGY_SPHERE for x in link_certs.values())}
    if D == 2:
        # closed connected surface with chi = 2
        return SphereCert(CERTIFIED, "closed surface with Euler characteristic 2",
                          (1, 0, 1), summary)
    betti = betti_mod2(K)
    if betti != sphere_betti(D):
        return SphereCert(NOT_SPHERE, f"mod-2 Betti numbers {betti}", betti, summary)
    if not flips:
        return SphereCert(HOMOLOGY_SPHERE, f"dimension {D}: homology and links only",
                          betti, summary)
    last_len = None
    for attempt in range(restarts):
        try:
            _, trace = bistellar_reduce(K, max_rounds, seed + attempt)
        except Inconclusive as exc:
            last_len = len(exc.trace)
            continue
        if worst == CERTIFIED:
            return SphereCert(CERTIFIED, f"bistellar reduction in {len(trace)} flips",
                              betti, summary, len(trace))
        return SphereCert(HOMOLOGY_SPHERE, "reduced, but some links only homology spheres",
                          betti, summary, len(trace))
    return SphereCert(HOMOLOGY_SPHERE, "bistellar search inconclusive", betti, summary, last_len)


def join_certificate(*certs: SphereCert) -> SphereCert:
    """Verdict for a join of spheres from the verdicts of its factors.

    A join of PL spheres is a PL sphere and a join of homology spheres is a
    homology sphere, so the weakest factor decides. Suspensions are joins
    with a two-point factor.
    """
    if not certs:
        raise PreconditionFailed("join of no factors")
    if any(c.verdict == NOT_SPHERE for c in certs):
        raise PreconditionFailed("every factor must be a sphere")
    certified = all(c.verdict == CERTIFIED for c in certs)
    return SphereCert(CERTIFIED if certified else HOMOLOGY_SPHERE,
                      f"join of {len(certs)} factors, {'all certified' if certified else 'some only homology spheres'}")
