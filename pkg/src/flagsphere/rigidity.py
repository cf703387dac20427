"""Generic rigidity of sphere graphs and the stress count.

Ranks are computed over GF(p) for a random prime p between 2^61 and 2^62,
at uniformly random coordinates. A rank deficit caused by unlucky
coordinates has probability at most ``rank / (p - 1)`` per trial
(Schwartz-Zippel applied to one nonvanishing maximal minor), and the
reported rank is the maximum over independent trials.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import numpy as np
from sympy import nextprime

from .complex import Complex, f_vector, is_flag, skeleton_graph
from .errors import DimMismatch, InvalidInput, PreconditionFailed
from .graph import Graph, alpha_exact

PRIME_LOW = 2 ** 61


def rigidity_matrix(G: Graph, d: int, coords: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
                    p: int | None = None) -> np.ndarray:
    """``m x dn`` matrix with row ``(p_u - p_v)`` in u's block and
    ``(p_v - p_u)`` in v's block for each edge ``uv`` (u < v).

    Entries are Python integers (object dtype); reduced mod ``p`` if given.
    """
    pts = {}
    for v in range(G.n):
        try:
            c = coords[v]
        except (KeyError, IndexError):
            raise InvalidInput(f"no coordinates for vertex {G.labels[v]}") from None
        if len(c) != d:
            raise InvalidInput(f"vertex {G.labels[v]} has {len(c)} coordinates, expected {d}")
        pts[v] = [int(x) for x in c]
    edges = G.edges()
    M = np.zeros((len(edges), d * G.n), dtype=object)
    for row, (u, v) in enumerate(edges):
        for i in range(d):
            diff = pts[u][i] - pts[v][i]
            M[row, d * u + i] = diff
            M[row, d * v + i] = -diff
    if p is not None:
        M %= p
    return M


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination."""
    A = np.array(M, dtype=object) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = A[r:, c]
        nz = np.flatnonzero(col != 0)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c] != 0)
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r


def random_prime(rng: random.Random) -> int:
    return int(nextprime(rng.randrange(PRIME_LOW, 2 * PRIME_LOW)))


@dataclass
class GenericRank:
    rank: int
    primes: list[int]
    trial_ranks: list[int]
    failure_bound: float  # chance that the true generic rank is larger

    def __int__(self):
        return self.rank


def generic_rank_report(G: Graph, d: int, seed: int = 0, trials: int = 1) -> GenericRank:
    if trials < 1:
        raise InvalidInput("trials must be >= 1")
    primes, ranks = [], []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")  # one independent stream per trial
        p = random_prime(rng)
        coords = [[rng.randrange(1, p) for _ in range(d)] for _ in range(G.n)]
        ranks.append(rank_mod_p(rigidity_matrix(G, d, coords, p), p))
        primes.append(p)
    rank = max(ranks)
    bound = 1.0
    for p in primes:
        bound *= min(1.0, rank / (p - 1))
    return GenericRank(rank, primes, ranks, bound)


def generic_rank(G: Graph, d: int, seed: int = 0, trials: int = 1) -> int:
    """Monte Carlo generic rank of the d-dimensional rigidity matrix."""
    return generic_rank_report(G, d, seed, trials).rank


def full_rank(n: int, d: int) -> int:
    """Rank of a generically d-rigid graph on n vertices."""
    if n <= d + 1:
        return comb(n, 2)
    return d * n - comb(d + 1, 2)


def g2(K: Complex, d: int) -> int:
    """``f_1 - d f_0 + C(d+1, 2)`` for a pure (d-1)-dimensional complex."""
    if K.dim != d - 1 or not K.is_pure:
        raise DimMismatch(f"expected a pure {d - 1}-dimensional complex, got dim {K.dim}")
    f = f_vector(K)
    return f[2] - d * f[1] + comb(d + 1, 2)


def lbt_threshold(d: int) -> Fraction:
    """Edge excess per vertex, ``0.987 / (2d + 1)``."""
    return Fraction(987, 1000) / (2 * d + 1)


def conditional_threshold(d: int) -> Fraction:
    """``1 / (2d - 2)``: the excess that would follow from the alpha conjecture."""
    return Fraction(1, 2 * d - 2)


@dataclass
class RigidityReport:
    d: int
    n: int
    f1: int
    rank: int
    expected_rank: int
    stress_dim: int
    g2: int
    alpha_witness: int
    failure_bound: float
    edge_excess: Fraction
    verdicts: dict = field(default_factory=dict)
    probe: dict | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        out["edge_excess"] = str(self.edge_excess)
        return out


def stress_inequality_check(K: Complex, d: int, seed: int = 0, trials: int = 3,
                            probe_r: int | None = None, check_flag: bool = True) -> RigidityReport:
    """Rank, stress dimension, g2 and alpha of a flag (d-1)-sphere.

    ``stress_ge_alpha`` is the counted consequence of the per-vertex stresses
    (one per vertex of a stable set, linearly independent). The edge-count
    inequality ``f1 >= (d + 0.987/(2d+1)) n`` is recorded but, as it needs
    ``n`` large, never treated as a failure.
    """
    if d < 4:
        raise PreconditionFailed("stress count needs d >= 4")
    if K.dim != d - 1 or not K.is_pure:
        raise PreconditionFailed(f"expected a pure {d - 1}-dimensional complex")
    if check_flag and not is_flag(K):
        raise PreconditionFailed("complex is not flag")
    G = skeleton_graph(K)
    gr = generic_rank_report(G, d, seed, trials)
    expected = full_rank(G.n, d)
    gg = g2(K, d)
    a = alpha_exact(G).size
    stress_dim = G.m - gr.rank
    excess = Fraction(G.m, G.n) - d
    verdicts = {
        "generically_d_rigid": gr.rank == expected,
        "stress_dim_eq_g2": stress_dim == gg,
        "stress_ge_alpha": gg >= a,
        "rank_within_trivial_bound": gr.rank <= min(G.m, expected),
        "edge_bound_0987": excess >= lbt_threshold(d),
        "edge_bound_conditional": excess >= conditional_threshold(d),
        "seeds_agree": len(set(gr.trial_ranks)) == 1,
    }
    probe = None
    if probe_r is not None:
        pr = generic_rank_report(G, probe_r, seed + 1, trials)
        probe = {"r": probe_r, "rank": pr.rank, "expected_rank": full_rank(G.n, probe_r),
                 "rigid": pr.rank == full_rank(G.n, probe_r)}
        verdicts["d_plus_1_rigid"] = probe["rigid"] if probe_r == d + 1 else None
    return RigidityReport(d, G.n, G.m, gr.rank, expected, stress_dim, gg, a,
                          gr.failure_bound, excess, verdicts, probe)


def rigidity_probe(K: Complex, r: int, seed: int = 0, trials: int = 2) -> bool:
    """Whether the 1-skeleton of ``K`` is generically r-rigid."""
    G = skeleton_graph(K) if isinstance(K, Complex) else K
    return generic_rank(G, r, seed, trials) == full_rank(G.n, r)
