import random
from fractions import Fraction

import numpy as np
import pytest

from flagsphere.complex import simplex, simplex_boundary, skeleton_graph
from flagsphere.constructions import (ConstructionSpec, build_W4_prime, crosspolytope,
                                      polygon_suspension)
from flagsphere.errors import DimMismatch, InvalidInput, PreconditionFailed
from flagsphere.graph import Graph
from flagsphere.rigidity import (PRIME_LOW, conditional_threshold, full_rank, g2, generic_rank,
                                 generic_rank_report, lbt_threshold, random_prime, rank_mod_p,
                                 rigidity_matrix, rigidity_probe, stress_inequality_check)

from oracles import float_rigidity_rank


def test_single_edge_matrix():
    G = Graph(2, [(0, 1)])
    M = rigidity_matrix(G, 1, [[0], [1]])
    assert M.tolist() == [[-1, 1]]
    assert rank_mod_p(M, 101) == 1


def test_missing_coordinates():
    with pytest.raises(InvalidInput):
        rigidity_matrix(Graph(2, [(0, 1)]), 2, [[0, 0]])
    with pytest.raises(InvalidInput):
        rigidity_matrix(Graph(2, [(0, 1)]), 2, [[0, 0], [1]])


def test_rank_mod_p_against_numpy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A = rng.integers(-5, 6, size=(rng.integers(1, 8), rng.integers(1, 8)))
        assert rank_mod_p(A.astype(object), 1_000_003) == np.linalg.matrix_rank(A.astype(float))


def test_prime_range():
    p = random_prime(random.Random(0))
    assert PRIME_LOW <= p < 2 * PRIME_LOW


def test_small_frameworks():
    tri = skeleton_graph(simplex("abc"))
    assert generic_rank(tri, 2) == 3 == full_rank(3, 2)
    path = Graph(3, [(0, 1), (1, 2)])
    assert generic_rank(path, 2) == 2 < full_rank(3, 2)
    octa = skeleton_graph(crosspolytope(3))
    assert generic_rank(octa, 3) == 12 == 3 * 6 - 6
    K6 = skeleton_graph(simplex([str(i) for i in range(6)]))
    assert rigidity_probe(K6, 5)


@pytest.mark.parametrize("spec", ["cross:d=3", "cross:d=4", "Wp:k=2", "Xp:k=2,j=1", "W:d=3,k=3",
                                  "polysusp:d=5,n=14"])
def test_modular_rank_matches_float_rank(spec):
    s = ConstructionSpec.parse(spec)
    G = skeleton_graph(s.build())
    for d in (s.dim, s.dim + 1):
        assert generic_rank(G, d, seed=1, trials=2) == float_rigidity_rank(G.n, G.edges(), d)


def test_failure_bound_and_trials():
    G = skeleton_graph(build_W4_prime(2))
    rep = generic_rank_report(G, 4, seed=0, trials=3)
    assert rep.rank == 4 * 14 - 10 == 46
    assert len(set(rep.primes)) == 3 and rep.failure_bound < 1e-40
    assert generic_rank_report(G, 4, seed=0, trials=3) == rep
    with pytest.raises(InvalidInput):
        generic_rank_report(G, 4, trials=0)


def test_g2():
    assert g2(crosspolytope(4), 4) == 2 == 4 * (4 - 3) // 2
    assert g2(crosspolytope(3), 3) == 0
    assert g2(simplex_boundary("abcde"), 4) == 0
    with pytest.raises(DimMismatch):
        g2(crosspolytope(3), 4)


def test_thresholds_are_exact():
    assert lbt_threshold(4) == Fraction(987, 9000)
    assert conditional_threshold(4) == Fraction(1, 6)


def test_stress_check_on_w4_prime():
    K = build_W4_prime(3)
    r = stress_inequality_check(K, 4)
    assert r.n == 20 and r.alpha_witness == 4 and r.g2 >= 4
    assert r.verdicts["generically_d_rigid"] and r.verdicts["stress_dim_eq_g2"]
    assert r.stress_dim == r.f1 - (4 * 20 - 10) == r.g2
    j = r.to_json()
    assert isinstance(j["edge_excess"], str)


def test_stress_check_preconditions():
    with pytest.raises(PreconditionFailed):
        stress_inequality_check(crosspolytope(3), 3)
    with pytest.raises(PreconditionFailed):
        stress_inequality_check(crosspolytope(4), 5)
    with pytest.raises(PreconditionFailed):
        stress_inequality_check(simplex_boundary("abcde"), 4)


def test_d_plus_one_probe():
    assert not rigidity_probe(crosspolytope(3), 4)
    assert not rigidity_probe(crosspolytope(4), 5)
    r = stress_inequality_check(polygon_suspension(5, 14), 5, probe_r=6)
    assert r.probe["r"] == 6 and r.verdicts["d_plus_1_rigid"] in (True, False)
