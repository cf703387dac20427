import pytest

from flagsphere.complex import from_facets, is_flag, simplex_boundary, stellar_subdivide_edge
from flagsphere.constructions import (ConstructionSpec, build_W, build_W4_prime, crosspolytope,
                                      join_upper_factors, polygon, torus7)
from flagsphere.errors import Inconclusive, NotPure, PreconditionFailed
from flagsphere.verify import (CERTIFIED, HOMOLOGY_SPHERE, NOT_SPHERE, betti_mod2,
                               bistellar_reduce, gf2_rank, is_pseudomanifold, join_certificate,
                               verify_sphere)


def two_triangles():
    return from_facets([["a", "b", "c"], ["b", "c", "d"]])


def test_pseudomanifold():
    assert is_pseudomanifold(crosspolytope(3))
    check = is_pseudomanifold(two_triangles())
    assert not check and "lies in 1 facet" in check.witness
    assert is_pseudomanifold(build_W4_prime(3))
    with pytest.raises(NotPure):
        is_pseudomanifold(from_facets([["a", "b", "c"], ["c", "d"]]))
    # two disjoint octahedra: every ridge fine, dual graph disconnected
    O = crosspolytope(3)
    P = O.relabel({s: s + "'" for s in O.ids})
    both = from_facets(O.sorted_facet_labels() + P.sorted_facet_labels())
    assert "disconnected" in is_pseudomanifold(both).witness


def test_gf2_rank():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0
    assert gf2_rank([1, 2, 4, 7]) == 3


def test_betti_numbers():
    assert betti_mod2(crosspolytope(3)) == (1, 0, 1)
    assert betti_mod2(crosspolytope(4)) == (1, 0, 0, 1)
    assert betti_mod2(torus7()) == (1, 2, 1)
    assert betti_mod2(polygon(5)) == (1, 1)


def test_bistellar_reductions():
    for K, D in [(crosspolytope(3), 2), (build_W(3, 5), 2), (build_W4_prime(4), 3)]:
        R, trace = bistellar_reduce(K)
        assert R.n == D + 2 and len(R.facets) == D + 2
        assert len(trace) >= K.n - (D + 2)
    with pytest.raises(PreconditionFailed):
        bistellar_reduce(two_triangles())
    with pytest.raises(Inconclusive) as info:
        bistellar_reduce(build_W4_prime(3), max_rounds=2)
    assert len(info.value.trace) == 2


def test_verify_examples():
    for k in (1, 4, 10):
        assert verify_sphere(build_W(3, k)).verdict == CERTIFIED
    cert = verify_sphere(build_W(4, 2))
    assert cert.verdict == NOT_SPHERE and "ridge" in cert.reason
    bd = simplex_boundary("abcd")
    assert verify_sphere(bd).verdict == CERTIFIED and not is_flag(bd)
    assert verify_sphere(two_triangles()).verdict == NOT_SPHERE
    t = verify_sphere(torus7())
    assert t.verdict == NOT_SPHERE and "Euler" in t.reason
    assert verify_sphere(from_facets([["a"], ["b"]])).verdict == CERTIFIED
    assert verify_sphere(from_facets([["a"], ["b"], ["c"]])).verdict == NOT_SPHERE
    assert verify_sphere(polygon(6)).verdict == CERTIFIED


def test_verify_three_and_four_spheres():
    assert verify_sphere(build_W4_prime(3)).verdict == CERTIFIED
    assert verify_sphere(crosspolytope(5)).verdict == CERTIFIED


def test_high_dimension_stops_at_homology():
    cert = verify_sphere(crosspolytope(6))
    assert cert.verdict == HOMOLOGY_SPHERE and cert.betti == (1, 0, 0, 0, 0, 1)


def test_suspended_torus_is_rejected():
    from flagsphere.complex import suspension
    cert = verify_sphere(suspension(torus7()))
    assert cert.verdict == NOT_SPHERE and "Euler characteristic 2" in cert.reason


def test_non_manifold_joined_at_a_vertex():
    O = crosspolytope(3)
    P = O.relabel({s: s + "'" for s in O.ids if s != "e_1^+"})
    wedge = from_facets(O.sorted_facet_labels() + P.sorted_facet_labels())
    assert verify_sphere(wedge).verdict == NOT_SPHERE


def test_subdivision_keeps_sphere():
    K = stellar_subdivide_edge(build_W4_prime(2), ["a", "y_1^1"], "v")
    assert verify_sphere(K).verdict == CERTIFIED


def test_join_certificate():
    parts = [verify_sphere(F) for F in join_upper_factors(8, 24)]
    assert join_certificate(*parts).verdict == CERTIFIED
    homology = verify_sphere(crosspolytope(6))
    assert join_certificate(parts[0], homology).verdict == HOMOLOGY_SPHERE
    with pytest.raises(PreconditionFailed):
        join_certificate(parts[0], verify_sphere(torus7()))
    with pytest.raises(PreconditionFailed):
        join_certificate()
    spec = ConstructionSpec.parse("polysusp:d=5,n=12")
    assert len(spec.factors()) == 4


def test_cert_json_is_stable():
    a = verify_sphere(build_W(3, 3)).to_json()
    b = verify_sphere(build_W(3, 3)).to_json()
    assert a == b and a["verdict"] == CERTIFIED and a["betti"] == [1, 0, 1]
