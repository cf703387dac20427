import pytest

from flagsphere.complex import (clique_complex, crosspolytope_f_vector, euler_characteristic,
                                f_vector, from_facets, is_flag, join, link, parse_facets,
                                simplex, simplex_boundary, skeleton_graph, stellar_subdivide_edge,
                                stellar_subdivide_facet, suspension, write_facets, read_facets,
                                zero_sphere, point)
from flagsphere.constructions import build_W, build_W4_prime, crosspolytope, polygon
from flagsphere.errors import InvalidInput, NotAFace, NotAFacet
from flagsphere.graph import Graph, alpha_exact, is_stable

from oracles import f_vector_by_subsets


def octahedron():
    return crosspolytope(3)


def test_from_facets_triangle_boundary():
    K = from_facets([["a", "b"], ["b", "c"], ["c", "a"]])
    assert K.dim == 1 and len(K.facets) == 3
    assert f_vector(K) == (1, 3, 3)


def test_from_facets_rejects_empty():
    with pytest.raises(InvalidInput):
        from_facets([])
    with pytest.raises(InvalidInput):
        from_facets([["a"], []])


def test_non_maximal_faces_are_dropped():
    K = from_facets([["a", "b", "c"], ["a", "b"], ["c"]])
    assert len(K.facets) == 1


@pytest.mark.parametrize("K", [simplex("abc"), octahedron(), crosspolytope(4), build_W(3, 3),
                               build_W4_prime(2), from_facets([["a", "b"]])])
def test_f_vector_matches_subset_enumeration(K):
    assert f_vector(K) == f_vector_by_subsets(K.facets)


def test_f_vectors_of_small_examples():
    assert f_vector(simplex("abc")) == (1, 3, 3, 1)
    assert f_vector(octahedron()) == (1, 6, 12, 8)
    assert f_vector(crosspolytope(4)) == (1, 8, 24, 32, 16)
    assert f_vector(from_facets([["a", "b"]])) == (1, 2, 1)
    for d in range(1, 7):
        assert f_vector(crosspolytope(d)) == crosspolytope_f_vector(d)


def test_euler_characteristic():
    assert euler_characteristic(octahedron()) == 2
    assert euler_characteristic(crosspolytope(4)) == 0
    assert euler_characteristic(polygon(3)) == 0


def test_skeleton_graphs():
    G = skeleton_graph(simplex("xyz"))
    assert G.n == 3 and G.m == 3
    O = skeleton_graph(octahedron())
    assert O.n == 6 and O.m == 12 and all(O.degree(v) == 4 for v in range(6))
    # K_{2,2,2}: complement is a perfect matching
    comp = O.complement()
    assert comp.m == 3 and all(comp.degree(v) == 1 for v in range(6))
    W = build_W4_prime(2)
    assert skeleton_graph(W).m == f_vector_by_subsets(W.facets)[2] == 56


def test_clique_complex_examples():
    K4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)], list("abcd"))
    K = clique_complex(K4)
    assert len(K.facets) == 1 and K.dim == 3
    C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], list("abcd"))
    K = clique_complex(C4)
    assert K.dim == 1 and len(K.facets) == 4
    octa = clique_complex(skeleton_graph(build_W(3, 1)))
    assert len(octa.facets) == 8 and octa.dim == 2


def test_is_flag():
    assert is_flag(octahedron())
    assert not is_flag(simplex_boundary("abcd"))
    assert is_flag(build_W4_prime(3))


def test_links():
    O = octahedron()
    L = link(O, ["e_1^+"])
    assert L.dim == 1 and len(L.facets) == 4 and L.n == 4
    L = link(O, ["e_1^+", "e_2^+"])
    assert L.dim == 0 and L.n == 2
    W = build_W(3, 4)
    La = link(W, ["a"])
    assert len(La.facets) == 4 and set(La.ids) == {"y_1^1", "z_1^1", "y_2^1", "z_2^1"}
    with pytest.raises(NotAFace):
        link(O, ["e_1^+", "e_1^-"])
    top = next(iter(O.facets))
    assert f_vector(link(O, top)) == (1,)


def test_edge_subdivision():
    K = stellar_subdivide_edge(octahedron(), ["e_1^+", "e_2^+"], "v")
    assert f_vector(K) == (1, 7, 15, 10)
    assert euler_characteristic(K) == 2
    T = stellar_subdivide_edge(simplex("xyz"), ["x", "y"], "v")
    assert T.labelled_facets() == {frozenset("xvz"), frozenset("vyz")}
    with pytest.raises(NotAFace):
        stellar_subdivide_edge(octahedron(), ["e_1^+", "e_1^-"], "v")
    with pytest.raises(InvalidInput):
        stellar_subdivide_edge(octahedron(), ["e_1^+", "e_2^+"], "e_3^+")


def test_facet_subdivision():
    K = stellar_subdivide_facet(simplex_boundary("abcd"), ["a", "b", "c"], "v")
    f = f_vector(K)
    assert f[1] == 5 and f[3] == 6
    T = stellar_subdivide_facet(simplex("xyz"), ["x", "y", "z"], "v")
    assert len(T.facets) == 3 and all(T.ids["v"] in F for F in T.facets)
    with pytest.raises(NotAFacet):
        stellar_subdivide_facet(octahedron(), ["e_1^+", "e_2^+"], "v")


def test_subdividing_every_octahedron_facet():
    K = octahedron()
    for i, F in enumerate(sorted(K.facets, key=sorted)):
        K = stellar_subdivide_facet(K, F, f"s_{i}")
    G = skeleton_graph(K)
    new = [v for v in range(G.n) if G.labels[v].startswith("s_")]
    assert G.n == 14 and len(new) == 8 and is_stable(G, new)


def test_joins_and_suspensions():
    J = join(polygon(4, "a"), polygon(4, "b"))
    assert f_vector(J) == (1, 8, 24, 32, 16)
    cone = join(octahedron(), point("apex"))
    assert f_vector(cone) == (1, 7, 18, 20, 8)
    S = join(octahedron(), zero_sphere())
    assert S.n == 8 and S.dim == 3
    assert f_vector(suspension(polygon(4))) == f_vector(octahedron())
    hexsusp = suspension(polygon(6))
    assert hexsusp.n == 8 and is_flag(hexsusp)
    assert alpha_exact(skeleton_graph(hexsusp)).size == 3
    assert f_vector(suspension(suspension(polygon(4)))) == crosspolytope_f_vector(4)


def test_join_label_collisions_are_suffixed():
    J = join(polygon(4), polygon(4))
    assert J.n == 8 and "c_1#L" in J.ids and "c_1#R" in J.ids


def test_relabel_and_equality():
    K = octahedron()
    P = K.renumber(reversed(K.vertices))
    assert P == K and hash(P) == hash(K)
    assert K.relabel({"e_1^+": "top"}) != K


def test_facets_round_trip(tmp_path):
    K = build_W(3, 3)
    path = tmp_path / "w.facets"
    write_facets(K, path, header="W:d=3,k=3")
    text = path.read_text()
    assert text.startswith("# W:d=3,k=3\n")
    assert read_facets(path) == K
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    assert lines == sorted(lines, key=str.split)
    assert all(l.split() == sorted(l.split()) for l in lines)


def test_parse_facets_reports_line_numbers():
    with pytest.raises(InvalidInput, match=r"<string>:3"):
        parse_facets("a b c\n# comment\nb b\n")
    with pytest.raises(InvalidInput):
        parse_facets("# nothing\n\n")
    K = parse_facets("c b a\n\n b c d \n")
    assert f_vector(K) == (1, 4, 5, 2)
