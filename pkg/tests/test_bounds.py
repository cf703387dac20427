from math import ceil

import pytest

from flagsphere.bounds import (alpha_max_formula, alpha_max_table, alpha_table, conjecture_formula,
                               f1_report, format_table, realize_2sphere, realize_3sphere_all,
                               planar_counting_check, power_lower_bound, join_upper_bound, witness_specs)
from flagsphere.complex import simplex_boundary
from flagsphere.constructions import build_W, build_W4_prime, crosspolytope, polygon_suspension
from flagsphere.errors import InvalidInput, PreconditionFailed


def test_conjecture_formula():
    assert conjecture_formula(3, 14) == 4
    assert conjecture_formula(4, 14) == 3
    assert conjecture_formula(2, 6) == 3
    for n in range(6, 31):
        assert conjecture_formula(3, n) == ceil(n / 4)
    for n in range(8, 31):
        assert conjecture_formula(4, n) == ceil((n + 1) / 6)
    with pytest.raises(InvalidInput):
        conjecture_formula(4, 7)


def test_upper_and_lower_bounds():
    assert join_upper_bound(8, 40) == 4
    assert join_upper_bound(4, 14) == 3
    assert abs(power_lower_bound(5, 16) - 16 ** (1 / 3) / 4) < 1e-12
    with pytest.raises(InvalidInput):
        join_upper_bound(3, 10)


def test_realizations_have_the_right_size():
    for n in range(6, 31):
        specs = realize_2sphere(n)
        assert specs and all(s.build().n == n for s in specs)
    for n in range(8, 31):
        specs = realize_3sphere_all(n)
        assert specs and all(s.build().n == n for s in specs)
    assert witness_specs(5, 9) == []


def test_alpha_tables():
    for row in alpha_table(3, range(6, 21)):
        assert row.construction_alpha == ceil(row.n / 4) == row.conj_value
    for row in alpha_table(4, range(8, 31)):
        assert row.construction_alpha == ceil((row.n + 1) / 6) == row.join_upper_bound
        assert row.lower_ok
    row = alpha_table(5, [16])[0]
    assert row.lower_ok and row.construction_alpha >= row.power_lower_bound


def test_format_table():
    text = format_table(alpha_table(4, [8, 9]))
    lines = text.splitlines()
    assert len(lines) == 3 and lines[0].split()[:3] == ["d", "n", "conj"]
    assert "Xp:k=1,j=0" in lines[1]


def test_alpha_max():
    assert alpha_max_formula(3, 10) == 4
    assert alpha_max_formula(2, 8) == 4
    assert alpha_max_formula(5, 14) == 4
    rows = alpha_max_table(3, range(6, 25))
    assert all(r.matches and r.proven_range for r in rows)
    row = alpha_max_table(5, [14])[0]
    assert row.alpha == 4 and not row.proven_range


def test_counting_check():
    rep = planar_counting_check(crosspolytope(3))
    assert (rep.stable_size, rep.cross_edges, rep.planar_bound) == (2, 8, 8)
    rep = planar_counting_check(polygon_suspension(3, 10))
    assert (rep.stable_size, rep.cross_edges, rep.planar_bound) == (4, 16, 16)
    rep = planar_counting_check(build_W(3, 3))
    assert rep.stable_size == 4 and rep.min_degree_sum == 16 and rep.planar_bound == 24
    assert rep.holds and rep.bipartite_planar
    with pytest.raises(PreconditionFailed):
        planar_counting_check(crosspolytope(4))
    with pytest.raises(PreconditionFailed):
        planar_counting_check(simplex_boundary("abcd"))


def test_f1_report():
    r = f1_report(crosspolytope(6), 6)
    assert (r["n"], r["f1"], r["excess"]) == (12, 60, -1)
    assert not r["meets_0987"]
    r = f1_report(build_W4_prime(4), 4)
    assert r["g2_ge_alpha"] and r["flag"]
    r = f1_report(simplex_boundary("abcde"), 4)
    assert r["g2"] == 0 and r["alpha"] == 1 and not r["flag"]
