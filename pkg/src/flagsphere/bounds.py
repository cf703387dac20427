"""Bound tables for the minimum and maximum stable-set numbers of flag spheres.

``alpha(d, n)`` is the smallest alpha over graphs of n-vertex flag
(d-1)-spheres, ``alpha_M(d, n)`` the largest. Both quantify over every flag
sphere, so the tables here only evaluate the formulas and the generated
witnesses; they do not prove the universal statements.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .complex import Complex, is_flag, skeleton_graph
from .constructions import ConstructionSpec, realize_3sphere
from .errors import InvalidInput, InvalidSpec, PreconditionFailed
from .graph import alpha_exact, meets_power_bound, turan_stable
from .rigidity import conditional_threshold, g2, lbt_threshold
from .verify import CERTIFIED, verify_sphere


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def conjecture_formula(d: int, n: int) -> int:
    """Conjectured minimum ``ceil((n + d - 3) / (2(d - 1)))``."""
    if d < 2 or n < 2 * d:
        raise InvalidInput(f"need d >= 2 and n >= 2d (got d={d}, n={n})")
    return _ceil_div(n + d - 3, 2 * (d - 1))


def join_upper_bound(d: int, n: int) -> int:
    """Upper bound from joining copies of the best flag 3-spheres."""
    if d < 4 or n < 2 * d:
        raise InvalidInput(f"need d >= 4 and n >= 2d (got d={d}, n={n})")
    return _ceil_div(_ceil_div(n, d // 4) + 1, 6)


def power_lower_bound(d: int, n: int) -> float:
    """``n^(1/(d-2)) / 4`` as a float (comparisons use :func:`meets_power_bound`)."""
    if d < 4:
        raise InvalidInput("lower bound is stated for d >= 4")
    return n ** (1 / (d - 2)) / 4


def alpha_max_formula(d: int, n: int) -> int:
    """Conjectured maximum ``floor((n - 2(d - 2)) / 2)``."""
    return (n - 2 * (d - 2)) // 2


def realize_2sphere(n: int) -> list[ConstructionSpec]:
    """All X(3,k,j) / Y(3,k,j) instances with exactly ``n`` vertices."""
    out = []
    for j in range(0, 3):
        k, r = divmod(n - 2 - j, 4)
        if r == 0 and k >= 1:
            out.append(ConstructionSpec("X", {"d": 3, "k": k, "j": j}))
    for j in range(1, 3):
        k, r = divmod(n - 4 - j, 4)
        if r == 0 and k >= 1:
            out.append(ConstructionSpec("Y", {"d": 3, "k": k, "j": j}))
    return out


def realize_3sphere_all(n: int) -> list[ConstructionSpec]:
    """All X'(4,k,j) / Y'(4,k,j) instances with exactly ``n`` vertices."""
    out = []
    for j in range(0, 4):
        k, r = divmod(n - 2 - j, 6)
        if r == 0 and k >= 1:
            out.append(ConstructionSpec("X4prime", {"k": k, "j": j}))
    for j in range(1, 4):
        k, r = divmod(n - 5 - j, 6)
        if r == 0 and k >= 1:
            out.append(ConstructionSpec("Y4prime", {"k": k, "j": j}))
    return out


def witness_specs(d: int, n: int) -> list[ConstructionSpec]:
    """Candidate low-alpha constructions for ``(d, n)``."""
    if n < 2 * d:
        return []
    if d == 2:
        return [ConstructionSpec("PolygonSuspension", {"d": 2, "n": n})]
    if d == 3:
        return realize_2sphere(n)
    if d == 4:
        fam, k, j = realize_3sphere(n)
        return [ConstructionSpec(fam, {"k": k, "j": j})]
    return [ConstructionSpec("JoinUpper", {"d": d, "n": n})]


@dataclass
class BoundRow:
    d: int
    n: int
    conj_value: int | None
    construction_alpha: int | None
    join_upper_bound: int | None
    power_lower_bound: float | None
    lower_ok: bool | None
    witness_spec: str | None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def alpha_row(d: int, n: int) -> BoundRow:
    conj = conjecture_formula(d, n) if n >= 2 * d else None
    upper = join_upper_bound(d, n) if d >= 4 and n >= 2 * d else None
    lower = power_lower_bound(d, n) if d >= 4 else None
    best, best_spec = None, None
    try:
        specs = witness_specs(d, n)
    except InvalidSpec:
        specs = []
    for spec in specs:
        a = alpha_exact(skeleton_graph(spec.build())).size
        if best is None or a < best:
            best, best_spec = a, str(spec)
    lower_ok = meets_power_bound(best, n, d) if (d >= 4 and best is not None) else None
    return BoundRow(d, n, conj, best, upper, lower, lower_ok, best_spec)


def alpha_table(d: int, n_range) -> list[BoundRow]:
    """One row per ``n``; cells without a witness are left empty."""
    return [alpha_row(d, n) for n in n_range]


@dataclass
class MaxRow:
    d: int
    n: int
    formula: int
    alpha: int
    matches: bool
    proven_range: bool  # d in {2, 3}


def alpha_max_table(d: int, n_range) -> list[MaxRow]:
    """alpha of the (d-2)-fold suspended polygon against ``floor((n-2(d-2))/2)``.

    Equality is asserted where it is a theorem (d <= 3) and recorded otherwise.
    """
    rows = []
    for n in n_range:
        spec = ConstructionSpec("PolygonSuspension", {"d": d, "n": n})
        a = alpha_exact(skeleton_graph(spec.build())).size
        f = alpha_max_formula(d, n)
        row = MaxRow(d, n, f, a, a == f, d <= 3)
        if row.proven_range:
            assert row.matches, f"alpha_M mismatch at d={d}, n={n}: {a} != {f}"
        rows.append(row)
    return rows


@dataclass
class CountingReport:
    n: int
    stable_size: int
    cross_edges: int
    min_degree_sum: int  # 4 |I|
    planar_bound: int  # 2n - 4
    bipartite_planar: bool
    holds: bool
    conclusion: int  # floor((n - 2) / 2)


def planar_counting_check(K: Complex, cert=None) -> CountingReport:
    """Double count the edges leaving a maximum stable set of a flag 2-sphere.

    Each vertex of I keeps its full degree (at least 4 by flagness) in the
    bipartite subgraph B of edges with one end in I, and B is planar with
    both sides of size at least 2, so ``4|I| <= |B| <= 2n - 4``.
    """
    if K.dim != 2:
        raise PreconditionFailed("needs a 2-dimensional complex")
    cert = cert if cert is not None else verify_sphere(K)
    if cert.verdict != CERTIFIED or not is_flag(K):
        raise PreconditionFailed("needs a certified flag 2-sphere")
    G = skeleton_graph(K)
    I = alpha_exact(G).vertices
    B = [(u, v) for u, v in G.edges() if (u in I) != (v in I)]
    assert len(B) == sum(G.degree(v) for v in I)
    H = nx.Graph(B)
    planar_bip = nx.is_bipartite(H) and nx.check_planarity(H)[0]
    holds = 4 * len(I) <= len(B) <= 2 * G.n - 4 and planar_bip
    report = CountingReport(G.n, len(I), len(B), 4 * len(I), 2 * G.n - 4, planar_bip,
                            holds, (G.n - 2) // 2)
    if holds:
        assert len(I) <= report.conclusion
    return report


def f1_report(K: Complex, d: int) -> dict:
    """Edge-count observations for a pure (d-1)-dimensional complex.

    The thresholds need ``n`` large; nothing here is asserted.
    """
    gg = g2(K, d)
    G = skeleton_graph(K)
    excess = Fraction(G.m, G.n) - d
    a = alpha_exact(G).size
    return {
        "d": d, "n": G.n, "f1": G.m,
        "excess": excess,
        "threshold_0987": lbt_threshold(d),
        "threshold_conditional": conditional_threshold(d),
        "meets_0987": excess >= lbt_threshold(d),
        "meets_conditional": excess >= conditional_threshold(d),
        "g2": gg, "alpha": a, "g2_ge_alpha": gg >= a,
        "turan_size": turan_stable(G).size,
        "flag": is_flag(K),
    }


def format_table(rows: list[BoundRow]) -> str:
    head = ["d", "n", "conj", "alpha", "upper", "lower", "witness"]
    body = []
    for r in rows:
        body.append([str(r.d), str(r.n), _cell(r.conj_value), _cell(r.construction_alpha),
                     _cell(r.join_upper_bound),
                     "-" if r.power_lower_bound is None else f"{r.power_lower_bound:.3f}",
                     r.witness_spec or "infeasible"])
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(head, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in body]
    return "\n".join(lines)


def _cell(x) -> str:
    return "-" if x is None else str(x)

