"""Parametrised families of flag spheres (and a few non-flag companions).

Vertex labels:

* ``a``, ``b`` -- the two poles of ``W_{d,k}``;
* ``y_s^i``, ``z_s^i`` -- the antipodal pair ``s`` of crosspolytope layer ``i``;
* ``u_j`` / ``w_j`` -- vertices created by subdividing ``a y_j^1`` / ``b y_j^k``;
* ``c_i`` -- polygon and cyclic-polytope vertices, ``p_i``/``q_i`` suspension apexes;
* ``e_i^+``/``e_i^-`` -- crosspolytope vertices, ``s_i`` facet-subdivision vertices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .complex import (Complex, clique_complex, from_facets, join, skeleton_graph,
                      stellar_subdivide_edge, stellar_subdivide_facet, suspension)
from .errors import InvalidSpec
from .graph import Graph


def y(s: int, i: int) -> str:
    return f"y_{s}^{i}"


def z(s: int, i: int) -> str:
    return f"z_{s}^{i}"


def layer(d: int, i: int) -> list[str]:
    return [y(s, i) for s in range(1, d)] + [z(s, i) for s in range(1, d)]


def _check(cond: bool, msg: str):
    if not cond:
        raise InvalidSpec(msg)


def _labelled_graph(labels: list[str], edges) -> Graph:
    pos = {s: i for i, s in enumerate(labels)}
    return Graph(len(labels), {tuple(sorted((pos[u], pos[v]))) for u, v in edges}, labels)


def w_edges(d: int, k: int) -> set[frozenset]:
    """Edge set of the graph W_{d,k}, as label pairs."""
    E = set()
    for v in layer(d, 1):
        E.add(frozenset(("a", v)))
    for v in layer(d, k):
        E.add(frozenset(("b", v)))
    for i in range(1, k + 1):
        for u, v in combinations(layer(d, i), 2):
            E.add(frozenset((u, v)))
        for s_ in range(1, d):
            E.discard(frozenset((y(s_, i), z(s_, i))))
    for i in range(1, k):
        for s in range(1, d):
            for t in range(1, d):
                if t >= s:  # positive pair
                    E.add(frozenset((y(s, i), y(t, i + 1))))
                    E.add(frozenset((z(s, i), z(t, i + 1))))
                else:  # negative pair
                    E.add(frozenset((y(s, i), z(t, i + 1))))
                    E.add(frozenset((z(s, i), y(t, i + 1))))
    return E


def w_labels(d: int, k: int) -> list[str]:
    labels = ["a", "b"]
    for i in range(1, k + 1):
        labels += layer(d, i)
    return labels


def w_graph(d: int, k: int) -> Graph:
    _check(d >= 2 and k >= 1, f"W needs d>=2, k>=1 (got d={d}, k={k})")
    return _labelled_graph(w_labels(d, k), w_edges(d, k))


def build_W(d: int, k: int) -> Complex:
    """Clique complex of W_{d,k}."""
    return clique_complex(w_graph(d, k))


def build_X(d: int, k: int, j: int) -> Complex:
    """cl(W_{d,k}) with the edges a y_1^1, ..., a y_j^1 subdivided in order."""
    _check(d >= 2 and k >= 1 and 0 <= j <= d - 1,
           f"X needs d>=2, k>=1, 0<=j<=d-1 (got d={d}, k={k}, j={j})")
    K = build_W(d, k)
    for t in range(1, j + 1):
        K = stellar_subdivide_edge(K, ("a", y(t, 1)), f"u_{t}")
    return K


def build_Y(d: int, k: int, j: int) -> Complex:
    """X''(d,k,d-1) with the edges b y_1^k, ..., b y_j^k subdivided in order."""
    _check(d >= 3 and k >= 1 and 1 <= j <= d - 1,
           f"Y needs d>=3, k>=1, 1<=j<=d-1 (got d={d}, k={k}, j={j})")
    K = build_X(d, k, d - 1)
    for t in range(1, j + 1):
        K = stellar_subdivide_edge(K, ("b", y(t, k)), f"w_{t}")
    return K


def prism_diagonals(k: int) -> list[tuple[str, str]]:
    """The two bent edges per consecutive layer pair that triangulate the
    exceptional prisms of W_{4,k}."""
    out = []
    for i in range(1, k):
        out.append((y(1, i), z(2, i + 1)))
        out.append((z(1, i), y(2, i + 1)))
    return out


def _add_diagonals(K: Complex, k: int) -> Complex:
    G = skeleton_graph(K)
    edges = set(G.edges())
    for u, v in prism_diagonals(k):
        edges.add(tuple(sorted((G.index[u], G.index[v]))))
    return clique_complex(Graph(G.n, edges, G.labels))


def build_W4_prime(k: int) -> Complex:
    _check(k >= 1, f"W' needs k>=1 (got {k})")
    return _add_diagonals(build_W(4, k), k)


def build_X4_prime(k: int, j: int) -> Complex:
    _check(k >= 1 and 0 <= j <= 3, f"X' needs k>=1, 0<=j<=3 (got k={k}, j={j})")
    return _add_diagonals(build_X(4, k, j), k)


def build_Y4_prime(k: int, j: int) -> Complex:
    _check(k >= 1 and 1 <= j <= 3, f"Y' needs k>=1, 1<=j<=3 (got k={k}, j={j})")
    return _add_diagonals(build_Y(4, k, j), k)


def n_X(d: int, k: int, j: int) -> int:
    return 2 + j + k * (2 * d - 2)


def n_Y(d: int, k: int, j: int) -> int:
    return 2 + (d - 1) + j + k * (2 * d - 2)


def alpha_X(d: int, k: int, j: int) -> int:
    """Closed form (n - 2 - j)/(2d - 2) + 1, equal to k + 1."""
    q, r = divmod(n_X(d, k, j) - 2 - j, 2 * d - 2)
    assert r == 0
    return q + 1


def alpha_Y(d: int, k: int, j: int) -> int:
    """Closed form (n - 2 + (d - 1 - j))/(2d - 2) + 1, equal to k + 2."""
    q, r = divmod(n_Y(d, k, j) - 2 + (d - 1 - j), 2 * d - 2)
    assert r == 0
    return q + 1


def stable_set_X(d: int, k: int, j: int) -> set[str]:
    """Explicit stable set of size k+1 in X(d,k,j)."""
    S = {v for i in range(1, k + 1, 2) for v in (y(1, i), z(1, i))}
    if k % 2 == 0:
        S.add("b")
    return S


def stable_set_Y(d: int, k: int, j: int) -> set[str]:
    """Explicit stable set of size k+2 in Y(d,k,j).

    ``a`` with ``y_1^1, z_1^2, y_1^3, ...``; the last layer then meets the
    stable set in ``z_1^k`` (k even, completed by ``w_1``) or in ``y_1^k``
    (k odd, completed by ``b``, whose edge to ``y_1^k`` was subdivided).
    """
    S = {"a", "w_1" if k % 2 == 0 else "b"}
    for i in range(1, k + 1):
        S.add(y(1, i) if i % 2 == 1 else z(1, i))
    return S


def realize_3sphere(n: int) -> tuple[str, int, int]:
    """(family, k, j) of the X'/Y' flag 3-sphere on exactly ``n`` vertices."""
    _check(n >= 8, f"no X'/Y' flag 3-sphere on {n} < 8 vertices")
    k, j = divmod(n - 2, 6)
    if j <= 3:
        return "X4prime", k, j
    # residues 0 and 1 mod 6 come from Y'(4,k,j) with n = 5 + j + 6k
    k, j = divmod(n - 5, 6)
    assert 1 <= j <= 3 and k >= 1, (n, k, j)
    return "Y4prime", k, j


def crosspolytope(d: int) -> Complex:
    """Boundary of the d-dimensional crosspolytope."""
    _check(d >= 1, "crosspolytope needs d>=1")
    pairs = [(f"e_{i}^+", f"e_{i}^-") for i in range(1, d + 1)]
    facets = [[]]
    for p in pairs:
        facets = [f + [x] for f in facets for x in p]
    return from_facets(facets)


def polygon(n: int, prefix: str = "c") -> Complex:
    _check(n >= 3, "polygon needs at least 3 vertices")
    return from_facets([[f"{prefix}_{i}", f"{prefix}_{i % n + 1}"] for i in range(1, n + 1)])


def polygon_suspension(d: int, n: int) -> Complex:
    """(d-2)-fold suspension of the (n - 2(d-2))-gon."""
    L = n - 2 * (d - 2)
    _check(d >= 2, "polygon suspension needs d>=2")
    _check(L >= 4, f"polygon of length {L} < 4 is not flag (d={d}, n={n})")
    K = polygon(L)
    for _ in range(d - 2):
        K = suspension(K)
    return K


def join_upper_plan(d: int, n: int) -> tuple[int, list[int]]:
    """Suspension count r and 3-sphere sizes for the join construction."""
    _check(d >= 4, "join construction needs d>=4")
    m, r = divmod(d, 4)
    rest = n - 2 * r
    _check(rest >= 8 * m, f"n={n} too small for {m} flag 3-spheres and {r} suspensions")
    base, extra = divmod(rest, m)
    sizes = [base + 1] * extra + [base] * (m - extra)
    return r, sizes


def build_3sphere(size: int) -> Complex:
    fam, k, j = realize_3sphere(size)
    return build_X4_prime(k, j) if fam == "X4prime" else build_Y4_prime(k, j)


def join_upper_factors(d: int, n: int) -> list[Complex]:
    """The X'/Y' flag 3-spheres and two-point spheres joined by :func:`join_upper_family`."""
    r, sizes = join_upper_plan(d, n)
    return [build_3sphere(size) for size in sizes] + [from_facets([["p"], ["q"]])] * r


def join_upper_family(d: int, n: int) -> Complex:
    """Join of floor(d/4) X'/Y' flag 3-spheres, then d mod 4 suspensions."""
    r, sizes = join_upper_plan(d, n)
    K = None
    for c, size in enumerate(sizes, 1):
        part = build_3sphere(size)
        if len(sizes) > 1:
            part = part.relabel({s: f"{s}@{c}" for s in part.ids})
        K = part if K is None else join(K, part)
    for _ in range(r):
        K = suspension(K)
    return K


def gale_facets(d: int, m: int) -> list[tuple[int, ...]]:
    """d-subsets of 1..m satisfying Gale's evenness condition.

    Generated block by block: runs of consecutive chosen elements must have
    even length unless they touch 1 or m.
    """
    out = []

    def extend(pos: int, chosen: tuple[int, ...]):
        left = d - len(chosen)
        if left == 0:
            out.append(chosen)
            return
        for start in range(pos, m + 1):
            for length in range(1, min(left, m - start + 1) + 1):
                end = start + length - 1
                if start != 1 and end != m and length % 2:
                    continue
                extend(end + 2, chosen + tuple(range(start, end + 1)))

    extend(1, ())
    return sorted(set(out))


def cyclic_boundary(d: int, m: int) -> Complex:
    """Boundary complex of the cyclic d-polytope on m vertices."""
    _check(d >= 2 and m > d, f"cyclic polytope needs m > d >= 2 (got d={d}, m={m})")
    return from_facets([[f"c_{i}" for i in F] for F in gale_facets(d, m)])


def neighborly_subdivided(d: int, m: int) -> Complex:
    """Cyclic polytope boundary with every facet stellarly subdivided."""
    K = cyclic_boundary(d, m)
    for idx, F in enumerate(sorted(K.facets, key=lambda f: sorted(K.label(v) for v in f)), 1):
        K = stellar_subdivide_facet(K, F, f"s_{idx}")
    return K


def torus7() -> Complex:
    """Seven-vertex triangulation of the torus (a non-flag, non-sphere control)."""
    facets = []
    for i in range(7):
        facets.append([f"t_{i}", f"t_{(i + 1) % 7}", f"t_{(i + 3) % 7}"])
        facets.append([f"t_{i}", f"t_{(i + 2) % 7}", f"t_{(i + 3) % 7}"])
    return from_facets(facets)


# -- specs ----------------------------------------------------------------

FAMILIES = {
    "W": "W", "X": "X", "Y": "Y",
    "Wp": "W4prime", "W4prime": "W4prime",
    "Xp": "X4prime", "X4prime": "X4prime",
    "Yp": "Y4prime", "Y4prime": "Y4prime",
    "cross": "Crosspolytope", "Crosspolytope": "Crosspolytope",
    "polysusp": "PolygonSuspension", "PolygonSuspension": "PolygonSuspension",
    "joinupper": "JoinUpper", "JoinUpper": "JoinUpper",
    "cyclic": "CyclicBoundary", "CyclicBoundary": "CyclicBoundary",
    "neighborly": "NeighborlySubdivided", "NeighborlySubdivided": "NeighborlySubdivided",
}

_PARAMS = {
    "W": ("d", "k"), "X": ("d", "k", "j"), "Y": ("d", "k", "j"),
    "W4prime": ("k",), "X4prime": ("k", "j"), "Y4prime": ("k", "j"),
    "Crosspolytope": ("d",), "PolygonSuspension": ("d", "n"), "JoinUpper": ("d", "n"),
    "CyclicBoundary": ("d", "m"), "NeighborlySubdivided": ("d", "m"),
}

_SHORT = {"W": "W", "X": "X", "Y": "Y", "W4prime": "Wp", "X4prime": "Xp", "Y4prime": "Yp",
          "Crosspolytope": "cross", "PolygonSuspension": "polysusp", "JoinUpper": "joinupper",
          "CyclicBoundary": "cyclic", "NeighborlySubdivided": "neighborly"}


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        fam = FAMILIES.get(self.family)
        if fam is None:
            raise InvalidSpec(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        need = _PARAMS[fam]
        if set(self.params) != set(need):
            raise InvalidSpec(f"{fam} takes parameters {', '.join(need)}")
        object.__setattr__(self, "params", {p: int(self.params[p]) for p in need})

    def __hash__(self):
        return hash((self.family, tuple(self.params.items())))

    @classmethod
    def parse(cls, text: str) -> "ConstructionSpec":
        m = re.fullmatch(r"\s*([A-Za-z0-9]+)\s*:\s*(.*?)\s*", text)
        if not m:
            raise InvalidSpec(f"cannot parse spec {text!r}")
        params = {}
        for item in filter(None, (x.strip() for x in m.group(2).split(","))):
            key, eq, val = item.partition("=")
            if not eq or not re.fullmatch(r"-?\d+", val.strip()):
                raise InvalidSpec(f"bad parameter {item!r} in {text!r}")
            params[key.strip()] = int(val)
        return cls(m.group(1), params)

    @property
    def dim(self) -> int:
        """Dimension d of the ambient (d-1)-sphere."""
        return 4 if self.family.endswith("4prime") else self.params["d"]

    def __str__(self):
        return _SHORT[self.family] + ":" + ",".join(f"{k}={v}" for k, v in self.params.items())

    def stem(self) -> str:
        return _SHORT[self.family] + "".join(f"_{k}{v}" for k, v in self.params.items())

    def build(self) -> Complex:
        p = self.params
        f = self.family
        if f == "W":
            return build_W(p["d"], p["k"])
        if f == "X":
            return build_X(p["d"], p["k"], p["j"])
        if f == "Y":
            return build_Y(p["d"], p["k"], p["j"])
        if f == "W4prime":
            return build_W4_prime(p["k"])
        if f == "X4prime":
            return build_X4_prime(p["k"], p["j"])
        if f == "Y4prime":
            return build_Y4_prime(p["k"], p["j"])
        if f == "Crosspolytope":
            return crosspolytope(p["d"])
        if f == "PolygonSuspension":
            return polygon_suspension(p["d"], p["n"])
        if f == "JoinUpper":
            return join_upper_family(p["d"], p["n"])
        if f == "CyclicBoundary":
            return cyclic_boundary(p["d"], p["m"])
        return neighborly_subdivided(p["d"], p["m"])

    def factors(self) -> list[Complex] | None:
        """Join factors whose sphere certificates certify the whole complex,
        for the families built as joins; None otherwise."""
        p = self.params
        two_points = lambda: from_facets([["p"], ["q"]])  # noqa: E731
        if self.family == "JoinUpper":
            return join_upper_factors(p["d"], p["n"])
        if self.family == "PolygonSuspension" and p["d"] > 2:
            L = p["n"] - 2 * (p["d"] - 2)
            _check(L >= 4, f"polygon of length {L} < 4 is not flag")
            return [polygon(L)] + [two_points() for _ in range(p["d"] - 2)]
        if self.family == "Crosspolytope" and p["d"] > 1:
            return [two_points() for _ in range(p["d"])]
        return None

    def expected_alpha(self) -> int | None:
        """Stable-set number predicted by the closed forms, if any."""
        p = self.params
        f = self.family
        if f in ("W", "X"):
            return p["k"] + 1
        if f == "Y":
            return p["k"] + 2
        if f in ("W4prime", "X4prime"):
            return p["k"] + 1
        if f == "Y4prime":
            return p["k"] + 2
        if f == "Crosspolytope":
            return 2 if p["d"] >= 2 else 1
        if f == "PolygonSuspension":
            L = p["n"] - 2 * (p["d"] - 2)
            return max(L // 2, 2) if p["d"] > 2 else L // 2
        if f == "JoinUpper":
            r, sizes = join_upper_plan(p["d"], p["n"])
            return max(-(-(s + 1) // 6) for s in sizes)
        return None
