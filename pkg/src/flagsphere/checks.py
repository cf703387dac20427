"""The acceptance checks, grouped into suites for the ``check`` command.

Each check returns a :class:`CheckResult`; nothing is asserted with bare
``assert`` so a failing check reports what went wrong instead of stopping
the suite. Randomised checks draw everything from the suite seed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .bounds import alpha_max_formula, alpha_table, realize_2sphere, planar_counting_check
from .complex import (Complex, clique_complex, euler_characteristic, f_vector, from_facets,
                      is_flag, join, join_f_vector, skeleton_graph, stellar_subdivide_edge,
                      stellar_subdivide_facet)
from .constructions import (ConstructionSpec, build_W, build_W4_prime, build_X, build_Y,
                            cyclic_boundary, neighborly_subdivided, polygon_suspension, torus7)
from .graph import Graph, alpha_exact, is_stable, link_recursive_stable, meets_power_bound
from .rigidity import rigidity_probe, stress_inequality_check
from .verify import CERTIFIED, NOT_SPHERE, SphereCert, join_certificate, verify_sphere

FAILURE_BOUND = 1e-9
PROPERTY_TRIALS = 100


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2} {self.title}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "failures": [str(f) for f in self.failures[:20]]}


def certify(spec: ConstructionSpec, K: Complex | None = None, seed: int = 0,
            memo: dict | None = None) -> SphereCert:
    """Sphere certificate for a generated complex, through its join factors when it has them.

    ``memo`` (keyed by labelled facets) lets repeated factors share one certificate.
    """
    memo = {} if memo is None else memo

    def one(F):
        key = F.labelled_facets()
        if key not in memo:
            memo[key] = verify_sphere(F, seed=seed)
        return memo[key]

    parts = spec.factors()
    if parts is not None:
        return join_certificate(*(one(F) for F in parts))
    return one(K if K is not None else spec.build())


def _result(number, title, failures, detail, t0) -> CheckResult:
    if failures:
        detail = f"{len(failures)} failure(s), first: {failures[0]}"
    return CheckResult(number, title, not failures, detail, time.monotonic() - t0, failures)


# -- 1, 2: closed alpha formulas -----------------------------------------

def check_alpha_formulas(seed: int = 0, ds=(2, 3, 4, 5, 6), ks=range(1, 9)) -> CheckResult:
    t0 = time.monotonic()
    failures, count = [], 0
    for d in ds:
        for k in ks:
            cases = [("X", j, build_X, k + 1) for j in range(0, d)]
            if d >= 3:
                cases += [("Y", j, build_Y, k + 2) for j in range(1, d)]
            for fam, j, build, want in cases:
                got = alpha_exact(skeleton_graph(build(d, k, j))).size
                count += 1
                if got != want:
                    failures.append(f"{fam}({d},{k},{j}): alpha {got} != {want}")
    return _result(1, "alpha of X(d,k,j) is k+1 and of Y(d,k,j) is k+2", failures,
                   f"{count} instances exact", t0)


def check_drawn_instances(seed: int = 0) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for name, K, n, a in [("W_{3,3}", build_W(3, 3), 14, 4),
                          ("X(3,2,2)", build_X(3, 2, 2), 12, 3),
                          ("Y(3,2,1)", build_Y(3, 2, 1), 13, 4)]:
        G = skeleton_graph(K)
        got = alpha_exact(G).size
        if (G.n, got) != (n, a):
            failures.append(f"{name}: n={G.n}, alpha={got}, expected n={n}, alpha={a}")
    return _result(2, "small drawn instances", failures, "n = 14/12/13, alpha = 4/3/4", t0)


# -- 3, 4: sphere certification ------------------------------------------

def check_w3_spheres(seed: int = 0, ks=range(1, 11)) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for k in ks:
        K = build_W(3, k)
        cert = verify_sphere(K, seed=seed)
        if cert.verdict != CERTIFIED or not is_flag(K):
            failures.append(f"cl(W_3,{k}): {cert.verdict}, flag={is_flag(K)}")
    return _result(3, "cl(W_{3,k}) is a certified flag 2-sphere", failures,
                   f"k = {ks[0]}..{ks[-1]} certified and flag", t0)


def check_w4_prime_spheres(seed: int = 0, ks=range(1, 7)) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for k in ks:
        K = build_W4_prime(k)
        cert = verify_sphere(K, seed=seed)
        if cert.verdict != CERTIFIED or not is_flag(K):
            failures.append(f"cl(W'_4,{k}): {cert.verdict} ({cert.reason}), flag={is_flag(K)}")
    control = verify_sphere(build_W(4, 2), seed=seed)
    if control.verdict != NOT_SPHERE:
        failures.append(f"control cl(W_4,2) gave {control.verdict}")
    return _result(4, "cl(W'_{4,k}) is a certified flag 3-sphere", failures,
                   f"k = {ks[0]}..{ks[-1]} certified; control W_4,2: {control.reason}", t0)


# -- 5: coverage of every n ----------------------------------------------

def check_coverage(seed: int = 0, dims=(3, 4), n_max: int = 30) -> CheckResult:
    t0 = time.monotonic()
    failures, covered = [], []
    target = {3: lambda n: -(-n // 4), 4: lambda n: -(-(n + 1) // 6)}
    for d in dims:
        lo = 2 * d if d == 3 else 8
        for row in alpha_table(d, range(lo, n_max + 1)):
            if row.construction_alpha != target[d](row.n):
                failures.append(f"d={d}, n={row.n}: witness alpha {row.construction_alpha}, "
                                f"expected {target[d](row.n)}")
        covered.append(f"d={d}: n={lo}..{n_max}")
    return _result(5, "low-alpha witness for every n", failures, "; ".join(covered), t0)


# -- 6: link-recursive lower bound ---------------------------------------

def lower_bound_corpus(n_max: int = 60) -> list[ConstructionSpec]:
    specs = []
    for d in (4, 5, 6, 8):
        specs.append(ConstructionSpec("Crosspolytope", {"d": d}))
        for n in range(2 * d, n_max + 1):
            specs.append(ConstructionSpec("PolygonSuspension", {"d": d, "n": n}))
        for n in range(max(2 * d, 8 * (d // 4) + 2 * (d % 4)), n_max + 1):
            if d == 4:
                for k in range(1, 10):
                    if 2 + 6 * k == n:
                        specs.append(ConstructionSpec("W4prime", {"k": k}))
            specs.append(ConstructionSpec("JoinUpper", {"d": d, "n": n}))
    return specs


def check_lower_bound(seed: int = 0, n_max: int = 60) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    specs = lower_bound_corpus(n_max)
    memo: dict = {}
    for spec in specs:
        K = spec.build()
        d = spec.dim
        try:
            w = link_recursive_stable(K, d, cert=certify(spec, K, seed, memo))
        except Exception as exc:  # report and move on
            failures.append(f"{spec}: {type(exc).__name__}: {exc}")
            continue
        G = skeleton_graph(K)
        if not (is_stable(G, w.vertices) and meets_power_bound(w.size, G.n, d)):
            failures.append(f"{spec}: size {w.size} below n^(1/(d-2))/4")
    return _result(6, "link recursion meets n^(1/(d-2))/4", failures,
                   f"{len(specs)} flag spheres, d in {{4,5,6,8}}, n <= {n_max}", t0)


# -- 7, 8: rigidity ------------------------------------------------------

def rigidity_corpus(n_max: int = 40) -> list[ConstructionSpec]:
    specs = [ConstructionSpec("Crosspolytope", {"d": 4}), ConstructionSpec("Crosspolytope", {"d": 5})]
    for n in range(8, n_max + 1):
        for k in range(1, 10):
            for j in range(0, 4):
                if 2 + j + 6 * k == n:
                    specs.append(ConstructionSpec("X4prime", {"k": k, "j": j}))
                if j >= 1 and 5 + j + 6 * k == n:
                    specs.append(ConstructionSpec("Y4prime", {"k": k, "j": j}))
            if 2 + 6 * k == n:
                specs.append(ConstructionSpec("W4prime", {"k": k}))
        specs.append(ConstructionSpec("PolygonSuspension", {"d": 4, "n": n}))
    for n in range(10, n_max + 1):
        specs.append(ConstructionSpec("PolygonSuspension", {"d": 5, "n": n}))
        if n >= 10:
            specs.append(ConstructionSpec("JoinUpper", {"d": 5, "n": n}))
    return specs


def check_rigidity(seed: int = 0, n_max: int = 40, trials: int = 3) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    specs = rigidity_corpus(n_max)
    worst = 0.0
    for spec in specs:
        r = stress_inequality_check(spec.build(), spec.dim, seed=seed, trials=trials)
        worst = max(worst, r.failure_bound)
        v = r.verdicts
        if not (v["generically_d_rigid"] and v["stress_dim_eq_g2"] and v["stress_ge_alpha"]):
            failures.append(f"{spec}: rank {r.rank}/{r.expected_rank}, stress {r.stress_dim}, "
                            f"g2 {r.g2}, alpha {r.alpha_witness}")
        if r.failure_bound >= FAILURE_BOUND:
            failures.append(f"{spec}: failure bound {r.failure_bound:.2e}")
    return _result(7, "generic d-rigidity, stress_dim = g2 >= alpha", failures,
                   f"{len(specs)} instances, {trials} seeds each, worst failure bound {worst:.1e}", t0)


def check_rigidity_probe(seed: int = 0) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for spec in ("cross:d=3", "cross:d=4"):
        sp = ConstructionSpec.parse(spec)
        if rigidity_probe(sp.build(), sp.dim + 1, seed=seed):
            failures.append(f"{spec} is generically {sp.dim + 1}-rigid")
    recorded = []
    for spec in ("cross:d=5", "polysusp:d=5,n=14", "joinupper:d=5,n=20"):
        sp = ConstructionSpec.parse(spec)
        recorded.append(f"{spec}={rigidity_probe(sp.build(), 6, seed=seed)}")
    return _result(8, "(d+1)-rigidity fails for some d=3,4 spheres", failures,
                   "octahedron and 4-crosspolytope not (d+1)-rigid; d=5 recorded: "
                   + ", ".join(recorded), t0)


# -- 9, 10: bounds and neighborly spheres ----------------------------------

def two_sphere_corpus() -> list[ConstructionSpec]:
    specs = [ConstructionSpec("W", {"d": 3, "k": k}) for k in range(1, 11)]
    specs += [s for n in range(6, 31) for s in realize_2sphere(n)]
    specs += [ConstructionSpec("PolygonSuspension", {"d": 3, "n": n}) for n in range(6, 25)]
    specs.append(ConstructionSpec("Crosspolytope", {"d": 3}))
    return specs


def check_alpha_max(seed: int = 0) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for n in range(6, 25):
        got = alpha_exact(skeleton_graph(polygon_suspension(3, n))).size
        if got != (n - 2) // 2 or got != alpha_max_formula(3, n):
            failures.append(f"suspended {n - 2}-gon: alpha {got}, expected {(n - 2) // 2}")
    specs = two_sphere_corpus()
    for spec in specs:
        K = spec.build()
        cert = certify(spec, K, seed)
        if cert.verdict != CERTIFIED or not is_flag(K):
            failures.append(f"{spec}: not a certified flag 2-sphere ({cert.verdict})")
            continue
        rep = planar_counting_check(K, cert)
        if not rep.holds:
            failures.append(f"{spec}: 4*{rep.stable_size} <= {rep.cross_edges} <= "
                            f"{rep.planar_bound} fails")
    return _result(9, "alpha_M for flag 2-spheres and the edge count", failures,
                   f"n = 6..24 exact; counting check on {len(specs)} 2-spheres", t0)


def gale_bruteforce(d: int, m: int) -> list[tuple[int, ...]]:
    """Every d-subset of 1..m whose complement points separate the chosen set evenly."""
    out = []
    for S in combinations(range(1, m + 1), d):
        chosen = set(S)
        ok = True
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                if i in chosen or j in chosen:
                    continue
                if sum(1 for x in S if i < x < j) % 2:
                    ok = False
        if ok:
            out.append(S)
    return out


def check_neighborly(seed: int = 0, ms=range(6, 13)) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    for m in ms:
        K = cyclic_boundary(4, m)
        brute = {frozenset(f"c_{i}" for i in S) for S in gale_bruteforce(4, m)}
        if len(K.facets) != m * (m - 3) // 2:
            failures.append(f"C(4,{m}): {len(K.facets)} facets, expected {m * (m - 3) // 2}")
        if K.labelled_facets() != brute:
            failures.append(f"C(4,{m}): facets differ from the brute-force enumeration")
        N = neighborly_subdivided(4, m)
        G = skeleton_graph(N)
        new = [v for v in range(G.n) if G.labels[v].startswith("s_")]
        if len(new) != len(K.facets) or not is_stable(G, new):
            failures.append(f"subdivided C(4,{m}): {len(new)} new vertices, "
                            f"stable={is_stable(G, new)}")
    return _result(10, "cyclic 4-polytopes and their facet subdivisions", failures,
                   f"m = {ms[0]}..{ms[-1]}: m(m-3)/2 facets, new vertices stable", t0)


# -- 11: structural invariants -------------------------------------------

def random_graph(rng: random.Random, n_max: int = 9) -> Graph:
    n = rng.randint(1, n_max)
    p = rng.random()
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges, [f"v{i}" for i in range(n)])


def random_complex(rng: random.Random, n_max: int = 7, prefix: str = "v") -> Complex:
    n = rng.randint(1, n_max)
    facets = []
    for _ in range(rng.randint(1, 5)):
        size = rng.randint(1, min(n, 4))
        facets.append([f"{prefix}{i}" for i in rng.sample(range(n), size)])
    return from_facets(facets)


def random_sphere(rng: random.Random) -> Complex:
    base = rng.choice(["cross:d=2", "cross:d=3", "cross:d=4", "polysusp:d=3,n=9",
                       "W:d=3,k=2", "Wp:k=1"])
    K = ConstructionSpec.parse(base).build()
    for t in range(rng.randint(0, 3)):
        f = rng.choice(sorted(K.facets, key=sorted))
        if rng.random() < 0.5:
            K = stellar_subdivide_facet(K, f, f"n{t}")
        else:
            K = stellar_subdivide_edge(K, sorted(f)[:2], f"n{t}")
    return K


def check_invariants(seed: int = 0, trials: int = PROPERTY_TRIALS) -> CheckResult:
    t0 = time.monotonic()
    failures = []
    rng = random.Random(f"invariants:{seed}")
    for t in range(trials):
        G = random_graph(rng)
        K = clique_complex(G)
        if clique_complex(skeleton_graph(K)) != K:
            failures.append(f"flag closure not idempotent (trial {t})")
    for t in range(trials):
        A, B = random_complex(rng, prefix="a"), random_complex(rng, prefix="b")
        if f_vector(join(A, B)) != join_f_vector(f_vector(A), f_vector(B)):
            failures.append(f"join f-vector (trial {t}): {A.sorted_facet_labels()} * "
                            f"{B.sorted_facet_labels()}")
    for t in range(trials):
        K = random_complex(rng)
        f = rng.choice(sorted(K.facets, key=sorted))
        chi = euler_characteristic(K)
        if len(f) >= 2 and rng.random() < 0.5:
            e = rng.sample(sorted(f), 2)
            L = stellar_subdivide_edge(K, e, "new")
        else:
            L = stellar_subdivide_facet(K, f, "new")
        if euler_characteristic(L) != chi:
            failures.append(f"subdivision changed chi (trial {t})")
    for t in range(trials):
        K = random_sphere(rng) if t % 10 else torus7()
        labels = sorted(K.ids)
        shuffled = labels[:]
        rng.shuffle(shuffled)
        P = K.relabel(dict(zip(labels, shuffled)))
        a = verify_sphere(K, seed=seed).verdict
        b = verify_sphere(P, seed=seed + 1).verdict
        if a != b:
            failures.append(f"verdict changed under relabelling (trial {t}): {a} vs {b}")
    return _result(11, "structural invariants", failures,
                   f"4 properties x {trials} seeded trials", t0)


# -- suites --------------------------------------------------------------

CHECKS = {
    1: check_alpha_formulas,
    2: check_drawn_instances,
    3: check_w3_spheres,
    4: check_w4_prime_spheres,
    5: check_coverage,
    6: check_lower_bound,
    7: check_rigidity,
    8: check_rigidity_probe,
    9: check_alpha_max,
    10: check_neighborly,
    11: check_invariants,
}

SUITES = {
    "alpha2": [(1, {}), (2, {}), (5, {"dims": (3,)})],
    "alpha3": [(5, {"dims": (4,)}), (6, {})],
    "spheres": [(3, {}), (4, {}), (11, {})],
    "rigidity": [(7, {}), (8, {})],
    "bounds": [(9, {}), (10, {})],
    "all": [(i, {}) for i in sorted(CHECKS)],
}


def run_suite(name: str, seed: int = 0, report=None) -> list[CheckResult]:
    """Run a suite, passing each result to ``report`` as it completes."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    results = []
    for number, kwargs in SUITES[name]:
        res = CHECKS[number](seed=seed, **kwargs)
        results.append(res)
        if report is not None:
            report(res)
    return results
