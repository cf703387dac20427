"""``flagsphere`` command line: generate, verify, alpha, rigidity, table, check.

Exit codes: 0 success, 1 a verification or assertion failed, 2 inconclusive
(homology sphere only, solver out of time), 64 bad usage or unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, checks
from .complex import clique_complex, f_vector, read_facets, skeleton_graph, write_facets
from .constructions import ConstructionSpec
from .errors import (FlagSphereError, Inconclusive, InvalidInput, InvalidSpec, PreconditionFailed,
                     SolverTimeout)
from .graph import alpha_exact, link_recursive_stable, read_graph, turan_stable, write_graph
from .rigidity import stress_inequality_check
from .verify import CERTIFIED, HOMOLOGY_SPHERE, verify_sphere

OK, FAILED, INCONCLUSIVE, USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset, tuple)):
        return sorted(o) if isinstance(o, (set, frozenset)) else list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)


def _emit(obj, out) -> None:
    out.write(dumps(obj) + "\n")


# -- subcommands ---------------------------------------------------------

def cmd_generate(args, out) -> int:
    spec = ConstructionSpec.parse(args.spec)
    K = spec.build()
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = spec.stem()
    G = skeleton_graph(K)
    write_facets(K, outdir / f"{stem}.facets", header=str(spec))
    write_graph(G, outdir / f"{stem}.graph")
    manifest = {"spec": str(spec), "n": K.n, "f_vector": list(f_vector(K)),
                "expected_alpha": spec.expected_alpha(),
                "files": {"facets": f"{stem}.facets", "graph": f"{stem}.graph"}}
    (outdir / "manifest.json").write_text(dumps(manifest) + "\n", encoding="utf-8")
    _emit(manifest, out)
    return OK


def cmd_verify(args, out) -> int:
    K = read_facets(args.file)
    cert = verify_sphere(K, seed=args.seed)
    _emit(cert.to_json(), out)
    if cert.verdict == CERTIFIED:
        return OK
    return INCONCLUSIVE if cert.verdict == HOMOLOGY_SPHERE else FAILED


def cmd_alpha(args, out) -> int:
    G = read_graph(args.file)
    if args.method == "turan":
        w = turan_stable(G)
    elif args.method == "link":
        K = clique_complex(G)
        w = link_recursive_stable(K, K.dim + 1)
    else:
        try:
            w = alpha_exact(G, time_budget=args.budget)
        except SolverTimeout as exc:
            body = exc.incumbent.to_json(G)
            body["optimal"] = False
            _emit(body, out)
            return INCONCLUSIVE
    _emit(w.to_json(G), out)
    return OK


def cmd_rigidity(args, out) -> int:
    K = read_facets(args.file)
    report = stress_inequality_check(K, args.dim, seed=args.seed, trials=args.trials,
                                     probe_r=args.probe_r)
    _emit(report.to_json(), out)
    v = report.verdicts
    ok = v["generically_d_rigid"] and v["stress_dim_eq_g2"] and v["stress_ge_alpha"]
    return OK if ok else FAILED


def cmd_table(args, out) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min must not exceed --n-max")
    rows = bounds.alpha_table(args.d, range(args.n_min, args.n_max + 1))
    if args.format == "json":
        _emit([r.to_json() for r in rows], out)
    else:
        out.write(bounds.format_table(rows) + "\n")
    return OK


def cmd_check(args, out) -> int:
    if args.format == "json":
        results = checks.run_suite(args.suite, seed=args.seed)
        _emit({"suite": args.suite, "seed": args.seed,
               "results": [r.to_json() for r in results]}, out)
    else:
        results = checks.run_suite(args.suite, seed=args.seed,
                                   report=lambda r: (out.write(r.line() + "\n"), out.flush()))
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} criteria passed\n")
    return OK if all(r.passed for r in results) else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flagsphere", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write .facets, .graph and manifest.json for a spec")
    g.add_argument("spec", help='e.g. "W:d=3,k=3" or "joinupper:d=8,n=40"')
    g.add_argument("-o", "--output", default=".", help="output directory")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="certify a .facets file as a sphere")
    v.add_argument("file")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("alpha", help="stable set of a .graph file")
    a.add_argument("file")
    a.add_argument("--method", choices=["exact", "turan", "link"], default="exact")
    a.add_argument("--budget", type=float, default=None, help="seconds for the exact solver")
    a.set_defaults(func=cmd_alpha)

    r = sub.add_parser("rigidity", help="generic rank, stresses and g2 of a .facets file")
    r.add_argument("file")
    r.add_argument("--dim", type=int, required=True)
    r.add_argument("--probe-r", type=int, default=None)
    r.add_argument("--trials", type=int, default=3)
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_rigidity)

    t = sub.add_parser("table", help="alpha bounds table for one dimension")
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--n-min", type=int, required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("check", help="run an acceptance suite")
    c.add_argument("--suite", choices=sorted(checks.SUITES), default="all")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_check)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return USAGE
    except (InvalidInput, InvalidSpec, OSError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE
    except Inconclusive as exc:
        err.write(f"inconclusive: {exc}\n")
        return INCONCLUSIVE
    except PreconditionFailed as exc:
        err.write(f"precondition failed: {exc}\n")
        return FAILED
    except FlagSphereError as exc:
        err.write(f"error: {exc}\n")
        return FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
