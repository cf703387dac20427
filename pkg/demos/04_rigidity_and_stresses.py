"""Rigidity of flag sphere graphs.

A d-sphere graph is generically d-rigid, so its stress space has dimension
g2 = f1 - d f0 + C(d+1, 2). Every vertex of a stable set contributes an
independent stress, hence g2 >= alpha. Ranks are computed exactly modulo a
random 61-bit prime.

    python demos/04_rigidity_and_stresses.py
"""
from flagsphere import ConstructionSpec, rigidity_probe, stress_inequality_check

print("spec                   n   f1  rank  g2  alpha  fail-prob")
for text in ["cross:d=4", "Wp:k=3", "Xp:k=4,j=2", "Yp:k=3,j=1", "joinupper:d=5,n=24"]:
    spec = ConstructionSpec.parse(text)
    r = stress_inequality_check(spec.build(), spec.dim, seed=0, trials=3)
    print(f"{text:<20} {r.n:>3} {r.f1:>4} {r.rank:>5} {r.g2:>3} {r.alpha_witness:>6}  {r.failure_bound:.0e}")

print("\n(d+1)-rigidity of d-sphere graphs:")
for text in ["cross:d=3", "cross:d=4", "Wp:k=2", "cross:d=5", "polysusp:d=5,n=16"]:
    spec = ConstructionSpec.parse(text)
    print(f"  {text:<20} {spec.dim + 1}-rigid: {rigidity_probe(spec.build(), spec.dim + 1)}")
