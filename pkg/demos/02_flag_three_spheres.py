"""Flag 3-spheres from prism diagonals.

The clique complex of W_{4,k} is not a sphere: between consecutive layers
sit prisms whose interiors are missing. Adding one diagonal per prism fixes
that. This demo shows the failure, the repair, and a bistellar reduction
to the boundary of the 4-simplex.

    python demos/02_flag_three_spheres.py
"""
from flagsphere import build_W, build_W4_prime, verify_sphere
from flagsphere.complex import f_vector
from flagsphere.constructions import prism_diagonals
from flagsphere.verify import bistellar_reduce

broken = build_W(4, 2)
print("cl(W_{4,2}):", f_vector(broken), "->", verify_sphere(broken).reason)

print("diagonals added for k=3:", prism_diagonals(3))
for k in range(1, 5):
    K = build_W4_prime(k)
    cert = verify_sphere(K)
    print(f"cl(W'_{{4,{k}}}): n={K.n:>2}  {cert.verdict}  ({cert.reason})")

R, trace = bistellar_reduce(build_W4_prime(3), seed=1)
print(f"\nW'_{{4,3}} reduces to {len(R.facets)} tetrahedra on {R.n} vertices in {len(trace)} flips;")
print("first flips:", trace[:3])
