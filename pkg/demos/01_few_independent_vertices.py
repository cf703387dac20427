"""Flag spheres with few independent vertices.

Builds the layered graphs W_{d,k}, their edge subdivisions X(d,k,j) and
Y(d,k,j), and compares the exact stable-set number with the closed forms.
Then certifies a few of them as spheres.

    python demos/01_few_independent_vertices.py
"""
from flagsphere import build_W, build_X, build_Y, is_flag, skeleton_graph, verify_sphere
from flagsphere.complex import f_vector
from flagsphere.graph import alpha_exact

print("W_{3,3}: the layered 2-sphere on 14 vertices")
W = build_W(3, 3)
G = skeleton_graph(W)
w = alpha_exact(G)
print(f"  f-vector {f_vector(W)}, alpha {w.size}, witness {sorted(G.labels[v] for v in w.vertices)}")
print(f"  flag: {is_flag(W)}, sphere: {verify_sphere(W).verdict}")

print("\nalpha of X(d,k,j) and Y(d,k,j) against k+1 and k+2")
print("   d  k   n(X)  alpha(X)   n(Y)  alpha(Y)")
for d in (3, 4, 5):
    for k in (1, 2, 3, 4):
        X = skeleton_graph(build_X(d, k, d - 1))
        Y = skeleton_graph(build_Y(d, k, 1))
        print(f"  {d:>2} {k:>2}  {X.n:>5}  {alpha_exact(X).size:>8}  {Y.n:>5}  {alpha_exact(Y).size:>8}")

print("\nThe vertex count grows by 2d-2 per layer while alpha grows by one,")
print("so alpha is about n / (2d-2) for these spheres.")
