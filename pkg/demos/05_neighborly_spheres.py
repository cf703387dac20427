"""Neighborly spheres with many independent vertices.

The boundary of the cyclic 4-polytope on m vertices has m(m-3)/2 facets.
Subdividing every facet adds one new vertex per facet, and the new vertices
are pairwise non-adjacent: a stable set of size quadratic in m.

    python demos/05_neighborly_spheres.py
"""
from flagsphere import cyclic_boundary, neighborly_subdivided, skeleton_graph
from flagsphere.graph import is_stable

print(" m  facets  n(subdivided)  new stable")
for m in range(6, 13):
    C = cyclic_boundary(4, m)
    N = neighborly_subdivided(4, m)
    G = skeleton_graph(N)
    new = [v for v in range(G.n) if G.labels[v].startswith("s_")]
    print(f"{m:>2}  {len(C.facets):>6}  {G.n:>13}  {len(new):>3} {is_stable(G, new)}")
