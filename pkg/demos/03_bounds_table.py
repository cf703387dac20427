"""Stable-set bounds by dimension.

For d = 3 and 4 the constructions meet the conjectured value exactly. For
d = 5 the join construction sits between the lower bound n^(1/(d-2))/4 and
the upper bound, and at some n above the conjectured value.

    python demos/03_bounds_table.py
"""
from flagsphere.bounds import alpha_max_table, alpha_table, format_table, planar_counting_check
from flagsphere.constructions import polygon_suspension

for d, lo, hi in [(3, 6, 16), (4, 8, 20), (5, 10, 22)]:
    print(f"d = {d}")
    print(format_table(alpha_table(d, range(lo, hi + 1))))
    print()

print("largest alpha: suspended polygons against floor((n - 2(d-2))/2)")
for row in alpha_max_table(3, range(6, 13)):
    print(f"  n={row.n:>2}  alpha={row.alpha}  formula={row.formula}")

rep = planar_counting_check(polygon_suspension(3, 12))
print(f"\nedge count for the suspended 10-gon: 4*{rep.stable_size} <= {rep.cross_edges} <= {rep.planar_bound}")
