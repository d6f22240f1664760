"""Solid angles: how much of the space around a face belongs to the
polytope.

The angle at a face is estimated by seeded Monte Carlo over the tangent
cone (deterministic and bit-reproducible for a given seed) and, in
dimension <= 3, compared against closed forms.  Two classical facts are
then observable numerically: the facet angles around a face never sum to
more than 1, with equality exactly in codimension 2; and the k-th angle
sum of an m-polytope is at least ratio_bound(m+1, m-k).
"""
from polyface import (
    angle_sum,
    angle_sum_lower_check,
    cube,
    curvature_check,
    hull_from_points,
    simplex,
    solid_angle,
    solid_angle_exact,
)

SAMPLES = 200_000

print("== sampled angles against closed forms ==")
cases = [
    ("square at a corner", cube(2), frozenset([0]), 0.25),
    ("cube at a corner", cube(3), frozenset([0]), 0.125),
    ("cube at a facet", cube(3), cube(3).facets[0].vertex_set, 0.5),
]
for name, p, face, expect in cases:
    est = solid_angle(p, face, SAMPLES, seed=1)
    print(f"  {name:20s} estimate {est.mean:.4f} +- {est.stderr:.4f}"
          f"  (expected {expect})")

tetra = hull_from_points([(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)])
corner = solid_angle(tetra, frozenset([0]), SAMPLES, seed=1)
oracle = solid_angle_exact(tetra, frozenset([0]))
print(f"  regular tetrahedron corner: estimate {corner.mean:.4f},"
      f" closed form {oracle:.4f}")

print()
print("== angle sums ==")
for k in range(3):
    rep = angle_sum(cube(3), k, SAMPLES, seed=2)
    print(f"  3-cube angle sum at dim {k}: {rep.total:.3f} +- {rep.stderr:.3f}")

print()
print("== facet angles around a face sum to at most 1 ==")
edge = next(f for f in cube(3).face_lattice().faces_of_dim(1))
rep = curvature_check(cube(3), edge)
print(f"  cube at an edge (codim 2): sum = {rep.total} exactly")
rep = curvature_check(cube(3), frozenset([0]), SAMPLES, seed=3)
print(f"  cube at a corner: sum = {rep.total:.4f} < 1 strictly")

print()
print("== angle-sum floors ==")
seg = hull_from_points([(0,), (1,)])
rep = angle_sum_lower_check(seg, 0)
print(f"  segment, k=0: {rep.total} >= {rep.bound} (exact equality)")
rep = angle_sum_lower_check(simplex(2), 0, SAMPLES, seed=4)
print(f"  triangle, k=0: {rep.total:.4f} >= {rep.bound} "
      f"(equality within noise: {rep.equality})")
rep = angle_sum_lower_check(cube(3), 1, SAMPLES, seed=4)
print(f"  3-cube, k=1: {rep.total:.4f} >= {rep.bound}")
