"""Face-count lower bounds, verified exactly on concrete polytopes.

For a d-polytope, the number of k-faces is bounded below by both vertex
and facet counts:

    f_k / f_0     >= (C(ceil(d/2), k) + C(floor(d/2), k)) / 2
    f_k / f_{d-1} >= the same expression at d-k-1

with equality exactly at k = 0 (resp. k = d-1), and additionally at k = 1
for simple polytopes (resp. k = d-2 for simplicial ones).  A direct
consequence: every f_k is at least min(f_0, f_{d-1}).
"""
from polyface import (
    cross_polytope,
    cube,
    cyclic,
    few_vertex_check,
    min_face_check,
    ratio_bound,
    unimodality_check,
    verify_main_bounds,
)

print("== the bound function ==")
for d in (3, 4, 5, 6):
    row = [str(ratio_bound(d, k)) for k in range(d)]
    print(f"  d={d}:  " + "  ".join(row))

print()
print("== equality happens exactly where predicted ==")
for name, p in [("3-cube (simple)", cube(3)),
                ("octahedron (simplicial)", cross_polytope(3)),
                ("cyclic C(6,4) (simplicial; strict at k=1)", cyclic(6, 4))]:
    report = verify_main_bounds(p)
    print(f"  {name}:")
    for row in report.rows:
        marks = []
        if row.equality_vertices:
            marks.append("= vertex bound")
        if row.equality_facets:
            marks.append("= facet bound")
        tag = " and ".join(marks) if marks else "strict"
        print(f"    k={row.k}: f_k={row.f_k:3d}  f_k/f_0={row.ratio_to_vertices}"
              f"  f_k/f_top={row.ratio_to_facets}  [{tag}]")

print()
print("== the minimum rule ==")
rep = min_face_check(cyclic(6, 4))
print(f"  C(6,4): every f_k >= min(f_0, f_3) = {rep.rows[0]['min']}: {rep.ok}")

print()
print("== comparator checks ==")
print(f"  few-vertex bound on the 4-cross-polytope: {few_vertex_check(cross_polytope(4))['ok']}")
print(f"  partial unimodality of the 5-cube: {unimodality_check(cube(5))['ok']}")
