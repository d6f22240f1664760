"""Counting faces exactly.

Builds a few classic polytopes from their vertices, prints their
f-vectors, and shows the lattice operations: duality and quotients.
Everything here is exact rational arithmetic; no face is ever missed or
invented by rounding.
"""
from polyface import (
    cross_polytope,
    cube,
    cyclic,
    dual,
    hull_from_points,
    pyramid,
    quotient,
    simplex,
)

print("== f-vectors of the classic families ==")
for name, p in [
    ("3-simplex", simplex(3)),
    ("3-cube", cube(3)),
    ("octahedron", cross_polytope(3)),
    ("4-cube", cube(4)),
    ("cyclic C(6,4)", cyclic(6, 4)),
]:
    fv = p.f_vector()
    euler = sum((-1) ** k * c for k, c in enumerate(fv.counts))
    print(f"  {name:14s} dim {p.dim}  f = {tuple(fv.counts)}  "
          f"simple={p.is_simple()} simplicial={p.is_simplicial()}  "
          f"Euler sum = {euler}")

print()
print("== redundant points never become vertices ==")
square_plus_center = hull_from_points([(0, 0), (1, 0), (0, 1), (1, 1),
                                       ("1/2", "1/2")])
print(f"  square + center point -> {square_plus_center.n_vertices} vertices,"
      f" {square_plus_center.n_facets} edges")

print()
print("== duality reverses the f-vector ==")
oct_lattice = dual(cube(3).face_lattice())
print(f"  dual(3-cube) has f = {tuple(oct_lattice.f_vector().counts)}"
      f"  (the octahedron)")

print()
print("== quotients: the local structure above a face ==")
c = cube(3)
vertex_figure = quotient(c.face_lattice(), frozenset([0]))
print(f"  3-cube / vertex -> dim {vertex_figure.dim}, "
      f"f = {tuple(vertex_figure.f_vector().counts)}  (a triangle)")
facet_figure = quotient(c.face_lattice(), c.facets[0].vertex_set)
print(f"  3-cube / facet -> dim {facet_figure.dim} (a point)")

print()
print("== pyramids raise the dimension ==")
egyptian = pyramid(cube(2))
print(f"  pyramid over the square: f = {tuple(egyptian.f_vector().counts)}")
