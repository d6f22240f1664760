"""Face lattices: construction from vertex-facet incidences, f-vectors,
duals and quotients.

A face of a polytope is recovered combinatorially as an intersection of
facet vertex sets (the closure property: a vertex set is a face iff it
equals the intersection of all facets containing it).  The lattice is
built by closing the facet vertex sets under intersection, using integer
bitmasks, then grading each face by the exact affine dimension of its
vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EulerViolationError, NotAFaceError
from .exact import Vector, affine_dim


@dataclass(frozen=True)
class Face:
    """A face as a set of vertex indices plus its dimension."""

    vertex_set: frozenset[int]
    dim: int

    def __repr__(self):
        verts = ",".join(str(v) for v in sorted(self.vertex_set))
        return f"Face(dim={self.dim}, {{{verts}}})"


@dataclass(frozen=True)
class FVector:
    """Face counts f_0 .. f_{dim-1}, with f_{-1} = f_dim = 1 by convention.

    The Euler relation is asserted at construction time; a violation means
    an upstream lattice bug, never bad luck.
    """

    dim: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != max(self.dim, 0):
            raise EulerViolationError(
                f"f-vector length {len(self.counts)} does not match dim {self.dim}"
            )
        total = sum((-1) ** k * c for k, c in enumerate(self.counts))
        expected = 1 - (-1) ** self.dim
        if total != expected:
            raise EulerViolationError(
                f"Euler relation failed: alternating sum {total} != {expected} "
                f"for counts {self.counts}"
            )

    def count(self, k: int) -> int:
        """f_k with the boundary conventions; 0 outside [-1, dim]."""
        if k == -1 or k == self.dim:
            return 1
        if 0 <= k < self.dim:
            return self.counts[k]
        return 0

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.count(k)


class FaceLattice:
    """The full graded lattice of faces, from the empty face to the polytope.

    Faces are listed in a canonical order (by dimension, then sorted vertex
    tuple); ``covers`` holds index pairs (lower, upper) of the covering
    relation.
    """

    def __init__(self, faces: Sequence[Face], covers: Sequence[tuple[int, int]],
                 dim: int, n_vertices: int):
        self.faces = tuple(faces)
        self.covers = tuple(covers)
        self.dim = dim
        self.n_vertices = n_vertices
        self._index = {f.vertex_set: i for i, f in enumerate(self.faces)}
        self._by_dim: dict[int, list[Face]] = {}
        for f in self.faces:
            self._by_dim.setdefault(f.dim, []).append(f)

    def __len__(self):
        return len(self.faces)

    def faces_of_dim(self, k: int) -> tuple[Face, ...]:
        return tuple(self._by_dim.get(k, ()))

    def find(self, vertex_set: Iterable[int]) -> Face:
        key = frozenset(vertex_set)
        i = self._index.get(key)
        if i is None:
            raise NotAFaceError(f"{sorted(key)} is not a face of this lattice")
        return self.faces[i]

    def has_face(self, vertex_set: Iterable[int]) -> bool:
        return frozenset(vertex_set) in self._index

    @property
    def top(self) -> Face:
        return self._by_dim[self.dim][0]

    @property
    def bottom(self) -> Face:
        return self._by_dim[-1][0]

    def f_vector(self) -> FVector:
        counts = tuple(len(self._by_dim.get(k, ())) for k in range(self.dim))
        if len(self._by_dim.get(-1, ())) != 1 or len(self._by_dim.get(self.dim, ())) != 1:
            raise EulerViolationError("lattice must have unique bottom and top")
        return FVector(self.dim, counts)


def _canonical_faces(face_dims: dict[frozenset[int], int]) -> list[Face]:
    return [
        Face(vs, d)
        for vs, d in sorted(face_dims.items(), key=lambda t: (t[1], sorted(t[0])))
    ]


def _cover_pairs(faces: Sequence[Face]) -> list[tuple[int, int]]:
    by_dim: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        by_dim.setdefault(f.dim, []).append(i)
    covers = []
    for d in sorted(by_dim):
        for i in by_dim.get(d, ()):
            for j in by_dim.get(d + 1, ()):
                if faces[i].vertex_set <= faces[j].vertex_set:
                    covers.append((i, j))
    return covers


def build_face_lattice(vertices: Sequence[Vector],
                       facet_vertex_sets: Sequence[frozenset[int]]) -> FaceLattice:
    """Close the facet vertex sets under intersection and grade the result."""
    n = len(vertices)
    full = (1 << n) - 1
    facet_masks = []
    for vs in facet_vertex_sets:
        m = 0
        for v in vs:
            m |= 1 << v
        facet_masks.append(m)

    masks = set(facet_masks)
    queue = list(masks)
    while queue:
        m = queue.pop()
        for fm in facet_masks:
            x = m & fm
            if x not in masks:
                masks.add(x)
                queue.append(x)
    masks.add(full)
    masks.add(0)

    dim = affine_dim(vertices)
    face_dims: dict[frozenset[int], int] = {}
    for m in masks:
        vs = frozenset(i for i in range(n) if m >> i & 1)
        if m == 0:
            d = -1
        elif m == full:
            d = dim
        else:
            d = affine_dim([vertices[i] for i in vs])
        face_dims[vs] = d
    faces = _canonical_faces(face_dims)
    return FaceLattice(faces, _cover_pairs(faces), dim, n)


def f_vector(lattice: FaceLattice) -> FVector:
    return lattice.f_vector()


def dual(lattice: FaceLattice) -> FaceLattice:
    """Order-reversed lattice: faces relabeled by the facets containing them.

    Purely combinatorial (no polarity), so no interior-point requirement.
    The dual's vertices are the original facets, in canonical order.
    """
    facets = lattice.faces_of_dim(lattice.dim - 1)
    face_dims: dict[frozenset[int], int] = {}
    mapping: dict[frozenset[int], frozenset[int]] = {}
    for f in lattice.faces:
        label = frozenset(
            i for i, ft in enumerate(facets) if f.vertex_set <= ft.vertex_set
        )
        mapping[f.vertex_set] = label
        face_dims[label] = lattice.dim - 1 - f.dim
    faces = _canonical_faces(face_dims)
    index = {f.vertex_set: i for i, f in enumerate(faces)}
    covers = []
    for lo, hi in lattice.covers:
        a = index[mapping[lattice.faces[hi].vertex_set]]
        b = index[mapping[lattice.faces[lo].vertex_set]]
        covers.append((a, b))
    covers.sort()
    return FaceLattice(faces, covers, lattice.dim, len(facets))


def quotient(lattice: FaceLattice, base) -> FaceLattice:
    """The lattice of the quotient polytope P/G: the interval (G, P].

    ``base`` is a Face or a vertex set naming a nonempty proper face G.
    The interval is regraded so the quotient has dimension
    dim P - dim G - 1; its vertices are the faces covering G.
    """
    if isinstance(base, Face):
        g = lattice.find(base.vertex_set)
    else:
        g = lattice.find(base)
    if g.dim == -1 or g.dim == lattice.dim:
        raise NotAFaceError("quotient needs a nonempty proper face")

    interval = [f for f in lattice.faces if g.vertex_set < f.vertex_set]
    atoms = sorted(
        (f for f in interval if f.dim == g.dim + 1),
        key=lambda f: sorted(f.vertex_set),
    )
    face_dims: dict[frozenset[int], int] = {frozenset(): -1}
    for f in interval:
        label = frozenset(
            i for i, a in enumerate(atoms) if a.vertex_set <= f.vertex_set
        )
        face_dims[label] = f.dim - g.dim - 1
    faces = _canonical_faces(face_dims)
    return FaceLattice(faces, _cover_pairs(faces), lattice.dim - g.dim - 1,
                       len(atoms))
