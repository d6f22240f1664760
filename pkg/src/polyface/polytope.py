"""Polytopes from vertex sets: exact hulls, facets, lattices, JSON.

A Polytope always stores full-dimensional intrinsic coordinates.  Inputs
whose affine hull is lower dimensional are restricted automatically: an
orthogonal (unnormalized) rational basis of the hull is chosen and the
polytope keeps the affine embedding back into the ambient space together
with a diagonal metric (the squared basis lengths).  The metric is what
lets angle computations on restricted polytopes agree with the ambient
geometry while every coordinate stays rational.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _hull
from .errors import (
    EmptyInputError,
    MixedDimensionsError,
    NotAFaceError,
    TooLargeError,
)
from .exact import (
    Hyperplane,
    Vector,
    affine_basis_indices,
    affine_dim,
    format_scalar,
    parse_scalar,
    primitive,
    rank,
    vadd,
    vector,
    vscale,
    vsub,
    wdot,
)
from .lattice import Face, FaceLattice, FVector, build_face_lattice

MAX_POINTS = 64
MAX_DIM = 7


@dataclass(frozen=True)
class FacetRecord:
    """A facet: its vertex indices and outward supporting hyperplane."""

    vertex_set: frozenset[int]
    plane: Hyperplane


@dataclass(frozen=True)
class AffineEmbedding:
    """Affine map from intrinsic to ambient coordinates: x = offset + B c."""

    offset: Vector
    basis: tuple[Vector, ...]

    def apply(self, point: Vector) -> Vector:
        out = self.offset
        for c, b in zip(point, self.basis):
            if c != 0:
                out = vadd(out, vscale(c, b))
        return out

    @staticmethod
    def identity(dim: int) -> "AffineEmbedding":
        zero = tuple(Fraction(0) for _ in range(dim))
        basis = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(dim))
            for i in range(dim)
        )
        return AffineEmbedding(zero, basis)


class Polytope:
    """An immutable polytope: intrinsic vertices, facets, embedding, metric.

    Construct via :func:`hull_from_points` (or the generators module); the
    constructor itself trusts its arguments.
    """

    def __init__(self, ambient_dim: int, dim: int, vertices: Sequence[Vector],
                 facets: Sequence[FacetRecord], embedding: AffineEmbedding,
                 metric: Sequence[Fraction]):
        self.ambient_dim = ambient_dim
        self.dim = dim
        self.vertices = tuple(vertices)
        self.facets = tuple(facets)
        self.embedding = embedding
        self.metric = tuple(metric)
        self._lattice: FaceLattice | None = None
        self._facet_polytopes: dict[int, "Polytope"] = {}
        self._gp_normals: tuple[tuple[int, ...], ...] | None = None
        self._aff_cache: dict = {}

    # -- basic combinatorics -------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    def face_lattice(self) -> FaceLattice:
        if self._lattice is None:
            self._lattice = build_face_lattice(
                self.vertices, [f.vertex_set for f in self.facets]
            )
        return self._lattice

    def f_vector(self) -> FVector:
        return self.face_lattice().f_vector()

    def is_simple(self) -> bool:
        """Every vertex lies in exactly dim facets."""
        counts = [0] * self.n_vertices
        for f in self.facets:
            for v in f.vertex_set:
                counts[v] += 1
        return all(c == self.dim for c in counts)

    def is_simplicial(self) -> bool:
        """Every facet has exactly dim vertices."""
        return all(len(f.vertex_set) == self.dim for f in self.facets)

    def facets_containing(self, vertex_set: frozenset[int]) -> list[int]:
        return [
            i for i, f in enumerate(self.facets) if vertex_set <= f.vertex_set
        ]

    def is_face(self, vertex_set: Iterable[int]) -> bool:
        """Closure test: a vertex set is a face iff it equals the
        intersection of the vertex sets of all facets containing it."""
        vs = frozenset(vertex_set)
        if not vs <= set(range(self.n_vertices)):
            return False
        if vs == frozenset(range(self.n_vertices)):
            return True
        containing = self.facets_containing(vs)
        if not containing:
            return False
        inter = frozenset.intersection(*(self.facets[i].vertex_set
                                         for i in containing))
        return inter == vs

    def require_face(self, face) -> frozenset[int]:
        """Coerce a Face or vertex collection to a validated vertex set."""
        vs = frozenset(face.vertex_set if isinstance(face, Face) else face)
        if not vs:
            raise NotAFaceError("the empty face is not allowed here")
        if not self.is_face(vs):
            raise NotAFaceError(f"{sorted(vs)} is not a face of this polytope")
        return vs

    def face_dim(self, vertex_set: Iterable[int]) -> int:
        vs = frozenset(vertex_set)
        return affine_dim([self.vertices[i] for i in vs])

    # -- geometry ------------------------------------------------------------

    def contains(self, point: Vector, strict: bool = False) -> bool:
        """Exact membership test in intrinsic coordinates."""
        if strict:
            return all(f.plane.side(point) < 0 for f in self.facets)
        return all(f.plane.side(point) <= 0 for f in self.facets)

    def centroid_of(self, vertex_set: Iterable[int]) -> Vector:
        vs = sorted(set(vertex_set))
        acc = self.vertices[vs[0]]
        for i in vs[1:]:
            acc = vadd(acc, self.vertices[i])
        return vscale(Fraction(1, len(vs)), acc)

    def ambient_vertices(self) -> tuple[Vector, ...]:
        return tuple(self.embedding.apply(v) for v in self.vertices)

    def facet_as_polytope(self, index: int) -> "Polytope":
        """The facet as a polytope in its own (dim-1)-dimensional rational
        coordinates; its ambient space is this polytope's intrinsic space."""
        if not 0 <= index < len(self.facets):
            raise IndexError(f"facet index {index} out of range")
        cached = self._facet_polytopes.get(index)
        if cached is None:
            verts = [self.vertices[i]
                     for i in sorted(self.facets[index].vertex_set)]
            cached = _build(verts, self.metric)
            self._facet_polytopes[index] = cached
        return cached

    def __repr__(self):
        return (f"Polytope(dim={self.dim}, vertices={self.n_vertices}, "
                f"facets={self.n_facets})")


def _restrict(points: list[Vector], metric: tuple[Fraction, ...], dim: int):
    """Orthogonal affine restriction onto the hull of the points.

    Returns (intrinsic points, embedding, child metric).  The basis is
    Gram-Schmidt orthogonalized with respect to the given diagonal metric
    but not normalized, so the child metric is again diagonal.
    """
    idx = affine_basis_indices(points)
    base = points[idx[0]]
    basis: list[Vector] = []
    norms: list[Fraction] = []
    for i in idx[1:]:
        b = vsub(points[i], base)
        for prev, nb in zip(basis, norms):
            c = wdot(b, prev, metric) / nb
            if c != 0:
                b = vsub(b, vscale(c, prev))
        b = primitive(b)
        basis.append(b)
        norms.append(wdot(b, b, metric))
    intrinsic = [
        tuple(wdot(vsub(p, base), b, metric) / nb
              for b, nb in zip(basis, norms))
        for p in points
    ]
    embedding = AffineEmbedding(base, tuple(basis))
    return intrinsic, embedding, tuple(norms)


def _build(points: Sequence[Vector], metric: Sequence[Fraction],
           max_points: int = MAX_POINTS, max_dim: int = MAX_DIM) -> Polytope:
    """Shared construction path: dedupe, restrict, enumerate facets, drop
    non-vertex points, assemble the Polytope."""
    if not points:
        raise EmptyInputError("a polytope needs at least one point")
    ambient = len(points[0])
    if any(len(p) != ambient for p in points):
        raise MixedDimensionsError("points of mixed dimensions")
    metric = tuple(metric)

    seen: dict[Vector, int] = {}
    distinct: list[Vector] = []
    for p in points:
        if p not in seen:
            seen[p] = len(distinct)
            distinct.append(p)
    if len(distinct) > max_points:
        raise TooLargeError(
            f"{len(distinct)} points exceeds the guard of {max_points}"
        )

    dim = affine_dim(distinct)
    if dim > max_dim:
        raise TooLargeError(f"dimension {dim} exceeds the guard of {max_dim}")

    if dim == ambient:
        intrinsic = distinct
        embedding = AffineEmbedding.identity(ambient)
        child_metric = metric
    else:
        intrinsic, embedding, child_metric = _restrict(distinct, metric, dim)

    if dim == 0:
        return Polytope(ambient, 0, intrinsic, (), embedding, child_metric)

    raw = _hull.incremental_facets(intrinsic, dim)

    # A point is a vertex iff the normals of the facets through it span
    # the whole space (its normal cone is full dimensional).
    normals_at: dict[int, list[Vector]] = {i: [] for i in range(len(intrinsic))}
    for normal, _, on in raw:
        for i in on:
            normals_at[i].append(normal)
    keep = [i for i in range(len(intrinsic))
            if len(normals_at[i]) >= dim and rank(normals_at[i]) == dim]
    remap = {old: new for new, old in enumerate(keep)}
    vertices = [intrinsic[i] for i in keep]

    facets = []
    for normal, offset, on in raw:
        vs = frozenset(remap[i] for i in on if i in remap)
        facets.append(FacetRecord(vs, Hyperplane(normal, offset)))
    facets.sort(key=lambda f: sorted(f.vertex_set))
    return Polytope(ambient, dim, vertices, facets, embedding, child_metric)


def hull_from_points(points: Sequence, *, max_points: int = MAX_POINTS,
                     max_dim: int = MAX_DIM) -> Polytope:
    """Convex hull of a finite point set, exactly.

    Coordinates may be ints, strings ("p/q") or Fractions.  Lower
    dimensional inputs are restricted to intrinsic coordinates rather than
    rejected.  Redundant (non-vertex) points are dropped; facets are
    enumerated with exact arithmetic and never trusted from anywhere else.
    """
    if not points:
        raise EmptyInputError("a polytope needs at least one point")
    pts = [vector(p) for p in points]
    ones = tuple(Fraction(1) for _ in range(len(pts[0])))
    return _build(pts, ones, max_points=max_points, max_dim=max_dim)


def face_lattice(p: Polytope) -> FaceLattice:
    return p.face_lattice()


def f_vector_of(p: Polytope) -> FVector:
    return p.f_vector()


# -- serialization ----------------------------------------------------------


def polytope_to_json(p: Polytope) -> dict:
    """The interchange form: ambient dimension plus exact vertex strings.

    Facets and the lattice are recomputed on load, never trusted."""
    return {
        "ambient_dim": p.ambient_dim,
        "vertices": [
            [format_scalar(c) for c in v] for v in p.ambient_vertices()
        ],
    }


def polytope_from_json(data: dict) -> Polytope:
    ambient = int(data["ambient_dim"])
    verts = []
    for row in data["vertices"]:
        if len(row) != ambient:
            raise MixedDimensionsError(
                "vertex length does not match ambient_dim"
            )
        verts.append(tuple(parse_scalar(c) for c in row))
    return hull_from_points(verts)


def save_polytope(p: Polytope, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(polytope_to_json(p), fh, indent=2)
        fh.write("\n")


def load_polytope(path: str) -> Polytope:
    with open(path, "r", encoding="utf-8") as fh:
        return polytope_from_json(json.load(fh))
