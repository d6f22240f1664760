"""Orthogonal projections of polytopes: general-position directions,
shadows, upper/lower facet complexes, refinement-diagram vertices, and the
face-count gap against the shadow.

A direction v is in general position when it is parallel to no proper
affine subspace spanned by vertices.  Verification is exact and reduces to
finitely many dot products: every violating subspace extends to a
vertex-spanned hyperplane, so it is enough to enumerate the distinct
normals of hyperplanes spanned by dim-subsets of the vertices (generalized
cross products, deduplicated) and test v against each.  The normal set
depends only on the polytope and is cached on it, which makes verifying
many directions cheap.  The enumeration is guarded by a subset budget;
desk-scale polytopes fit comfortably except the very largest vertex counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm

import numpy as np

from ._hull import cross_normal
from ._rng import SEED_MASK
from .bounds import ratio_bound
from .errors import (
    DimensionTooLowError,
    GeneralPositionError,
    NotInteriorError,
    OutOfRangeError,
    RetriesExhaustedError,
    TooLargeError,
    ZeroDotProductError,
    ZeroVectorError,
)
from .exact import (
    Vector,
    dot,
    is_zero,
    null_space,
    orthogonal_complement_basis,
    span_basis,
    vector,
    wdot,
)
from .lattice import Face
from .polytope import Polytope, _build

MAX_GP_SUBSETS = 3_000_000
DIRECTION_RANGE = 10**4


@dataclass(frozen=True)
class Direction:
    """A rational direction, flagged once exact general-position
    verification has passed."""

    v: Vector
    verified: bool

    def to_json(self) -> dict:
        return {"v": [str(c) for c in self.v], "verified": self.verified}


def spanned_hyperplane_normals(
    q: Polytope, max_subsets: int = MAX_GP_SUBSETS
) -> tuple[tuple[int, ...], ...]:
    """Distinct primitive normals of all hyperplanes spanned by vertices.

    Cached on the polytope.  Raises TooLargeError when the number of
    dim-subsets exceeds the budget.
    """
    if q._gp_normals is not None:
        return q._gp_normals
    n, d = q.n_vertices, q.dim
    if d < 1:
        raise OutOfRangeError("directions need dimension >= 1")
    total = comb(n, d)
    if total > max_subsets:
        raise TooLargeError(
            f"general-position verification needs {total} subset checks "
            f"(budget {max_subsets})"
        )
    mult = lcm(*(c.denominator for v in q.vertices for c in v))
    pts = [tuple(int(c * mult) for c in v) for v in q.vertices]
    normals: set[tuple[int, ...]] = set()
    if d == 1:
        normals.add((1,))
    else:
        for combo in combinations(range(n), d):
            base = pts[combo[0]]
            diffs = [tuple(a - b for a, b in zip(pts[i], base))
                     for i in combo[1:]]
            nrm = cross_normal(diffs, d)
            if nrm is None:
                continue  # does not span a hyperplane; covered by supersets
            if nrm[next(i for i, c in enumerate(nrm) if c != 0)] < 0:
                nrm = tuple(-c for c in nrm)
            normals.add(nrm)
    q._gp_normals = tuple(sorted(normals))
    return q._gp_normals


def is_general_position(q: Polytope, v: Vector,
                        max_subsets: int = MAX_GP_SUBSETS) -> bool:
    """Exact test that v is parallel to no vertex-spanned proper subspace."""
    if is_zero(v):
        return False
    return all(
        sum(a * b for a, b in zip(nrm, v)) != 0
        for nrm in spanned_hyperplane_normals(q, max_subsets)
    )


def verify_direction(q: Polytope, v, max_subsets: int = MAX_GP_SUBSETS) -> Direction:
    vec = vector(v)
    if len(vec) != q.dim:
        raise OutOfRangeError("direction dimension must match the polytope")
    if not is_general_position(q, vec, max_subsets):
        raise GeneralPositionError(f"{v} is not in general position")
    return Direction(vec, True)


def sample_direction(q: Polytope, seed: int = 0, max_retries: int = 64,
                     max_subsets: int = MAX_GP_SUBSETS) -> Direction:
    """Seeded random integer direction, resampled until verified.

    Coordinates are drawn uniformly from [-10^4, 10^4]; failures (a zero
    vector or a general-position violation) trigger a redraw from the same
    stream, so the result is deterministic in (polytope, seed).
    """
    if q.dim < 1:
        raise OutOfRangeError("directions need dimension >= 1")
    normals = spanned_hyperplane_normals(q, max_subsets)
    rng = np.random.Generator(np.random.PCG64(
        np.random.SeedSequence((seed & SEED_MASK, 0x61))))
    for _ in range(max_retries):
        draw = rng.integers(-DIRECTION_RANGE, DIRECTION_RANGE + 1, size=q.dim)
        v = tuple(Fraction(int(c)) for c in draw)
        if is_zero(v):
            continue
        if all(sum(a * b for a, b in zip(nrm, v)) != 0 for nrm in normals):
            return Direction(v, True)
    raise RetriesExhaustedError(
        f"no general-position direction found in {max_retries} draws"
    )


def _direction_vector(v) -> Vector:
    if isinstance(v, Direction):
        return v.v
    return vector(v)


@dataclass(frozen=True)
class ShadowPolytope:
    """The image of a polytope under orthogonal projection along v.

    ``poly`` lives in coordinates over a rational orthogonal basis of the
    complement of v; ``vertex_map[i]`` gives the shadow vertex index that
    vertex i of the source projects to, or None when the projection lands
    inside the shadow (not a vertex of it).
    """

    poly: Polytope
    vertex_map: tuple[int | None, ...]
    basis: tuple[Vector, ...]
    basis_norms: tuple[Fraction, ...]
    source_metric: tuple[Fraction, ...]
    direction: Vector

    def project(self, point: Vector) -> Vector:
        """Shadow coordinates of a point given in source coordinates."""
        return tuple(
            wdot(point, b, self.source_metric) / nb
            for b, nb in zip(self.basis, self.basis_norms)
        )


def shadow(q: Polytope, v) -> ShadowPolytope:
    """Project q along a (verified) direction and rebuild the hull."""
    vec = _direction_vector(v)
    if is_zero(vec):
        raise ZeroVectorError("projection direction must be nonzero")
    basis = orthogonal_complement_basis(vec, q.metric)
    norms = tuple(wdot(b, b, q.metric) for b in basis)
    projected = [
        tuple(wdot(p, b, q.metric) / nb for b, nb in zip(basis, norms))
        for p in q.vertices
    ]
    poly = _build(projected, norms)
    locate = {p: i for i, p in enumerate(poly.vertices)}
    vmap = tuple(locate.get(p) for p in projected)
    return ShadowPolytope(poly, vmap, tuple(basis), norms, q.metric, vec)


@dataclass(frozen=True)
class ShadowComplexes:
    """Facet partition by the sign of the pairing with v, plus the faces
    lying in both generated subcomplexes (the shadow boundary)."""

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    boundary_faces: tuple[Face, ...]

    def to_json(self) -> dict:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "boundary_faces": [sorted(f.vertex_set) for f in self.boundary_faces],
        }


def upper_lower(q: Polytope, v) -> ShadowComplexes:
    """Exact sign partition of the facets; a zero pairing means the
    direction was not verified and is rejected."""
    vec = _direction_vector(v)
    upper, lower = [], []
    for i, f in enumerate(q.facets):
        s = dot(f.plane.normal, vec)
        if s > 0:
            upper.append(i)
        elif s < 0:
            lower.append(i)
        else:
            raise ZeroDotProductError(
                f"direction orthogonal to facet {i}: not in general position"
            )
    upper_sets = [q.facets[i].vertex_set for i in upper]
    lower_sets = [q.facets[i].vertex_set for i in lower]
    boundary = []
    for face in q.face_lattice().faces:
        if face.dim < 0 or face.dim == q.dim:
            continue
        vs = face.vertex_set
        if any(vs <= u for u in upper_sets) and any(vs <= l for l in lower_sets):
            boundary.append(face)
    return ShadowComplexes(tuple(upper), tuple(lower), tuple(boundary))


def shadow_boundary_check(q: Polytope, v, sh: ShadowPolytope | None = None,
                          complexes: ShadowComplexes | None = None) -> bool:
    """Combinatorial homeomorphism check: the projections of the shadow
    boundary faces are exactly the proper nonempty faces of the shadow."""
    if sh is None:
        sh = shadow(q, v)
    if complexes is None:
        complexes = upper_lower(q, v)
    shadow_faces = {
        f.vertex_set: f.dim
        for f in sh.poly.face_lattice().faces
        if 0 <= f.dim < sh.poly.dim
    }
    seen = {}
    for face in complexes.boundary_faces:
        images = [sh.vertex_map[i] for i in face.vertex_set]
        if any(i is None for i in images):
            return False  # a boundary vertex projected to a non-vertex
        key = frozenset(images)
        if key not in shadow_faces or shadow_faces[key] != face.dim:
            return False
        if key in seen:
            return False  # two boundary faces with the same image
        seen[key] = face.dim
    return len(seen) == len(shadow_faces)


@dataclass(frozen=True)
class DiagramVertex:
    """A transversal crossing of an upper and a lower face seen in the
    shadow: the unique common point of their projections, labeled with both
    witness faces, their dimensions, and whether the point is interior to
    the shadow."""

    point: Vector
    x_plus: Face
    x_minus: Face
    l_plus: int
    l_minus: int
    interior: bool

    def to_json(self) -> dict:
        return {
            "point": [str(c) for c in self.point],
            "x_plus": sorted(self.x_plus.vertex_set),
            "x_minus": sorted(self.x_minus.vertex_set),
            "l_plus": self.l_plus,
            "l_minus": self.l_minus,
            "interior": self.interior,
        }


def _int_geometry(q: Polytope):
    """Integer-scaled copy of the polytope's geometry, cached.

    Returns (scale, int vertices, facet triples (normal, num, den)) where a
    point y given as numerators Y over a positive denominator DEN (in the
    scaled space) satisfies facet (a, num, den) iff den*(a.Y) <= num*DEN.
    """
    cached = q._aff_cache.get("int-geometry")
    if cached is None:
        scale = lcm(*(c.denominator for v in q.vertices for c in v))
        verts = [tuple(int(c * scale) for c in v) for v in q.vertices]
        facets = []
        for f in q.facets:
            a = tuple(int(c) for c in f.plane.normal)
            off = f.plane.offset * scale
            facets.append((a, off.numerator, off.denominator))
        cached = (scale, verts, facets)
        q._aff_cache["int-geometry"] = cached
    return cached


def _aff_data_int(q: Polytope, face: Face, verts):
    """(base, spanning diffs, hull equations) of a face's affine hull in
    the integer-scaled space, cached per face (direction independent)."""
    cached = q._aff_cache.get(face.vertex_set)
    if cached is None:
        idx = sorted(face.vertex_set)
        base = verts[idx[0]]
        diffs = [tuple(a - b for a, b in zip(verts[i], base))
                 for i in idx[1:]]
        span = [tuple(int(c) for c in row) for row in span_basis(
            [tuple(Fraction(c) for c in d) for d in diffs])]
        eqs = [tuple(int(c) for c in row) for row in null_space(
            [tuple(Fraction(c) for c in d) for d in diffs], q.dim)]
        cached = (base, tuple(span), tuple(eqs))
        q._aff_cache[face.vertex_set] = cached
    return cached


def _det(m: list[list[int]]) -> int:
    from ._hull import det_int

    return det_int(m)


def diagram_vertices(q: Polytope, v,
                     complexes: ShadowComplexes | None = None,
                     sh: ShadowPolytope | None = None) -> tuple[DiagramVertex, ...]:
    """All crossing vertices of the overlay of the projected upper and
    lower complexes.

    Pairs of faces with complementary dimensions (summing to dim-1) are
    solved exactly: the projections of their affine hulls meet in at most
    one point, and the point qualifies when its two lifts land inside the
    polytope (equivalently, inside the witness faces).  The inner loop runs
    in fraction-free integer arithmetic on a uniformly scaled copy of the
    geometry.
    """
    if q.dim < 2:
        raise DimensionTooLowError("diagram construction needs dim >= 2")
    vec = _direction_vector(v)
    if complexes is None:
        complexes = upper_lower(q, vec)
    if sh is None:
        sh = shadow(q, vec)

    lattice = q.face_lattice()
    upper_sets = [q.facets[i].vertex_set for i in complexes.upper]
    lower_sets = [q.facets[i].vertex_set for i in complexes.lower]
    upper_faces: dict[int, list[Face]] = {}
    lower_faces: dict[int, list[Face]] = {}
    for face in lattice.faces:
        if face.dim < 0 or face.dim == q.dim:
            continue
        if any(face.vertex_set <= u for u in upper_sets):
            upper_faces.setdefault(face.dim, []).append(face)
        if any(face.vertex_set <= l for l in lower_sets):
            lower_faces.setdefault(face.dim, []).append(face)

    scale, iverts, ifacets = _int_geometry(q)
    from .exact import primitive as _primitive

    v_int = tuple(int(c) for c in _primitive(vec))
    dim = q.dim
    # Integer form of the projection onto the complement basis: coordinate
    # j of a scaled point Y/D is (proj_rows[j] . Y) / (D * proj_dens[j]).
    proj_rows = []
    proj_dens = []
    for b, nb in zip(sh.basis, sh.basis_norms):
        row = [bk * gk / nb for bk, gk in zip(b, q.metric)]
        mult = lcm(*(c.denominator for c in row))
        proj_rows.append(tuple(int(c * mult) for c in row))
        proj_dens.append(mult * scale)
    out = []
    for l_plus in range(0, dim):
        l_minus = dim - 1 - l_plus
        uppers = upper_faces.get(l_plus, ())
        lowers = lower_faces.get(l_minus, ())
        if not uppers or not lowers:
            continue
        for x_plus in uppers:
            base_p, span_p, _ = _aff_data_int(q, x_plus, iverts)
            cols = span_p + (v_int,)
            m = len(cols)
            for x_minus in lowers:
                base_m, _, eqs_m = _aff_data_int(q, x_minus, iverts)
                # One equation per hull equation of x_minus in the unknowns
                # (coefficients along aff(x_plus), step along v); square
                # because the witness dimensions are complementary.
                rows = [[sum(a * b for a, b in zip(eq, col)) for col in cols]
                        for eq in eqs_m]
                rhs = [sum(a * (bm - bp) for a, bm, bp in
                           zip(eq, base_m, base_p)) for eq in eqs_m]
                den = _det(rows)
                if den == 0:
                    continue  # projected hulls parallel or overlapping
                nums = []
                for j in range(m):
                    col_save = [rows[i][j] for i in range(m)]
                    for i in range(m):
                        rows[i][j] = rhs[i]
                    nums.append(_det(rows))
                    for i in range(m):
                        rows[i][j] = col_save[i]
                if den < 0:
                    den = -den
                    nums = [-x for x in nums]
                # The upper lift sits at or above the lower one.
                if nums[-1] > 0:
                    continue
                y_plus = [den * c for c in base_p]
                for coeff, b in zip(nums[:-1], span_p):
                    if coeff:
                        for j in range(dim):
                            y_plus[j] += coeff * b[j]
                y_minus = [yj + nums[-1] * vj for yj, vj in zip(y_plus, v_int)]
                if not _contains_int(ifacets, y_plus, den) or \
                   not _contains_int(ifacets, y_minus, den):
                    continue
                point = tuple(
                    Fraction(sum(rj * yj for rj, yj in zip(row, y_plus)),
                             den * pden)
                    for row, pden in zip(proj_rows, proj_dens)
                )
                # A fiber over a shadow-boundary point meets the polytope in
                # a single point, so under a verified direction a crossing is
                # interior exactly when its two lifts are distinct (t < 0).
                interior = nums[-1] < 0
                out.append(DiagramVertex(point, x_plus, x_minus,
                                         l_plus, l_minus, interior))
    return tuple(out)


def _contains_int(ifacets, y: list[int], den: int) -> bool:
    for a, num, fden in ifacets:
        s = 0
        for ai, yi in zip(a, y):
            s += ai * yi
        if fden * s > num * den:
            return False
    return True


def has_interior_vertex(q: Polytope, v) -> bool:
    """The overlay diagram of any verified direction contains an interior
    vertex; a False here indicates a toolkit bug."""
    return any(dv.interior for dv in diagram_vertices(q, v))


@dataclass(frozen=True)
class QuotientWitnessReport:
    """Dimension and face-count witnesses for an interior diagram vertex:
    the quotients at the two witness faces have complementary dimensions
    and at least the face counts of a simplex."""

    ok: bool
    dim_plus: int
    dim_minus: int
    l_plus: int
    l_minus: int
    rows: tuple[dict, ...]

    def to_json(self) -> dict:
        return {"ok": self.ok, "dim_plus": self.dim_plus,
                "dim_minus": self.dim_minus, "l_plus": self.l_plus,
                "l_minus": self.l_minus, "rows": list(self.rows)}


def quotient_dimension_report(q: Polytope, dv: DiagramVertex) -> QuotientWitnessReport:
    from .lattice import quotient

    if not dv.interior:
        raise NotInteriorError("witness checks need an interior diagram vertex")
    lattice = q.face_lattice()
    qp = quotient(lattice, dv.x_plus)
    qm = quotient(lattice, dv.x_minus)
    ok = qp.dim == dv.l_minus and qm.dim == dv.l_plus
    rows = []
    for name, quot, l_wit, l_other in (
        ("plus", qp, dv.l_plus, dv.l_minus),
        ("minus", qm, dv.l_minus, dv.l_plus),
    ):
        fv = quot.f_vector()
        for k in range(l_wit, q.dim):
            bound = comb(l_other + 1, q.dim - k)
            have = fv.count(k - l_wit - 1)
            good = have >= bound
            ok = ok and good
            rows.append({"side": name, "k": k, "count": have,
                         "bound": bound, "ok": good})
    return QuotientWitnessReport(ok, qp.dim, qm.dim, dv.l_plus, dv.l_minus,
                                 tuple(rows))


@dataclass(frozen=True)
class GapReport:
    """Exact face-count gap between a polytope and one of its shadows.

    ``shadow_f_k`` counts the k-faces of the shadow's boundary (its proper
    faces): those are exactly the images of the shadow-boundary faces of
    the polytope, so the gap counts the k-faces lost to the projection.
    """

    k: int
    f_k: int
    shadow_f_k: int
    gap: int
    bound: Fraction  # 2 * ratio_bound(dim + 1, dim - k)
    ok: bool

    def to_json(self) -> dict:
        return {"k": self.k, "f_k": self.f_k, "shadow_f_k": self.shadow_f_k,
                "gap": self.gap, "bound": str(self.bound), "ok": self.ok}


def gap_check(q: Polytope, v, k: int,
              sh: ShadowPolytope | None = None) -> GapReport:
    """f_k(Q) - (proper k-faces of the shadow), exactly at least
    2 * ratio_bound(dim+1, dim-k).

    The proper-face count matters only at k = dim(shadow), where it is 0;
    counting the shadow itself there would falsify the inequality on
    simplices, whose ridge count meets the bound with equality.
    """
    if q.dim < 2:
        raise DimensionTooLowError("gap check needs dim >= 2")
    if not 0 <= k <= q.dim - 1:
        raise OutOfRangeError(f"gap check needs 0 <= k < dim, got {k}")
    if sh is None:
        sh = shadow(q, v)
    fk = q.f_vector().count(k)
    sk = sh.poly.f_vector().count(k) if k < sh.poly.dim else 0
    gap = fk - sk
    bound = 2 * ratio_bound(q.dim + 1, q.dim - k)
    return GapReport(k, fk, sk, gap, bound, Fraction(gap) >= bound)


@dataclass(frozen=True)
class ShadowDiagram:
    """Everything the overlay construction produces for one direction."""

    direction: Direction
    complexes: ShadowComplexes
    shadow: ShadowPolytope
    vertices: tuple[DiagramVertex, ...]
    boundary_ok: bool
    gap_reports: tuple[GapReport, ...]

    @property
    def interior_vertices(self) -> tuple[DiagramVertex, ...]:
        return tuple(dv for dv in self.vertices if dv.interior)

    def to_json(self) -> dict:
        return {
            "direction": self.direction.to_json(),
            "partition": self.complexes.to_json(),
            "shadow_f_vector": list(self.shadow.poly.f_vector().counts),
            "boundary_homeomorphic": self.boundary_ok,
            "diagram_vertices": [dv.to_json() for dv in self.vertices],
            "interior_count": len(self.interior_vertices),
            "gaps": [g.to_json() for g in self.gap_reports],
        }


def build_shadow_diagram(q: Polytope, direction: Direction) -> ShadowDiagram:
    """Shadow, facet partition, boundary check, diagram vertices and all
    gap checks for one verified direction."""
    if q.dim < 2:
        raise DimensionTooLowError("diagrams need dim >= 2")
    sh = shadow(q, direction)
    complexes = upper_lower(q, direction)
    verts = diagram_vertices(q, direction, complexes, sh)
    gaps = tuple(gap_check(q, direction, k, sh) for k in range(q.dim))
    ok = shadow_boundary_check(q, direction, sh, complexes)
    return ShadowDiagram(direction if isinstance(direction, Direction)
                         else Direction(_direction_vector(direction), False),
                         complexes, sh, verts, ok, gaps)
