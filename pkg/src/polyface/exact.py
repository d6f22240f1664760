"""Exact rational scalars, vectors and linear algebra.

Every combinatorial decision in the package (side of a hyperplane, rank,
affine dimension) reduces to computations done here, so everything is
exact: arbitrary-precision rationals, no floats, no tolerances.  Scalars
are ``fractions.Fraction`` values, which are always stored in lowest terms
with a positive denominator.  Vectors are plain tuples of scalars.

Hyperplane normals are kept unnormalized; all geometric sign tests in the
package are scale invariant, which is what keeps coordinates rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import MixedDimensionsError, ZeroVectorError

Scalar = Fraction
Vector = tuple[Fraction, ...]


def scalar(value: int | str | float | Fraction) -> Fraction:
    """Coerce a value to an exact scalar. Strings use the "p/q" form."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # Floats are accepted for convenience but converted exactly.
        return Fraction(value).limit_denominator(10**12)
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    """Serialize a scalar as "p/q", or "p" when the denominator is 1."""
    return str(value)


def parse_scalar(text: str) -> Fraction:
    return Fraction(text)


def vector(coords: Iterable) -> Vector:
    v = tuple(scalar(c) for c in coords)
    if not v:
        raise MixedDimensionsError("a vector needs at least one coordinate")
    return v


def _check_same_dim(vectors: Sequence[Vector]) -> int:
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise MixedDimensionsError(f"mixed vector dimensions: {sorted(dims)}")
    return dims.pop() if dims else 0


def dot(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise MixedDimensionsError(f"dot of dim {len(u)} with dim {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def wdot(u: Vector, v: Vector, weights: Sequence[Fraction]) -> Fraction:
    """Inner product with a diagonal metric.

    Affine restrictions (a facet treated as a polytope in its own right)
    carry a diagonal metric recording the squared lengths of their basis
    vectors in the original space; this is the pairing that makes angle
    computations in restricted coordinates agree with the ambient ones.
    """
    if not (len(u) == len(v) == len(weights)):
        raise MixedDimensionsError("weighted dot with inconsistent dimensions")
    return sum((a * b * w for a, b, w in zip(u, v, weights)), Fraction(0))


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise MixedDimensionsError("adding vectors of different dimensions")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise MixedDimensionsError("subtracting vectors of different dimensions")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Vector) -> Vector:
    """Scale a nonzero rational vector to coprime integers (sign kept)."""
    if is_zero(v):
        raise ZeroVectorError("cannot reduce the zero vector")
    mult = lcm(*(a.denominator for a in v))
    ints = [int(a * mult) for a in v]
    g = gcd(*ints)
    return tuple(Fraction(a // g) for a in ints)


def rank(rows: Sequence[Vector]) -> int:
    """Exact rank of a list of row vectors over the rationals."""
    if not rows:
        return 0
    dim = _check_same_dim(rows)
    work = [list(r) for r in rows]
    r = 0
    for col in range(dim):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        for i in range(r + 1, len(work)):
            if work[i][col] != 0:
                f = work[i][col] / prow[col]
                row = work[i]
                for j in range(col, dim):
                    row[j] -= f * prow[j]
        r += 1
        if r == len(work):
            break
    return r


def span_basis(rows: Sequence[Vector]) -> list[Vector]:
    """A subset of the given rows forming a basis of their span."""
    if not rows:
        return []
    _check_same_dim(rows)
    basis: list[Vector] = []
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        work = list(row)
        for erow, p in zip(echelon, pivots):
            if work[p] != 0:
                f = work[p] / erow[p]
                for j in range(len(work)):
                    work[j] -= f * erow[j]
        p = next((j for j, a in enumerate(work) if a != 0), None)
        if p is not None:
            basis.append(row)
            echelon.append(work)
            pivots.append(p)
    return basis


def null_space(rows: Sequence[Vector], dim: int | None = None) -> list[Vector]:
    """Basis of {x : r . x = 0 for every row r}, as primitive vectors."""
    if dim is None:
        dim = _check_same_dim(rows)
    elif rows:
        if _check_same_dim(rows) != dim:
            raise MixedDimensionsError("rows do not match the stated dimension")
    work = [list(r) for r in rows]
    pivot_cols: list[int] = []
    r = 0
    for col in range(dim):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col] / prow[col]
                row = work[i]
                for j in range(dim):
                    row[j] -= f * prow[j]
        pivot_cols.append(col)
        r += 1
    free_cols = [c for c in range(dim) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -work[i][fc] / work[i][pc]
        basis.append(primitive(tuple(vec)))
    return basis


def solve_unique(rows: Sequence[Vector], rhs: Sequence[Fraction]) -> Vector | None:
    """Solve a linear system, returning the solution only if it is unique.

    Returns None when the system is inconsistent or underdetermined.
    """
    if len(rows) != len(rhs):
        raise MixedDimensionsError("system rows and right-hand side differ")
    if not rows:
        return None
    dim = _check_same_dim(rows)
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(dim):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col] / prow[col]
                row = work[i]
                for j in range(col, dim + 1):
                    row[j] -= f * prow[j]
        pivot_cols.append(col)
        r += 1
    for i in range(r, len(work)):
        if work[i][dim] != 0:
            return None  # inconsistent
    if r < dim:
        return None  # not unique
    sol = [Fraction(0)] * dim
    for i, pc in enumerate(pivot_cols):
        sol[pc] = work[i][dim] / work[i][pc]
    return tuple(sol)


def affine_dim(points: Sequence[Vector]) -> int:
    """Affine dimension: -1 for no points, 0 for one, else rank of differences."""
    if not points:
        return -1
    _check_same_dim(points)
    if len(points) == 1:
        return 0
    base = points[0]
    return rank([vsub(p, base) for p in points[1:]])


def affine_basis_indices(points: Sequence[Vector]) -> list[int]:
    """Indices [i0, i1, ...] of points whose differences from points[i0]
    form a basis of the affine hull.  Greedy and deterministic."""
    if not points:
        return []
    _check_same_dim(points)
    chosen = [0]
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    base = points[0]
    for i in range(1, len(points)):
        work = list(vsub(points[i], base))
        for erow, p in zip(echelon, pivots):
            if work[p] != 0:
                f = work[p] / erow[p]
                for j in range(len(work)):
                    work[j] -= f * erow[j]
        p = next((j for j, a in enumerate(work) if a != 0), None)
        if p is not None:
            chosen.append(i)
            echelon.append(work)
            pivots.append(p)
    return chosen


def orthogonal_complement_basis(
    v: Vector, weights: Sequence[Fraction] | None = None
) -> list[Vector]:
    """Rational basis of the orthogonal complement of a nonzero vector.

    Unnormalized Gram-Schmidt over the standard basis: the returned dim-1
    vectors are pairwise orthogonal and orthogonal to v, but not unit
    length (unit vectors would force irrational coordinates).  A diagonal
    metric may be supplied; orthogonality is then with respect to it.
    """
    if is_zero(v):
        raise ZeroVectorError("complement of the zero vector is undefined")
    dim = len(v)
    w = tuple(weights) if weights is not None else tuple(Fraction(1) for _ in v)
    if len(w) != dim:
        raise MixedDimensionsError("metric does not match vector dimension")
    basis: list[Vector] = [v]
    norms: list[Fraction] = [wdot(v, v, w)]
    out: list[Vector] = []
    for axis in range(dim):
        e = tuple(Fraction(1 if j == axis else 0) for j in range(dim))
        for b, nb in zip(basis, norms):
            c = wdot(e, b, w) / nb
            if c != 0:
                e = vsub(e, vscale(c, b))
        if not is_zero(e):
            e = primitive(e)
            out.append(e)
            basis.append(e)
            norms.append(wdot(e, e, w))
        if len(out) == dim - 1:
            break
    return out


@dataclass(frozen=True)
class Hyperplane:
    """An oriented rational hyperplane {x : normal . x = offset}.

    The outward convention used throughout: a point x is inside the
    halfspace when normal . x <= offset.
    """

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        if is_zero(self.normal):
            raise ZeroVectorError("hyperplane normal must be nonzero")

    def evaluate(self, point: Vector) -> Fraction:
        return dot(self.normal, point) - self.offset

    def side(self, point: Vector) -> int:
        """-1 strictly inside, 0 on the hyperplane, +1 strictly outside."""
        value = self.evaluate(point)
        return (value > 0) - (value < 0)

    def contains(self, point: Vector) -> bool:
        return self.evaluate(point) == 0
