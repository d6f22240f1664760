"""Exact linear algebra: ranks, affine dimensions, complements."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyface.errors import MixedDimensionsError, ZeroVectorError
from polyface.exact import (
    Hyperplane,
    affine_dim,
    dot,
    format_scalar,
    null_space,
    orthogonal_complement_basis,
    parse_scalar,
    primitive,
    rank,
    solve_unique,
    span_basis,
    vector,
    wdot,
)


def vecs(*rows):
    return [vector(r) for r in rows]


class TestRank:
    def test_identity_rows(self):
        assert rank(vecs((1, 0), (0, 1))) == 2

    def test_proportional_rows(self):
        assert rank(vecs((1, 2), (2, 4))) == 1

    def test_dependent_three_by_three(self):
        # Third row is 2*(second) - (first): rank 2 by hand row reduction.
        assert rank(vecs((1, 2, 3), (4, 5, 6), (7, 8, 9))) == 2

    def test_empty(self):
        assert rank([]) == 0

    def test_mixed_dimensions_rejected(self):
        with pytest.raises(MixedDimensionsError):
            rank(vecs((1, 0), (1, 0, 0)))

    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                    min_size=1, max_size=5),
           st.integers(1, 7))
    @settings(max_examples=60, deadline=None)
    def test_invariant_under_scaling_and_swaps(self, rows, scale):
        base = [vector(r) for r in rows]
        scaled = [vector([scale * c for c in rows[0]])] + base[1:]
        assert rank(base) == rank(scaled)
        assert rank(base) == rank(list(reversed(base)))


class TestAffineDim:
    def test_empty_is_minus_one(self):
        assert affine_dim([]) == -1

    def test_single_point(self):
        assert affine_dim(vecs((3, 4))) == 0

    def test_collinear(self):
        assert affine_dim(vecs((0, 0), (1, 0), (2, 0))) == 1

    def test_triangle(self):
        assert affine_dim(vecs((0, 0), (1, 0), (0, 1))) == 2

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2),
                    min_size=1, max_size=6),
           st.data())
    @settings(max_examples=50, deadline=None)
    def test_subset_monotone(self, rows, data):
        pts = [vector(r) for r in rows]
        k = data.draw(st.integers(1, len(pts)))
        assert affine_dim(pts[:k]) <= affine_dim(pts)


class TestComplement:
    def test_axis_direction(self):
        basis = orthogonal_complement_basis(vector((0, 0, 1)))
        assert basis == [vector((1, 0, 0)), vector((0, 1, 0))]

    def test_plane_diagonal(self):
        (b,) = orthogonal_complement_basis(vector((1, 1)))
        assert dot(b, vector((1, 1))) == 0

    def test_generic_direction_exact(self):
        v = vector((1, 2, 3))
        basis = orthogonal_complement_basis(v)
        assert len(basis) == 2
        for b in basis:
            assert dot(b, v) == 0
        assert dot(basis[0], basis[1]) == 0
        assert rank(basis) == 2

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVectorError):
            orthogonal_complement_basis(vector((0, 0)))

    def test_weighted_complement(self):
        weights = (Fraction(2), Fraction(3))
        v = vector((1, 1))
        (b,) = orthogonal_complement_basis(v, weights)
        assert wdot(b, v, weights) == 0

    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
    @settings(max_examples=80, deadline=None)
    def test_complement_properties(self, coords):
        if all(c == 0 for c in coords):
            return
        v = vector(coords)
        basis = orthogonal_complement_basis(v)
        assert len(basis) == len(coords) - 1
        assert all(dot(b, v) == 0 for b in basis)
        assert rank(basis) == len(coords) - 1


class TestSolvers:
    def test_null_space_of_plane(self):
        ns = null_space(vecs((1, 2, 3)), 3)
        assert len(ns) == 2
        assert all(dot(n, vector((1, 2, 3))) == 0 for n in ns)

    def test_null_space_empty_rows(self):
        ns = null_space([], 2)
        assert len(ns) == 2

    def test_solve_unique(self):
        sol = solve_unique(vecs((2, 0), (1, 1)), [Fraction(4), Fraction(3)])
        assert sol == vector((2, 1))

    def test_solve_singular(self):
        assert solve_unique(vecs((1, 1), (2, 2)), [Fraction(1), Fraction(2)]) is None

    def test_solve_inconsistent(self):
        assert solve_unique(vecs((1, 1), (2, 2)), [Fraction(1), Fraction(3)]) is None

    def test_span_basis(self):
        rows = vecs((1, 0, 0), (2, 0, 0), (0, 1, 0))
        basis = span_basis(rows)
        assert basis == [rows[0], rows[2]]


class TestScalarsAndPlanes:
    def test_scalar_round_trip(self):
        for text in ("3/2", "-7/3", "5", "0"):
            assert format_scalar(parse_scalar(text)) == text

    def test_primitive(self):
        assert primitive(vector((Fraction(1, 2), Fraction(3, 4)))) == vector((2, 3))
        assert primitive(vector((-2, 4))) == vector((-1, 2))

    def test_hyperplane_sides(self):
        plane = Hyperplane(vector((1, 0)), Fraction(1))
        assert plane.side(vector((0, 5))) == -1
        assert plane.side(vector((1, -2))) == 0
        assert plane.side(vector((2, 0))) == 1
        assert plane.contains(vector((1, 7)))

    def test_hyperplane_zero_normal_rejected(self):
        with pytest.raises(ZeroVectorError):
            Hyperplane(vector((0, 0)), Fraction(1))
