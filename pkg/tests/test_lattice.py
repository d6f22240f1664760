"""Face lattices, f-vectors, duals, quotients."""
import pytest

from polyface.errors import EulerViolationError, NotAFaceError
from polyface.generators import (
    cross_polytope,
    cube,
    cyclic,
    pyramid,
    simplex,
)
from polyface.lattice import FVector, dual, f_vector, quotient


class TestLatticeConstruction:
    def test_square_face_count(self):
        assert len(cube(2).face_lattice()) == 10  # empty + 4 + 4 + itself

    def test_three_cube_face_count(self):
        assert len(cube(3).face_lattice()) == 28  # 1 + 8 + 12 + 6 + 1

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_simplex_face_count(self, d):
        # Every vertex subset is a face: 2^(d+1) in total.
        assert len(simplex(d).face_lattice()) == 2 ** (d + 1)

    def test_closure_invariant(self):
        p = cube(3)
        lattice = p.face_lattice()
        for face in lattice.faces:
            if face.dim in (-1, p.dim):
                continue
            containing = [f.vertex_set for f in p.facets
                          if face.vertex_set <= f.vertex_set]
            inter = frozenset.intersection(*containing)
            assert inter == face.vertex_set

    def test_graded_covers(self):
        lattice = cube(3).face_lattice()
        for lo, hi in lattice.covers:
            assert lattice.faces[hi].dim == lattice.faces[lo].dim + 1
            assert lattice.faces[lo].vertex_set < lattice.faces[hi].vertex_set

    def test_face_in_enough_facets(self):
        # A j-face lies in at least dim - j facets; exactly dim at the
        # vertices of a simple polytope.
        for p in (cube(3), cyclic(6, 4), pyramid(cube(2))):
            lattice = p.face_lattice()
            for face in lattice.faces:
                if face.dim in (-1, p.dim):
                    continue
                count = len(p.facets_containing(face.vertex_set))
                assert count >= p.dim - face.dim
        simple = cube(4)
        for v in range(simple.n_vertices):
            assert len(simple.facets_containing(frozenset([v]))) == 4


class TestFVector:
    def test_simplex_binomials(self):
        assert tuple(simplex(3).f_vector().counts) == (4, 6, 4)

    def test_cube_oracle(self):
        assert tuple(cube(3).f_vector().counts) == (8, 12, 6)

    def test_cyclic_six_four(self):
        assert tuple(cyclic(6, 4).f_vector().counts) == (6, 15, 18, 9)

    def test_conventions(self):
        fv = cube(3).f_vector()
        assert fv.count(-1) == 1
        assert fv.count(3) == 1
        assert fv.count(7) == 0

    def test_euler_enforced(self):
        with pytest.raises(EulerViolationError):
            FVector(3, (8, 12, 7))

    def test_incidence_count_consistency(self):
        for p in (cube(3), cross_polytope(4), cyclic(7, 4)):
            by_facets = sum(len(f.vertex_set) for f in p.facets)
            by_vertices = sum(
                len(p.facets_containing(frozenset([v])))
                for v in range(p.n_vertices)
            )
            assert by_facets == by_vertices


class TestDual:
    def test_cube_dualizes_to_cross(self):
        d = dual(cube(3).face_lattice())
        assert tuple(d.f_vector().counts) == (6, 12, 8)

    def test_simplex_self_dual(self):
        fv = tuple(simplex(4).f_vector().counts)
        dv = tuple(dual(simplex(4).face_lattice()).f_vector().counts)
        assert dv == fv[::-1] == fv

    def test_double_dual_involution(self):
        lattice = cyclic(6, 4).face_lattice()
        dd = dual(dual(lattice))
        assert tuple(dd.f_vector().counts) == tuple(lattice.f_vector().counts)
        assert len(dd) == len(lattice)
        assert len(dd.covers) == len(lattice.covers)

    def test_dual_reverses_covers(self):
        lattice = cube(2).face_lattice()
        assert len(dual(lattice).covers) == len(lattice.covers)


class TestQuotient:
    def test_cube_by_vertex_is_triangle(self):
        lattice = cube(3).face_lattice()
        q = quotient(lattice, frozenset([0]))
        assert q.dim == 2
        assert tuple(q.f_vector().counts) == (3, 3)

    def test_by_facet_is_point(self):
        p = cube(3)
        q = quotient(p.face_lattice(), p.facets[0].vertex_set)
        assert q.dim == 0
        assert tuple(q.f_vector().counts) == ()

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_simplex_by_vertex(self, d):
        q = quotient(simplex(d).face_lattice(), frozenset([0]))
        assert q.dim == d - 1
        assert len(q) == 2 ** d

    def test_face_count_identity(self):
        # f_j(P/G) equals the number of (j + dim G + 1)-faces containing G.
        p = cyclic(6, 4)
        lattice = p.face_lattice()
        g = lattice.faces_of_dim(1)[0]
        q = quotient(lattice, g)
        for j in range(q.dim):
            direct = sum(
                1 for f in lattice.faces_of_dim(j + g.dim + 1)
                if g.vertex_set < f.vertex_set
            )
            assert q.f_vector().count(j) == direct

    def test_rejects_improper_faces(self):
        lattice = cube(2).face_lattice()
        with pytest.raises(NotAFaceError):
            quotient(lattice, frozenset())
        with pytest.raises(NotAFaceError):
            quotient(lattice, frozenset(range(4)))
        with pytest.raises(NotAFaceError):
            quotient(lattice, frozenset([0, 3]))  # a diagonal, not a face

    def test_quotient_euler(self):
        lattice = cube(4).face_lattice()
        for face in lattice.faces_of_dim(1):
            quotient(lattice, face).f_vector()  # Euler asserted inside


def test_f_vector_helper_matches_method():
    lattice = cube(3).face_lattice()
    assert tuple(f_vector(lattice).counts) == tuple(lattice.f_vector().counts)
