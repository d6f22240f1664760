"""polyface: exact-arithmetic analysis of convex polytopes.

Face lattices, f-vectors and their proved lower bounds, Monte Carlo solid
angles, and orthogonal-projection shadow diagrams, all at desk scale with
rational arithmetic for every combinatorial decision.
"""
from .angles import (
    AngleEstimate,
    AngleSumReport,
    angle_sum,
    angle_sum_lower_check,
    curvature_check,
    facet_angle,
    projection_angle_check,
    solid_angle,
    solid_angle_exact,
    tangent_cone,
)
from .bounds import (
    BoundReport,
    binomial_convexity_check,
    few_vertex_bound,
    few_vertex_check,
    min_face_check,
    ratio_bound,
    unimodality_check,
    verify_main_bounds,
)
from .corpus import CorpusEntry, standard_corpus
from .errors import PolyfaceError
from .exact import Hyperplane, Scalar, Vector, affine_dim, rank
from .generators import (
    FamilySpec,
    cross_polytope,
    cube,
    cyclic,
    generate,
    prism,
    pyramid,
    random_sphere,
    simplex,
)
from .lattice import Face, FaceLattice, FVector, dual, f_vector, quotient
from .polytope import (
    Polytope,
    face_lattice,
    hull_from_points,
    load_polytope,
    polytope_from_json,
    polytope_to_json,
    save_polytope,
)
from .projection import (
    Direction,
    ShadowDiagram,
    ShadowPolytope,
    build_shadow_diagram,
    diagram_vertices,
    gap_check,
    has_interior_vertex,
    is_general_position,
    quotient_dimension_report,
    sample_direction,
    shadow,
    shadow_boundary_check,
    upper_lower,
    verify_direction,
)

__version__ = "0.1.0"
