"""The verification corpora.

``standard_corpus`` is the fixed desk-scale collection shared by the test
suite and the batch CLI: every generator family through dimension 6 plus
20 seeded random hulls.  Its members are chosen so that every statistical
acceptance margin is comfortably observable; in particular, faces of
codimension >= 3 of every member have facet-angle sums bounded away from 1
(moment-curve polytopes of dimension >= 3 and random 4-dimensional hulls
carry nearly flat faces with sums above 0.999, which no sample budget can
separate from 1 by a fixed margin).

``extended_corpus`` adds exactly those flat instances back.  Every exact
check (Euler, ratio bounds, minimum counts, projection gaps, interior
vertices) runs over the extended corpus as well; only the fixed-margin
curvature sweep is restricted to the standard one.
"""
from __future__ import annotations

from dataclasses import dataclass

from .generators import (
    cross_polytope,
    cube,
    cyclic,
    prism,
    pyramid,
    random_sphere,
    simplex,
)
from .polytope import Polytope, hull_from_points

RANDOM_COUNT = 20

# A well-rounded convex pentagon (moment-curve polygons are nearly flat at
# their middle vertices, which would spoil prism/pyramid margins).
PENTAGON_POINTS = [(4, 0), (1, 3), (-3, 2), (-3, -2), (1, -3)]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    dim: int
    n: int
    polytope: Polytope


def _entry(name: str, family: str, p: Polytope) -> CorpusEntry:
    return CorpusEntry(name, family, p.dim, p.n_vertices, p)


def standard_corpus(include_random: bool = True) -> list[CorpusEntry]:
    """Deterministic: identical across runs and platforms."""
    entries: list[CorpusEntry] = []
    for d in range(1, 7):
        entries.append(_entry(f"simplex-{d}", "simplex", simplex(d)))
    for d in range(2, 7):
        entries.append(_entry(f"cube-{d}", "cube", cube(d)))
    for d in range(2, 7):
        entries.append(_entry(f"cross-{d}", "cross", cross_polytope(d)))
    for n in (5, 6, 7, 8):
        entries.append(_entry(f"cyclic-{n}-2", "cyclic", cyclic(n, 2)))
    pentagon = hull_from_points(PENTAGON_POINTS)
    entries.append(_entry("pyramid-square", "pyramid", pyramid(cube(2))))
    entries.append(_entry("pyramid-pentagon", "pyramid", pyramid(pentagon)))
    entries.append(_entry("pyramid-cube3", "pyramid", pyramid(cube(3))))
    entries.append(_entry("pyramid-cross3", "pyramid", pyramid(cross_polytope(3))))
    entries.append(_entry("prism-triangle", "prism", prism(simplex(2))))
    entries.append(_entry("prism-pentagon", "prism", prism(pentagon)))
    entries.append(_entry("prism-simplex3", "prism", prism(simplex(3))))
    entries.append(_entry("prism-cross3", "prism", prism(cross_polytope(3))))
    entries.append(_entry("pyramid-prism-triangle", "pyramid",
                          pyramid(prism(simplex(2)))))
    entries.append(_entry("prism-pyramid-square", "prism",
                          prism(pyramid(cube(2)))))
    if include_random:
        for seed in range(RANDOM_COUNT):
            d = 2 + seed % 2  # dimensions 2 and 3
            n = 8 + seed % 5  # 8..12 requested points
            p = random_sphere(d, n, seed)
            entries.append(_entry(f"random-{d}-{n}-s{seed}", "random-sphere", p))
    return entries


def flat_extras() -> list[CorpusEntry]:
    """Members with nearly flat low-dimensional faces: moment-curve
    polytopes of dimension >= 3 and random 4-dimensional hulls."""
    entries = [
        _entry(f"cyclic-{n}-{d}", "cyclic", cyclic(n, d))
        for n, d in [(6, 3), (6, 4), (7, 4), (8, 4), (7, 5), (8, 5), (8, 6)]
    ]
    for seed in (2, 5, 8, 11, 14, 17):
        p = random_sphere(4, 8 + seed % 5, seed)
        entries.append(_entry(f"random-4-{8 + seed % 5}-s{seed}",
                              "random-sphere", p))
    return entries


def extended_corpus(include_random: bool = True) -> list[CorpusEntry]:
    return standard_corpus(include_random) + flat_extras()


def corpus_polytopes(min_dim: int = 1, max_dim: int = 7,
                     include_random: bool = True) -> list[CorpusEntry]:
    return [e for e in standard_corpus(include_random)
            if min_dim <= e.dim <= max_dim]
