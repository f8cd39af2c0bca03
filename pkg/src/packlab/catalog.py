"""Built-in polytopes and ready-to-run packing seeds.

The circulant Gram matrix cir(1, -1, ..., -1) of n+2 pairwise tangent
n-spheres defines the classical tangent-swap packings for n = 2, 3; the
four-wall matrix cir(1, -1, 0, -1) is Boyd's example of a packing with a
divergent wall pair; cir(1, -1, -1) is the ideal hyperbolic triangle whose
mirror orbit is the degenerate n = 1 packing.

The planar seed (-10, 18, 23, 27) ships with its exact geometry: outer
circle of radius 1/10 about the origin and the three inscribed circles
with rational centers; all pairwise inner products equal -1 exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .coxeter import CoxeterPolytope, build_polytope
from .errors import ConfigError
from .exact import rat
from .inversive import EuclideanSphere
from .orbit import Cluster, initial_cluster, seed_cluster_from_curvatures, with_curvatures


def circulant(first_row) -> list[list[Fraction]]:
    row = [rat(x) for x in first_row]
    n = len(row)
    return [[row[(j - i) % n] for j in range(n)] for i in range(n)]


def apollonian_gram(n: int):
    """Gram matrix of the rank-(n+2) tangent-cluster polytope: unit diagonal,
    off-diagonal 1/(1-n).  A Coxeter polytope only for n = 2, 3."""
    if n < 2:
        raise ConfigError("tangent-cluster polytope needs n >= 2")
    return circulant([Fraction(1)] + [Fraction(1, 1 - n)] * (n + 1))


BOYD_GRAM = circulant([1, -1, 0, -1])
IDEAL_TRIANGLE_GRAM = circulant([1, -1, -1])

# Outer circle (0,0) radius 1/10 plus the three inscribed circles; each
# center is exact and every tangency is an exact inner product -1.
FIGURE_SEED_CURVATURES = (-10, 18, 23, 27)
FIGURE_SEED_GEOMETRY = (
    EuclideanSphere(kind="sphere", curvature=Fraction(-10), center=(Fraction(0), Fraction(0))),
    EuclideanSphere(kind="sphere", curvature=Fraction(18), center=(Fraction(2, 45), Fraction(0))),
    EuclideanSphere(kind="sphere", curvature=Fraction(23), center=(Fraction(-6, 115), Fraction(1, 46))),
    EuclideanSphere(kind="sphere", curvature=Fraction(27), center=(Fraction(-4, 135), Fraction(-1, 18))),
)

# Two horizontal lines y = 0 (interior below) and y = 2 (interior above)
# with two unit circles between them: a band-shaped, unbounded packing.
BAND_SEED_CURVATURES = (0, 0, 1, 1)
BAND_SEED_GEOMETRY = (
    EuclideanSphere(kind="hyperplane", normal=(Fraction(0), Fraction(-1)), offset=Fraction(0)),
    EuclideanSphere(kind="hyperplane", normal=(Fraction(0), Fraction(1)), offset=Fraction(-2)),
    EuclideanSphere(kind="sphere", curvature=Fraction(1), center=(Fraction(0), Fraction(1))),
    EuclideanSphere(kind="sphere", curvature=Fraction(1), center=(Fraction(2), Fraction(1))),
)


def polytope(name: str) -> CoxeterPolytope:
    key = name.lower().replace("_", "-")
    if key in ("apollonian2", "apollonian:n=2"):
        return build_polytope(apollonian_gram(2))
    if key in ("apollonian3", "apollonian:n=3"):
        return build_polytope(apollonian_gram(3))
    if key == "boyd":
        return build_polytope(BOYD_GRAM)
    if key in ("ideal-triangle", "triangle"):
        return build_polytope(IDEAL_TRIANGLE_GRAM)
    raise ConfigError(
        f"unknown catalog polytope {name!r}; available: apollonian2, apollonian3, "
        "boyd, ideal-triangle"
    )


def packing_seed(name: str, curvatures=None) -> Cluster:
    """A ready cluster for a catalog name, optionally with custom curvatures.

    apollonian2 defaults to the (-10, 18, 23, 27) quadruple with exact
    geometry; apollonian3 to (-1, 2, 2, 3, 3); boyd to the bounded integer
    quadruple (-1, 2, 4, 3); ideal-triangle (mirror action) to (2, 2, -1).
    """
    key = name.lower().replace("_", "-")
    p = polytope(name)
    if key in ("apollonian2", "apollonian:n=2"):
        if curvatures is None or tuple(map(rat, curvatures)) == tuple(
            map(rat, FIGURE_SEED_CURVATURES)
        ):
            return seed_cluster_from_curvatures(
                p, FIGURE_SEED_CURVATURES, realization=FIGURE_SEED_GEOMETRY
            )
        return seed_cluster_from_curvatures(p, curvatures)
    if key in ("apollonian3", "apollonian:n=3"):
        return seed_cluster_from_curvatures(p, curvatures or (-1, 2, 2, 3, 3))
    if key == "boyd":
        return seed_cluster_from_curvatures(p, curvatures or (-1, 2, 4, 3))
    if key in ("ideal-triangle", "triangle"):
        c = initial_cluster(p, mode="mirrors")
        return with_curvatures(c, curvatures or (2, 2, -1))
    raise ConfigError(f"unknown catalog packing {name!r}")


def band_seed() -> Cluster:
    """The unbounded band packing: two parallel lines and two unit circles."""
    p = polytope("apollonian2")
    return seed_cluster_from_curvatures(
        p, BAND_SEED_CURVATURES, realization=BAND_SEED_GEOMETRY
    )
