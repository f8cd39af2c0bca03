import random
from fractions import Fraction as F

import pytest

import packlab as pl
from packlab.errors import NormalizationError, PreconditionError
from packlab.inversive import (
    DISJOINT,
    IDENTICAL,
    INTERSECTING,
    NESTED,
    ORTHOGONAL,
    TANGENT,
    EuclideanSphere,
    SphereVector,
    classify_pair,
    render_svg,
    sphere_from_vector,
    vector_from_sphere,
)


def test_sphere_from_vector_unit_circle():
    s = sphere_from_vector((1, 0, 0, F(1, 2)))
    assert s.kind == "sphere"
    assert s.curvature == 1
    assert s.center == (0, 0)
    assert s.radius == 1


def test_sphere_from_vector_hyperplane():
    s = sphere_from_vector((0, 1, 0, F(7, 2)))
    assert s.kind == "hyperplane"
    assert s.normal == (1, 0)
    assert s.offset == F(7, 2)
    assert s.radius == float("inf")


def test_bounding_circle_orientation():
    # curvature -10: radius 1/10, negatively oriented (interior outside)
    v = vector_from_sphere(
        EuclideanSphere(kind="sphere", curvature=-10, center=(0, 0))
    )
    s = sphere_from_vector(v)
    assert s.curvature == -10
    assert s.radius == F(1, 10)
    assert s.orientation == -1


def test_norm_validation():
    with pytest.raises(NormalizationError):
        SphereVector((1, 0, 0, 1))  # (v, v) = 2


def test_round_trip_and_negation():
    rng = random.Random(5)
    for _ in range(25):
        k = F(rng.randint(1, 30), rng.randint(1, 7)) * rng.choice((1, -1))
        c = (F(rng.randint(-20, 20), 3), F(rng.randint(-20, 20), 7))
        s = EuclideanSphere(kind="sphere", curvature=k, center=c)
        v = vector_from_sphere(s)
        assert v.norm() == 1
        back = sphere_from_vector(v)
        assert back == s
        flipped = sphere_from_vector(v.negate())
        assert flipped.curvature == -k
        assert flipped.center == c


def test_hyperplane_round_trip():
    s = EuclideanSphere(kind="hyperplane", normal=(F(3, 5), F(4, 5)), offset=F(2))
    v = vector_from_sphere(s)
    assert v.norm() == 1
    assert sphere_from_vector(v).same_locus(s)
    with pytest.raises(NormalizationError):
        vector_from_sphere(EuclideanSphere(kind="hyperplane", normal=(1, 1), offset=0))


def test_classify_pairs(apollonian_seed):
    vs = [vector_from_sphere(s) for s in apollonian_seed.euclidean_spheres()]
    for i in range(4):
        for j in range(i + 1, 4):
            assert classify_pair(vs[i], vs[j]) == TANGENT
            assert vs[i].pair(vs[j]) == -1
        assert classify_pair(vs[i], vs[i]) == IDENTICAL
    # symmetry
    rng = random.Random(2)
    for _ in range(10):
        a, b = rng.choice(vs), rng.choice(vs)
        assert classify_pair(a, b) == classify_pair(b, a)


def test_classify_other_cases():
    unit = vector_from_sphere(EuclideanSphere(kind="sphere", curvature=1, center=(0, 0)))
    # a line through the origin crosses the unit circle at right angles
    diameter = SphereVector((0, 1, 0, 0))
    assert classify_pair(unit, diameter) == ORTHOGONAL
    far = vector_from_sphere(EuclideanSphere(kind="sphere", curvature=1, center=(10, 0)))
    assert classify_pair(unit, far) == DISJOINT
    close = vector_from_sphere(
        EuclideanSphere(kind="sphere", curvature=1, center=(F(1, 2), 0))
    )
    assert classify_pair(unit, close) == INTERSECTING
    inside = vector_from_sphere(
        EuclideanSphere(kind="sphere", curvature=4, center=(F(1, 8), 0))
    )
    assert classify_pair(unit, inside) == NESTED


def test_tangency_metric_consistency(apollonian_seed):
    # tangent positive-curvature pairs: |c1 - c2|^2 == (r1 + r2)^2 exactly
    spheres = apollonian_seed.euclidean_spheres()
    for i in range(1, 4):
        for j in range(i + 1, 4):
            a, b = spheres[i], spheres[j]
            d2 = sum((x - y) ** 2 for x, y in zip(a.center, b.center))
            assert d2 == (a.radius + b.radius) ** 2


def test_render_svg_empty():
    doc = render_svg([])
    assert doc.startswith("<?xml")
    assert "<svg" in doc and "</svg>" in doc
    assert "<circle" not in doc


def test_render_svg_root_quadruple(apollonian_seed):
    spheres = apollonian_seed.euclidean_spheres()
    doc = render_svg(spheres, labels=True)
    assert doc.count("<circle") == 4
    assert 'r="0.1"' in doc  # the bounding circle has radius 1/10
    assert ">27<" in doc  # integer curvature labels


def test_render_svg_band():
    band = pl.band_seed()
    doc = render_svg(band.euclidean_spheres())
    assert doc.count("<line") == 2
    assert doc.count("<circle") == 2


def test_render_rejects_higher_dimension():
    v = vector_from_sphere(
        EuclideanSphere(kind="sphere", curvature=1, center=(0, 0, 0))
    )
    with pytest.raises(PreconditionError):
        render_svg([sphere_from_vector(v)])
