import cmath
import math

import numpy as np
import pytest

from cp1graft.angles import Angle
from cp1graft.circles import Circle, circle_through, transform_circle
from cp1graft.configurations import (
    PAIRS,
    EllipticTriple,
    FramedTriple,
    Kind,
    build_configuration,
    dual_circle,
    from_elliptic_triple,
    inversive_product,
    map_between,
    separation_signs,
    to_elliptic_triple,
    verify_vertex_rotation,
)
from cp1graft.errors import (
    DegenerateConfiguration,
    DegenerateTriple,
    InvalidInput,
    MismatchedInputs,
    NotElliptic,
    NotHyperbolic,
    PathologicalFraming,
)
from cp1graft.mobius import INF, MobiusMap, RiemannPoint, rotation_angle, rotation_invariant
from cp1graft.triangles import atomic_classify, realize

from helpers import random_configuration, random_euclidean, random_mobius

REAL = Circle(0, 0.5j, 0)
UNIT = Circle(1, 0, -1)
IMAG = Circle.line(0, 1j)


def octahedral():
    return build_configuration(REAL, UNIT, IMAG)


def hyperbolic_quarter():
    q = Angle.pi(1, 4)
    return realize(atomic_classify(q, q, q)).configuration


def cfg_distance(c1, c2):
    return max(a.distance(b) for a, b in zip(c1.circles, c2.circles))


def test_octahedral_is_spherical():
    cfg = octahedral()
    assert cfg.kind is Kind.SPHERICAL
    assert len(cfg.distinct_points()) == 6
    with pytest.raises(NotHyperbolic):
        dual_circle(cfg)


def test_lines_through_origin_degenerate():
    lines = [Circle.line(0, cmath.exp(1j * t)) for t in (0.1, 0.9, 2.0)]
    with pytest.raises(DegenerateConfiguration):
        build_configuration(*lines)


def test_disjoint_pair_degenerate():
    with pytest.raises(DegenerateConfiguration):
        build_configuration(UNIT, Circle.from_center_radius(5, 1), REAL)
    with pytest.raises(DegenerateConfiguration):
        build_configuration(UNIT, UNIT, REAL)


def test_hyperbolic_triangle_dual_is_unit_circle():
    cfg = hyperbolic_quarter()
    assert cfg.kind is Kind.HYPERBOLIC
    dual = dual_circle(cfg)
    assert dual.distance(UNIT) < 1e-9
    for c in cfg.circles:
        assert abs(inversive_product(dual, c)) < 1e-9


def test_dual_circle_equivariant(rng):
    cfg = hyperbolic_quarter()
    for _ in range(20):
        m = random_mobius(rng)
        moved = cfg.transformed(m)
        assert moved.kind is Kind.HYPERBOLIC
        assert dual_circle(moved).distance(transform_circle(m, UNIT)) < 1e-7


def test_euclidean_has_four_points(rng):
    for _ in range(50):
        cfg = random_euclidean(rng)
        assert len(cfg.distinct_points()) == 4
        assert cfg.common_point is not None
        order = cfg.cyclic_order_at_common_point()
        assert sorted(order) == [0, 1, 2]


def test_generic_counts_and_separation_symmetry(rng):
    for _ in range(300):
        cfg = random_configuration(rng)
        if cfg.kind is Kind.EUCLIDEAN:
            continue
        assert len(cfg.distinct_points()) == 6
        signs = separation_signs(cfg)
        assert len(set(signs)) == 1
        assert signs[0] == (cfg.kind is Kind.SPHERICAL)


def test_kind_is_mobius_invariant(rng):
    for _ in range(100):
        cfg = random_configuration(rng)
        m = random_mobius(rng)
        assert cfg.transformed(m).kind is cfg.kind


def test_octahedral_triple():
    t = to_elliptic_triple(octahedral())
    for g in t.maps:
        assert abs(g.tr2) < 1e-12
        assert rotation_invariant(g) == pytest.approx((math.pi, math.pi))
    report = verify_vertex_rotation(t, octahedral())
    assert report.passed(1e-10)
    cfg = from_elliptic_triple(t)
    assert cfg_distance(cfg, octahedral()) < 1e-9


def test_euclidean_triangle_rotations():
    r = realize(atomic_classify(Angle.pi(1, 6), Angle.pi(1, 3), Angle.pi(1, 2)))
    assert r.configuration.kind is Kind.EUCLIDEAN
    t = to_elliptic_triple(r.configuration)
    rots = sorted(min(rotation_invariant(g)) for g in t.maps)
    assert rots == pytest.approx([math.pi / 3, 2 * math.pi / 3, math.pi])


def test_roundtrip_both_ways(rng):
    for _ in range(200):
        cfg = random_configuration(rng)
        t = to_elliptic_triple(cfg)
        back = from_elliptic_triple(t)
        assert cfg_distance(back, cfg) < 1e-8
        assert to_elliptic_triple(back).distance(t) < 1e-8
        assert verify_vertex_rotation(t, cfg).passed(1e-8)


def test_coaxial_triple_is_degenerate():
    def rot(t):
        return MobiusMap(np.diag([cmath.exp(1j * t), cmath.exp(-1j * t)]))

    t = EllipticTriple((rot(0.4), rot(0.7), rot(-1.1)))
    with pytest.raises(DegenerateTriple):
        from_elliptic_triple(t)


def test_elliptic_triple_validation():
    s = MobiusMap([[0, 1], [-1, 0]])
    with pytest.raises(NotElliptic):
        EllipticTriple((MobiusMap([[1, 1], [0, 1]]), s, s))
    with pytest.raises(InvalidInput):
        EllipticTriple((s, s, s))  # S^3 = S, not the identity
    with pytest.raises(InvalidInput):
        EllipticTriple((s, s))


def test_framed_triple_pathological():
    r = realize(atomic_classify(Angle.pi(1, 6), Angle.pi(1, 3), Angle.pi(1, 2)))
    t = to_elliptic_triple(r.configuration)
    with pytest.raises(PathologicalFraming):
        FramedTriple(t, (INF, INF, INF))


def test_vertex_rotation_mismatch():
    cfg = octahedral()
    t = to_elliptic_triple(random_configuration(np.random.default_rng(3)))
    with pytest.raises(MismatchedInputs):
        verify_vertex_rotation(t, cfg)


def test_permuted_configuration_mismatch(rng):
    cfg = random_configuration(rng, Kind.SPHERICAL)
    t = to_elliptic_triple(cfg)
    c1, c2, c3 = cfg.circles
    with pytest.raises(MismatchedInputs):
        verify_vertex_rotation(t, build_configuration(c2, c3, c1))


def test_map_between_moves_configuration(rng):
    for _ in range(50):
        cfg = random_configuration(rng)
        m = random_mobius(rng)
        moved = cfg.transformed(m)
        pts1 = [cfg.intersections[p][0] for p in PAIRS]
        pts2 = [m(p) for p in pts1]
        found = map_between(cfg, pts1, moved, pts2)
        assert found.distance(m) < 1e-6


def test_map_between_rejects_mismatch(rng):
    cfg1 = random_configuration(rng, Kind.SPHERICAL)
    cfg2 = random_configuration(rng, Kind.SPHERICAL)
    pts1 = [cfg1.intersections[p][0] for p in PAIRS]
    pts2 = [cfg2.intersections[p][0] for p in PAIRS]
    with pytest.raises(MismatchedInputs):
        map_between(cfg1, pts1, cfg2, pts2)


def test_other_point():
    cfg = octahedral()
    x, y = cfg.points((0, 1))
    assert cfg.other_point((0, 1), x).isclose(y)
    assert isinstance(x, RiemannPoint)
