import math

import pytest

from arc3d import (
    ArcDiagram3D,
    DegenerateChord,
    DomainError,
    PerturbationFailed,
    Vec3,
    ZeroVector,
    angle_between,
    apex_height,
    arc_center,
    arc_clearance,
    arc_frame,
    arc_plane_normal,
    arc_radius,
    build_graph,
    equal_elevation_angle,
    make_arc,
    mixed_elevation_angle,
    perturb,
    sample_arc,
    tangent_at,
    tangent_elevation,
)
from oracles import segment_pair_equal_elevation, segment_pair_mixed_elevation

O = Vec3(0.0, 0.0, 0.0)
X2 = Vec3(2.0, 0.0, 0.0)


def test_vec3_ops():
    a = Vec3(1.0, 2.0, 3.0)
    b = Vec3(-1.0, 0.5, 2.0)
    assert (a + b).as_tuple() == (0.0, 2.5, 5.0)
    assert (a - b).as_tuple() == (2.0, 1.5, 1.0)
    assert (a * 2.0).as_tuple() == (2.0, 4.0, 6.0)
    assert a.dot(b) == pytest.approx(6.0)
    assert a.cross(b).as_tuple() == (2.0 * 2.0 - 3.0 * 0.5, 3.0 * -1.0 - 1.0 * 2.0,
                                     1.0 * 0.5 - 2.0 * -1.0)
    assert Vec3(3.0, 4.0, 0.0).length == pytest.approx(5.0)
    assert Vec3(0.0, 0.0, 2.0).normalized().as_tuple() == (0.0, 0.0, 1.0)
    with pytest.raises(ZeroVector):
        O.normalized()


def test_angle_between():
    assert angle_between(Vec3(1, 0, 0), Vec3(0, 1, 0)) == pytest.approx(math.pi / 2)
    assert angle_between(Vec3(1, 0, 0), Vec3(-1, 0, 0)) == pytest.approx(math.pi)
    assert angle_between(Vec3(1, 0, 0), Vec3(5, 0, 0)) == pytest.approx(0.0)
    with pytest.raises(ZeroVector):
        angle_between(O, Vec3(1, 0, 0))


def test_equal_elevation_angle_values():
    # quarter-turn apart in the plane, both raised 45 degrees: exactly 60
    assert equal_elevation_angle(math.pi / 2, math.pi / 4) == pytest.approx(
        math.pi / 3, abs=1e-12)
    assert equal_elevation_angle(0.7, 0.0) == pytest.approx(0.7, abs=1e-12)
    assert equal_elevation_angle(0.0, 0.3) == pytest.approx(0.0, abs=1e-12)


def test_equal_elevation_matches_numeric_rays():
    for theta in (0.01, 0.5, 1.2, 2.5, math.pi):
        for beta in (0.0, 0.2, math.pi / 8, math.pi / 4):
            want = segment_pair_equal_elevation(theta, beta)
            assert equal_elevation_angle(theta, beta) == pytest.approx(
                want, abs=1e-12)
            # the halving guarantee
            assert equal_elevation_angle(theta, beta) >= theta / 2 - 1e-12


def test_mixed_elevation_angle_values():
    assert mixed_elevation_angle(math.pi / 3, math.pi / 6) == pytest.approx(
        math.acos(math.sqrt(3.0) / 4.0), abs=1e-12)
    assert mixed_elevation_angle(0.0, 0.2) == pytest.approx(0.2, abs=1e-12)


def test_mixed_elevation_matches_numeric_rays():
    for alpha in (0.0, 0.3, 1.0, math.pi / 2):
        for beta in (0.0, 0.1, 0.7):
            want = segment_pair_mixed_elevation(alpha, beta)
            assert mixed_elevation_angle(alpha, beta) == pytest.approx(
                want, abs=1e-12)
            assert mixed_elevation_angle(alpha, beta) >= beta - 1e-12


def test_closed_form_domains():
    with pytest.raises(DomainError):
        equal_elevation_angle(-0.1, 0.1)
    with pytest.raises(DomainError):
        equal_elevation_angle(0.5, math.pi / 4 + 0.01)
    with pytest.raises(DomainError):
        mixed_elevation_angle(math.pi / 2 + 0.01, 0.1)
    with pytest.raises(DomainError):
        mixed_elevation_angle(0.5, math.pi / 4)


def test_make_arc_validation():
    with pytest.raises(DegenerateChord):
        make_arc(O, O, 0.3, 0.3)
    with pytest.raises(DomainError):
        make_arc(O, X2, -0.1, 0.3)
    with pytest.raises(DomainError):
        make_arc(O, X2, 0.3, math.pi)
    with pytest.raises(DomainError):
        make_arc(O, X2, 0.3, 0.3, side=2)


def test_arc_apex_and_frame():
    # quarter-circle angles, plane tilted 45 degrees off vertical
    arc = make_arc(O, X2, math.pi / 2, math.pi / 4, side=1)
    u, v = arc_frame(arc)
    assert u.as_tuple() == pytest.approx((1.0, 0.0, 0.0))
    s = math.sqrt(2.0) / 2.0
    assert v.as_tuple() == pytest.approx((0.0, s, s), abs=1e-15)
    apex = sample_arc(arc, 3)[1]
    assert apex.as_tuple() == pytest.approx((1.0, s, s), abs=1e-12)
    assert arc_radius(arc) == pytest.approx(1.0)
    assert arc_center(arc).as_tuple() == pytest.approx((1.0, 0.0, 0.0), abs=1e-15)
    assert apex_height(arc) == pytest.approx(math.tan(math.pi / 4), abs=1e-12)
    n = arc_plane_normal(arc)
    assert abs(n.dot(u)) < 1e-15 and abs(n.dot(v)) < 1e-15


def test_straight_arc():
    arc = make_arc(O, X2, 0.0, math.pi / 2)
    assert arc_radius(arc) is None
    assert arc_center(arc) is None
    assert apex_height(arc) == 0.0
    pts = sample_arc(arc, 5)
    assert pts[2].as_tuple() == pytest.approx((1.0, 0.0, 0.0))
    assert tangent_at(arc, O).as_tuple() == pytest.approx((1.0, 0.0, 0.0))
    assert tangent_at(arc, X2).as_tuple() == pytest.approx((-1.0, 0.0, 0.0))


def test_sample_endpoints_and_radius_invariant():
    a = Vec3(0.3, -1.2, 0.0)
    b = Vec3(2.0, 0.7, 0.0)
    arc = make_arc(a, b, 1.1, 0.9, side=-1)
    pts = sample_arc(arc, 17)
    assert pts[0].as_tuple() == pytest.approx(a.as_tuple(), abs=1e-12)
    assert pts[-1].as_tuple() == pytest.approx(b.as_tuple(), abs=1e-12)
    c = arc_center(arc)
    r = arc_radius(arc)
    for p in pts:
        assert (p - c).length == pytest.approx(r, abs=1e-12)
    n = arc_plane_normal(arc)
    for p in pts:
        assert abs((p - a).dot(n)) < 1e-12


def test_tangent_chord_angle():
    a = Vec3(0.0, 0.0, 0.0)
    b = Vec3(3.0, 1.0, 0.0)
    chord = (b - a).normalized()
    for alpha in (0.2, 0.8, math.pi / 2):
        for tilt in (0.0, 0.5, math.pi / 2):
            arc = make_arc(a, b, alpha, tilt)
            ta = tangent_at(arc, a)
            tb = tangent_at(arc, b)
            assert ta.length == pytest.approx(1.0, abs=1e-12)
            assert angle_between(ta, chord) == pytest.approx(alpha, abs=1e-12)
            assert angle_between(tb, -chord) == pytest.approx(alpha, abs=1e-12)
    with pytest.raises(DomainError):
        tangent_at(make_arc(a, b, 0.2, 0.3), Vec3(9.0, 9.0, 9.0))


def test_tangent_matches_sampled_secant():
    arc = make_arc(O, X2, 0.9, 0.6, side=-1)
    pts = sample_arc(arc, 20001)
    secant = (pts[1] - pts[0]).normalized()
    assert angle_between(secant, tangent_at(arc, O)) < 1e-3


def test_tangent_elevation_value():
    arc = make_arc(O, X2, math.pi / 2, math.pi / 4)
    assert tangent_elevation(arc) == pytest.approx(math.pi / 4, abs=1e-12)
    flat = make_arc(O, X2, 0.7, 0.0)
    assert tangent_elevation(flat) == 0.0


def test_vertical_chord_uses_fallback_frame():
    arc = make_arc(O, Vec3(0.0, 0.0, 2.0), math.pi / 2, math.pi / 2)
    u, v = arc_frame(arc)
    assert u.as_tuple() == pytest.approx((0.0, 0.0, 1.0))
    # bulge direction is well defined and horizontal
    assert abs(v.z) < 1e-15
    assert v.length == pytest.approx(1.0)
    mid = sample_arc(arc, 3)[1]
    assert math.hypot(mid.x, mid.y) == pytest.approx(1.0, abs=1e-12)


def test_side_mirrors_bulge():
    plus = make_arc(O, X2, 0.8, 0.0, side=1)
    minus = make_arc(O, X2, 0.8, 0.0, side=-1)
    mp = sample_arc(plus, 3)[1]
    mm = sample_arc(minus, 3)[1]
    assert mp.y == pytest.approx(-mm.y)
    assert mp.y > 0.0


def _two_edge_diagram(pa, pb, pc, pd, arc1, arc2, params=None):
    g = build_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    return ArcDiagram3D(
        graph=g,
        positions={"a": pa, "b": pb, "c": pc, "d": pd},
        arcs=(arc1, arc2),
        method="custom",
        params=params if params is not None else {},
    )


def test_clearance_of_translated_semicircles():
    # second arc is the first translated by (0, 3, 0): clearance exactly 3
    pa, pb = O, X2
    pc, pd = Vec3(0.0, 3.0, 0.0), Vec3(2.0, 3.0, 0.0)
    d = _two_edge_diagram(
        pa, pb, pc, pd,
        make_arc(pa, pb, math.pi / 2, math.pi / 2),
        make_arc(pc, pd, math.pi / 2, math.pi / 2),
    )
    rep = arc_clearance(d, samples=64)
    assert rep.min_distance == pytest.approx(3.0, abs=1e-12)
    assert rep.argmin == (0, 1)
    assert set(rep.distances) == {(0, 1)}


def test_clearance_skips_incident_pairs():
    g = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    pa, pb, pc = O, X2, Vec3(4.0, 0.0, 0.0)
    d = ArcDiagram3D(
        graph=g,
        positions={"a": pa, "b": pb, "c": pc},
        arcs=(make_arc(pa, pb, 0.0, math.pi / 2),
              make_arc(pb, pc, 0.0, math.pi / 2)),
        method="custom",
        params={},
    )
    rep = arc_clearance(d)
    assert rep.distances == {}
    assert rep.argmin is None


def test_perturb_separates_crossing_arcs():
    # straight segments crossing at the origin; odd sample count hits the
    # crossing exactly
    pa, pb = Vec3(-1.0, 0.0, 0.0), Vec3(1.0, 0.0, 0.0)
    pc, pd = Vec3(0.0, -1.0, 0.0), Vec3(0.0, 1.0, 0.0)
    d = _two_edge_diagram(
        pa, pb, pc, pd,
        make_arc(pa, pb, 0.0, math.pi / 2),
        make_arc(pc, pd, 0.0, math.pi / 2),
    )
    assert arc_clearance(d, samples=33).min_distance == pytest.approx(0.0, abs=1e-15)
    fixed = perturb(d, epsilon_fraction=0.5, samples=33)
    assert arc_clearance(fixed, samples=33).min_distance > 1e-6
    # only the higher-indexed arc moved
    assert fixed.arcs[0] == d.arcs[0]
    assert fixed.arcs[1].in_plane_angle > 0.0
    assert fixed.params["nudges"][0] == 0.0
    assert fixed.params["nudges"][1] == pytest.approx(
        fixed.arcs[1].in_plane_angle)


def test_perturb_noop_without_collisions():
    pa, pb = O, X2
    pc, pd = Vec3(0.0, 3.0, 0.0), Vec3(2.0, 3.0, 0.0)
    d = _two_edge_diagram(
        pa, pb, pc, pd,
        make_arc(pa, pb, 0.3, math.pi / 2),
        make_arc(pc, pd, 0.3, math.pi / 2),
    )
    assert perturb(d, epsilon_fraction=0.25) is d


def test_perturb_failure_modes():
    pa, pb = Vec3(-1.0, 0.0, 0.0), Vec3(1.0, 0.0, 0.0)
    pc, pd = Vec3(0.0, -1.0, 0.0), Vec3(0.0, 1.0, 0.0)
    crossing = _two_edge_diagram(
        pa, pb, pc, pd,
        make_arc(pa, pb, 0.0, math.pi / 2),
        make_arc(pc, pd, 0.0, math.pi / 2),
    )
    with pytest.raises(PerturbationFailed) as ei:
        perturb(crossing, epsilon_fraction=0.0, samples=33)
    assert ei.value.flagged == ((0, 1),)

    # coincident endpoints can never be nudged apart
    stuck = _two_edge_diagram(
        pa, pb, pa, pb,
        make_arc(pa, pb, 0.0, math.pi / 2),
        make_arc(pa, pb, 0.0, math.pi / 2),
    )
    with pytest.raises(PerturbationFailed):
        perturb(stuck, epsilon_fraction=0.25, samples=33, budget=3)
