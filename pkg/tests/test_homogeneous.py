import numpy as np
import pytest

from src.common.errors import InputValidationError, LiftUndefinedError, NotImmersedError
from src.curves.discrete_curve import DiscreteCurve
from src.homogeneous.group_srv import body_velocity, group_srv, group_srv_inverse
from src.homogeneous.homo_distance import (chart_distance, great_circle_arc, homo_chart, homo_distance,
                                           homo_objective)
from src.homogeneous.homo_geodesic import homo_geodesic
from src.homogeneous.horizontal_lift import RotationCurve, horizontal_lift, initial_frame
from src.homogeneous.so3 import (E1, E3, hat, is_rotation, minimal_rotation, rotation_about_e3, so3_distance,
                                 so3_exp, so3_log, vee)
from src.homogeneous.sphere_curve import SphereCurve, sphere_curve_from_dict, sphere_curve_to_dict, sphere_exp
from src.srv.l2_distance import l2_distance
from src.srv.srv_transform import srv_transform


def _tangent_plane_curve(xy: np.ndarray, aux=None) -> SphereCurve:
    """Кривая на S² как образ плоской кривой при exp в точке e₃."""
    v = np.column_stack([xy, np.zeros(xy.shape[0])])
    return SphereCurve(sphere_exp(np.broadcast_to(E3, v.shape), v), aux)


def _wiggle(n: int = 65, phase: float = 0.0, aux=None) -> SphereCurve:
    t = np.linspace(0.0, 1.0, n)
    return _tangent_plane_curve(np.column_stack([0.8 * t - 0.3, 0.25 * np.sin(3 * t + phase)]), aux)


# ---------- SO(3) ----------

def test_hat_vee_and_exp_log(rng):
    v = rng.normal(size=3) * 0.5
    np.testing.assert_array_equal(vee(hat(v)), v)
    np.testing.assert_allclose(hat(v), -hat(v).T)
    r = so3_exp(v)
    assert is_rotation(r)
    np.testing.assert_allclose(so3_log(r), v, atol=1e-12)
    assert so3_distance(np.eye(3), r) == pytest.approx(np.linalg.norm(v), abs=1e-12)


def test_minimal_rotation():
    b = np.array([0.0, 0.6, 0.8])
    r = minimal_rotation(E3, b)
    np.testing.assert_allclose(r @ E3, b, atol=1e-12)
    np.testing.assert_allclose(r @ np.cross(E3, b), np.cross(E3, b), atol=1e-12)
    np.testing.assert_array_equal(minimal_rotation(E3, E3), np.eye(3))
    assert minimal_rotation(E3, -E3) is None


def test_initial_frame_covers_south_pole():
    for p in (E3, -E3, E1):
        frame = initial_frame(p)
        assert is_rotation(frame)
        np.testing.assert_allclose(frame[:, 2], p, atol=1e-12)


# ---------- sphere curves ----------

def test_sphere_exp():
    np.testing.assert_allclose(sphere_exp(E3, np.pi / 2 * E1), E1, atol=1e-15)
    np.testing.assert_array_equal(sphere_exp(E3, np.zeros(3)), E3)
    with pytest.raises(InputValidationError, match="not tangent"):
        sphere_exp(E3, np.array([0.0, 0.1, 0.2]))


def test_sphere_curve_validation():
    with pytest.raises(InputValidationError, match="unit vectors"):
        SphereCurve([[0.0, 0.0, 2.0], E1, E3])
    with pytest.raises(InputValidationError, match="aux has 2 values"):
        SphereCurve([E3, E1, E3], aux=[0.0, 1.0])
    with pytest.raises(InputValidationError):
        SphereCurve([E3, E1])


def test_sphere_curve_dict_round_trip():
    g = _wiggle(n=9, aux=np.linspace(0.0, 1.0, 9))
    back = sphere_curve_from_dict(sphere_curve_to_dict(g, {"id": "x"}))
    np.testing.assert_array_equal(back.points, g.points)
    np.testing.assert_array_equal(back.aux, g.aux)
    with pytest.raises(InputValidationError, match="S2"):
        sphere_curve_from_dict({"kind": "curve", "dim": 2, "points": [[0, 0]]})


# ---------- lift and group SRV ----------

def test_horizontal_lift_projects_and_is_horizontal():
    g = _wiggle()
    lift = horizontal_lift(g)
    np.testing.assert_allclose(lift.project(), g.points, atol=1e-12)
    np.testing.assert_allclose(body_velocity(lift)[:, 2], 0.0, atol=1e-10)


def test_horizontal_lift_failures():
    with pytest.raises(LiftUndefinedError):
        horizontal_lift(SphereCurve([E3, -E3, E1]))
    with pytest.raises(NotImmersedError):
        horizontal_lift(SphereCurve([E3, E3, E1]))
    with pytest.raises(InputValidationError, match="initial frame"):
        horizontal_lift(_wiggle(), start=np.eye(3) @ so3_exp(np.array([0.3, 0.0, 0.0])))


def test_group_srv_round_trip():
    lift = horizontal_lift(_wiggle())
    s = group_srv(lift)
    assert s.xi.shape == (lift.n - 1, 3)
    np.testing.assert_allclose(group_srv_inverse(s).frames, lift.frames, atol=1e-12)


def test_group_srv_of_one_parameter_subgroup():
    v = np.array([0.3, -1.2, 0.5])
    curve = RotationCurve(so3_exp(np.linspace(0.0, 1.0, 33)[:, None] * v))
    np.testing.assert_allclose(group_srv(curve).xi, np.tile(v / np.sqrt(np.linalg.norm(v)), (32, 1)), atol=1e-12)


# ---------- distance ----------

def test_distance_to_itself_is_zero():
    g = _wiggle()
    result = homo_distance(g, g)
    assert result.distance == pytest.approx(0.0, abs=1e-10)
    assert result.theta == pytest.approx(0.0, abs=1e-6)


def test_distance_is_invariant_under_common_rotation():
    g1, g2 = _wiggle(), _wiggle(phase=0.8)
    r = so3_exp(np.array([0.4, -0.9, 0.3]))
    d = homo_distance(g1, g2).distance
    assert d > 0.0
    assert homo_distance(g1.rotated(r), g2.rotated(r)).distance == pytest.approx(d, abs=1e-6)


def test_distance_does_not_depend_on_lift_gauge():
    g1, g2 = _wiggle(), _wiggle(phase=0.8)
    c1 = homo_chart(g1)
    base = chart_distance(c1, homo_chart(g2)).distance
    regauged = homo_chart(g2, start=initial_frame(g2.points[0]) @ rotation_about_e3(1.3))
    assert chart_distance(c1, regauged).distance == pytest.approx(base, abs=1e-8)


def test_theta_search_matches_brute_force():
    g1 = great_circle_arc(E3, E1, np.pi / 6, 65)
    g2 = great_circle_arc(E3, np.array([np.cos(1.0), np.sin(1.0), 0.0]), np.pi / 6, 65)
    c1, c2 = homo_chart(g1), homo_chart(g2)
    thetas = np.linspace(-np.pi, np.pi, 100001)
    brute = min(homo_objective(c1, c2, th) for th in thetas)
    d = chart_distance(c1, c2).distance
    assert d ** 2 <= brute + 1e-12
    assert d ** 2 == pytest.approx(brute, abs=1e-6)


def test_small_curves_behave_like_plane_curves():
    n = 257
    t = np.linspace(0.0, 1.0, n)
    segment = np.column_stack([0.04 * (2 * t - 1), np.zeros(n)])
    bump = np.column_stack([0.04 * (2 * t - 1), 0.01 * np.sin(np.pi * t)])
    planar = l2_distance(srv_transform(DiscreteCurve(segment)), srv_transform(DiscreteCurve(bump)))
    spherical = homo_distance(_tangent_plane_curve(segment), _tangent_plane_curve(bump)).distance
    assert spherical == pytest.approx(planar, rel=0.02)


def test_aux_offset_adds_weighted_gap():
    g = _wiggle()
    aux = np.linspace(0.0, 0.5, g.n)
    a = SphereCurve(g.points, aux)
    b = SphereCurve(g.points, aux + 0.3)
    assert homo_distance(a, b, aux_weight=2.0).distance == pytest.approx(0.6, abs=1e-9)


def test_reparam_never_increases_distance():
    g1, g2 = _wiggle(), _wiggle(phase=0.8)
    plain = homo_distance(g1, g2).distance
    aligned = homo_distance(g1, g2, reparam=True)
    assert aligned.distance <= plain + 1e-12
    assert aligned.warp is not None


def test_distance_input_checks():
    with pytest.raises(InputValidationError, match="sample count"):
        homo_distance(_wiggle(n=65), _wiggle(n=33))
    with pytest.raises(InputValidationError, match="aux weight"):
        homo_distance(_wiggle(), _wiggle(), aux_weight=0.0)
    with pytest.raises(InputValidationError, match="aux"):
        homo_distance(_wiggle(aux=np.zeros(65)), _wiggle())


# ---------- geodesic ----------

def test_geodesic_endpoints_and_length():
    g1, g2 = _wiggle(), _wiggle(phase=0.8)
    path = homo_geodesic(g1, g2, 5)
    assert len(path.curves) == 5
    np.testing.assert_allclose(path.curves[0].points, g1.points, atol=1e-6)
    np.testing.assert_allclose(path.curves[-1].points, g2.points, atol=1e-6)
    assert path.length() == pytest.approx(path.distance, rel=1e-6)


def test_geodesic_carries_aux():
    g1 = _wiggle(aux=np.linspace(0.0, 1.0, 65))
    g2 = _wiggle(phase=0.8, aux=np.linspace(0.2, 0.6, 65))
    path = homo_geodesic(g1, g2, 3, aux_weight=0.5)
    np.testing.assert_allclose(path.curves[0].aux, g1.aux, atol=1e-9)
    np.testing.assert_allclose(path.curves[-1].aux, g2.aux, atol=1e-9)
    assert all(c.aux is not None for c in path.curves)


def test_geodesic_needs_two_steps():
    with pytest.raises(InputValidationError):
        homo_geodesic(_wiggle(), _wiggle(), 1)


def test_thirty_degree_geodesic_length_matches_distance():
    g1 = great_circle_arc(E3, E1, np.pi / 6, 65)
    g2 = great_circle_arc(np.array([0.0, np.sin(0.4), np.cos(0.4)]), E1, np.pi / 6, 65)
    path = homo_geodesic(g1, g2, 64)
    assert path.distance > 0.0
    assert path.length() == pytest.approx(path.distance, rel=1e-3)
    np.testing.assert_allclose(path.curves[-1].points, g2.points, atol=1e-6)


def _wiggle_at(t: np.ndarray, phase: float = 0.0) -> SphereCurve:
    return _tangent_plane_curve(np.column_stack([0.8 * t - 0.3, 0.25 * np.sin(3 * t + phase)]))


def test_distance_survives_common_warp():
    t = np.linspace(0.0, 1.0, 512)
    gamma = t + 0.2 * t * (1.0 - t)
    plain = homo_distance(_wiggle_at(t), _wiggle_at(t, 0.8)).distance
    warped = homo_distance(_wiggle_at(gamma), _wiggle_at(gamma, 0.8)).distance
    assert plain > 0.0
    assert warped == pytest.approx(plain, rel=5e-3)


def test_equator_arc_has_constant_algebra_srv():
    angle = 2.0
    g = great_circle_arc(E1, np.array([0.0, 1.0, 0.0]), angle, 129)
    norms = np.linalg.norm(group_srv(horizontal_lift(g)).xi, axis=1)
    np.testing.assert_allclose(norms, np.sqrt(angle), rtol=1e-6)
    assert np.ptp(norms) < 1e-6
