import numpy as np
import pytest

from src.common.errors import InputValidationError, NotImmersedError
from src.curves.discrete_curve import DiscreteCurve
from src.curves.finite_differences import differentiate, integrate_samples
from src.srv.l2_distance import l2_distance
from src.srv.srv_geodesic import srv_geodesic
from src.srv.srv_transform import closure_gap, srv_image, srv_inverse, srv_transform


def _segment(direction, n=33):
    t = np.linspace(0.0, 1.0, n)[:, None]
    return DiscreteCurve(t * np.asarray(direction, dtype=float))


def _rotation(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def test_unit_segment_has_constant_srv():
    s = srv_transform(_segment([1.0, 0.0]))
    np.testing.assert_allclose(s.q, np.tile([1.0, 0.0], (s.n, 1)), atol=1e-12)


def test_circle_srv_norm(circle):
    s = srv_transform(circle(n=256))
    # |q|² = ω, а ω ≈ 2π
    np.testing.assert_allclose(np.sum(s.q ** 2, axis=1), 2 * np.pi, rtol=1e-3)


def test_srv_of_quadratic_segment():
    t = np.linspace(0.0, 1.0, 1024)
    s = srv_transform(DiscreteCurve(np.column_stack([t ** 2 + t, np.zeros_like(t)])))
    assert np.abs(s.q - np.column_stack([np.sqrt(2 * t + 1), np.zeros_like(t)])).max() < 1e-3
    np.testing.assert_array_equal(s.basepoint, [0.0, 0.0])


def test_unit_circle_srv(circle):
    c = circle(n=512)
    theta = 2 * np.pi * c.params
    expected = np.sqrt(2 * np.pi) * np.column_stack([-np.sin(theta), np.cos(theta)])
    assert np.abs(srv_transform(c).q - expected).max() < 1e-3


def _elastic_norm(c: DiscreteCurve, h: np.ndarray) -> float:
    """Норма поля h: нормальная часть D_s h с весом 1, касательная с весом 1/4."""
    v = differentiate(c.samples, c.closed, c.dt)
    omega = np.linalg.norm(v, axis=1)
    tangent = v / omega[:, None]
    dh = differentiate(h, c.closed, c.dt)
    along = np.sum(dh * tangent, axis=1)
    density = (np.sum(dh ** 2, axis=1) - along ** 2 + 0.25 * along ** 2) / omega
    return float(np.sqrt(integrate_samples(density, c.closed, c.dt)))


def test_srv_distance_linearises_to_elastic_norm(wavy_arc):
    c = wavy_arc(n=2048)
    t = c.params
    fields = [np.column_stack([np.sin(3 * t) + 0.5 * t ** 2, t * np.cos(2 * t)]),
              np.column_stack([np.cos(5 * t), np.exp(-t) * np.sin(4 * t)])]
    base = srv_transform(c)
    for h in fields:
        ratio = {eps: l2_distance(base, srv_transform(DiscreteCurve(c.samples + eps * h))) / eps
                 for eps in (1e-2, 1e-3)}
        extrapolated = (10.0 * ratio[1e-3] - ratio[1e-2]) / 9.0
        assert extrapolated == pytest.approx(_elastic_norm(c, h), rel=1e-2)


def test_srv_rejects_non_immersion():
    c = DiscreteCurve(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(NotImmersedError):
        srv_transform(c)


@pytest.mark.parametrize("closed", [False, True])
def test_srv_round_trip(closed, wavy_arc, ellipse):
    c = ellipse(n=256) if closed else wavy_arc(n=257)
    back = srv_inverse(srv_transform(c))
    diameter = float(np.linalg.norm(c.samples.max(axis=0) - c.samples.min(axis=0)))
    assert np.abs(back.samples - c.samples).max() < 1e-6 * diameter
    assert back.closed == closed


def test_translation_invariance(wavy_arc):
    c0, c1 = wavy_arc(n=128), wavy_arc(n=128, phase=1.0)
    moved = DiscreteCurve(c0.samples + np.array([3.0, -2.0]))
    d = l2_distance(srv_transform(c0), srv_transform(c1))
    assert l2_distance(srv_transform(moved), srv_transform(c1)) == pytest.approx(d, abs=1e-12)


def test_rotation_equivariance(wavy_arc):
    c = wavy_arc(n=128)
    r = _rotation(0.7)
    s = srv_transform(c)
    rotated = srv_transform(DiscreteCurve(c.samples @ r.T))
    np.testing.assert_allclose(rotated.q, s.q @ r.T, atol=1e-12)


def test_triangle_inequality(wavy_arc):
    s = [srv_transform(wavy_arc(n=64, phase=p)) for p in (0.0, 1.3, 2.9)]
    assert l2_distance(s[0], s[2]) <= l2_distance(s[0], s[1]) + l2_distance(s[1], s[2]) + 1e-12


def test_distance_rejects_mixed_shapes(circle, wavy_arc):
    with pytest.raises(InputValidationError):
        l2_distance(srv_transform(circle(n=128)), srv_transform(wavy_arc(n=128)))


def test_geodesic_midpoint_between_orthogonal_segments():
    path = srv_geodesic(_segment([1.0, 0.0]), _segment([0.0, 1.0]), 3)
    np.testing.assert_allclose(path.srvs[1].q, 0.5, atol=1e-12)
    np.testing.assert_allclose(path.curves[1].samples[-1], [np.sqrt(2) / 4, np.sqrt(2) / 4], atol=1e-12)
    assert all(path.immersed)


def test_geodesic_endpoints_and_length(wavy_arc):
    c0, c1 = wavy_arc(n=65), wavy_arc(n=65, phase=2.0)
    path = srv_geodesic(c0, c1, 7)
    assert len(path.curves) == 7
    np.testing.assert_allclose(path.curves[0].samples, c0.samples, atol=1e-10)
    np.testing.assert_allclose(path.curves[-1].samples, c1.samples, atol=1e-10)
    assert path.length() == pytest.approx(l2_distance(srv_transform(c0), srv_transform(c1)), rel=1e-12)


def test_geodesic_flags_vanishing_srv():
    path = srv_geodesic(_segment([1.0, 0.0]), _segment([-1.0, 0.0]), 3)
    assert path.immersed == (True, False, True)


def test_closed_geodesic_reports_closure_gaps(circle, ellipse):
    path = srv_geodesic(circle(n=128), ellipse(n=128), 5)
    assert path.closure_gaps[0] < 1e-12
    assert path.closure_gaps[-1] < 1e-12
    assert all(g >= 0.0 for g in path.closure_gaps)


def test_geodesic_needs_two_steps(wavy_arc):
    with pytest.raises(InputValidationError):
        srv_geodesic(wavy_arc(), wavy_arc(), 1)


def test_srv_image_is_curve_of_q(circle):
    s = srv_transform(circle(n=64))
    image = srv_image(s)
    assert image.closed
    np.testing.assert_array_equal(image.samples, s.q)
    assert closure_gap(s) < 1e-12
