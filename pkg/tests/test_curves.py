import numpy as np
import pytest

from src.common.errors import DegenerateCurveError, InputValidationError, NotImmersedError
from src.curves.curve_io import curve_from_csv, read_curve, write_curve
from src.curves.discrete_curve import DiscreteCurve
from src.curves.finite_differences import differentiate, integrate_samples, integrate_velocity
from src.curves.frenet_frame import frenet_frame
from src.curves.resample_uniform import great_circle_angles, resample_sphere_uniform, resample_uniform
from src.curves.speed import plane_curvature, speed


def test_curve_needs_three_finite_samples():
    with pytest.raises(InputValidationError):
        DiscreteCurve(np.zeros((2, 2)))
    with pytest.raises(InputValidationError):
        DiscreteCurve(np.array([[0.0, 0.0], [1.0, np.nan], [2.0, 0.0]]))


def test_curve_samples_are_read_only():
    c = DiscreteCurve(np.arange(6.0).reshape(3, 2))
    with pytest.raises(ValueError):
        c.samples[0, 0] = 5.0


def test_parameter_step_open_and_closed():
    assert DiscreteCurve(np.zeros((5, 1)) + np.arange(5.0)[:, None]).dt == pytest.approx(0.25)
    assert DiscreteCurve(np.arange(10.0).reshape(5, 2), closed=True).dt == pytest.approx(0.2)


def test_circle_speed_and_curvature(circle):
    c = circle(n=512, radius=2.0)
    np.testing.assert_allclose(speed(c), 4 * np.pi, rtol=1e-3)
    np.testing.assert_allclose(plane_curvature(c), 0.5, rtol=1e-3)


def test_clockwise_circle_has_negative_curvature(circle):
    c = circle(n=256)
    flipped = DiscreteCurve(c.samples * np.array([1.0, -1.0]), closed=True)
    assert np.all(plane_curvature(flipped) < 0)


def test_plane_curvature_rejects_stalled_curve():
    c = DiscreteCurve(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]))
    with pytest.raises(NotImmersedError, match="sample 1"):
        plane_curvature(c)


def _ellipse_curvature(t: np.ndarray, a: float = 2.0, b: float = 1.0) -> np.ndarray:
    theta = 2 * np.pi * t
    return a * b / (a ** 2 * np.sin(theta) ** 2 + b ** 2 * np.cos(theta) ** 2) ** 1.5


def test_ellipse_curvature_at_vertex(ellipse):
    assert plane_curvature(ellipse(n=1024))[0] == pytest.approx(2.0, abs=1e-3)


def test_parabola_speed():
    t = np.linspace(0.0, 1.0, 1024)
    c = DiscreteCurve(np.column_stack([t ** 2, t]))
    assert np.abs(speed(c) - np.sqrt(4 * t ** 2 + 1)).max() < 1e-3


def test_speed_and_curvature_follow_rigid_motions(wavy_arc, ellipse, rng):
    for c in (wavy_arc(n=512), ellipse(n=512)):
        angle = rng.uniform(-np.pi, np.pi)
        rot = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
        moved = DiscreteCurve(c.samples @ rot.T + np.array([1.5, -0.7]), closed=c.closed)
        assert np.abs(speed(moved) - speed(c)).max() < 1e-10
        assert np.abs(plane_curvature(moved) - plane_curvature(c)).max() < 1e-10


@pytest.mark.parametrize("closed", [True, False])
def test_curvature_error_quarters_when_samples_double(closed):
    def max_error(n):
        t = np.arange(n) / n if closed else np.linspace(0.0, 0.5, n)
        theta = 2 * np.pi * t
        c = DiscreteCurve(np.column_stack([2 * np.cos(theta), np.sin(theta)]), closed=closed)
        return np.abs(plane_curvature(c) - _ellipse_curvature(t)).max()

    ratio = max_error(256) / max_error(512)
    assert 3.4 <= ratio <= 4.6


@pytest.mark.parametrize("n", [64, 65])
def test_integrate_velocity_inverts_open_derivative(wavy_arc, n):
    c = wavy_arc(n=n)
    v = differentiate(c.samples, False, c.dt)
    back = integrate_velocity(v, c.samples[0], False, c.dt)
    np.testing.assert_allclose(back, c.samples, atol=1e-10)


def test_integrate_velocity_inverts_closed_derivative(ellipse):
    c = ellipse(n=256)
    v = differentiate(c.samples, True, c.dt)
    back = integrate_velocity(v, c.samples[0], True, c.dt)
    np.testing.assert_allclose(back, c.samples, atol=1e-10)


def test_integrate_samples_open_and_closed():
    t = np.linspace(0.0, 1.0, 101)
    assert integrate_samples(t, False, 0.01) == pytest.approx(0.5)
    assert integrate_samples(np.ones(10), True, 0.1) == pytest.approx(1.0)


def test_resample_uniform_segment():
    c = DiscreteCurve(np.array([[0.0, 0.0], [0.1, 0.0], [1.0, 0.0]]))
    out = resample_uniform(c, 5)
    np.testing.assert_allclose(out.samples[:, 0], [0.0, 0.25, 0.5, 0.75, 1.0], atol=1e-12)


def test_resample_uniform_drops_repeated_points_and_rejects_point_curves():
    c = DiscreteCurve(np.array([[0.0, 0.0], [0.0, 0.0], [2.0, 0.0], [4.0, 0.0]]))
    np.testing.assert_allclose(resample_uniform(c, 3).samples[:, 0], [0.0, 2.0, 4.0], atol=1e-12)
    with pytest.raises(DegenerateCurveError):
        resample_uniform(DiscreteCurve(np.ones((4, 2))), 5)


def test_resample_uniform_is_idempotent_on_uniform_curves(circle):
    for c in (circle(n=64), resample_uniform(DiscreteCurve(np.column_stack([np.linspace(0, 1, 7), np.zeros(7)])), 7)):
        np.testing.assert_allclose(resample_uniform(c, c.n).samples, c.samples, atol=1e-12)
    t = np.linspace(0.0, 1.0, 40)
    arc = DiscreteCurve(np.column_stack([np.cos(2.0 * t), np.sin(2.0 * t)]))
    np.testing.assert_allclose(resample_uniform(arc, 40).samples, arc.samples, atol=1e-12)


def test_resample_quarter_circle_to_uniform_arc_length():
    u = np.linspace(0.0, 1.0, 400)
    theta = 0.5 * np.pi * u ** 2
    quarter = DiscreteCurve(np.column_stack([np.cos(theta), np.sin(theta)]))
    out = resample_uniform(quarter, 65).samples
    chords = np.linalg.norm(np.diff(out, axis=0), axis=1)
    assert (chords.max() - chords.min()) / chords.mean() < 1e-3
    s = 0.5 * np.pi * np.arange(65) / 64
    np.testing.assert_allclose(out, np.column_stack([np.cos(s), np.sin(s)]), atol=1e-3)


def test_resample_sphere_uniform_equalizes_arcs():
    lon = np.radians([0.0, 2.0, 5.0, 9.0, 14.0, 20.0, 27.0])
    pts = np.column_stack([np.cos(lon), np.sin(lon), np.zeros_like(lon)])
    out, aux = resample_sphere_uniform(pts, 40, np.full(lon.size, 3.0))
    np.testing.assert_allclose(np.linalg.norm(out, axis=1), 1.0, atol=1e-12)
    angles = great_circle_angles(out)
    np.testing.assert_allclose(angles, np.radians(27.0) / 39, rtol=1e-9)
    np.testing.assert_allclose(aux, 3.0)


def test_frenet_frame_of_helix_is_orthonormal():
    t = np.linspace(0.0, 1.0, 200)
    c = DiscreteCurve(np.column_stack([np.cos(4 * t), np.sin(4 * t), 0.5 * t]))
    f = frenet_frame(c)
    for a in (f.T, f.N, f.B):
        np.testing.assert_allclose(np.linalg.norm(a, axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(np.sum(f.T * f.N, axis=1), 0.0, atol=1e-12)
    np.testing.assert_allclose(f.B, np.cross(f.T, f.N), atol=1e-12)
    # нормаль винтовой линии смотрит на ось
    np.testing.assert_allclose(f.N[100, :2], -c.samples[100, :2], atol=1e-3)


def test_frenet_frame_falls_back_on_straight_line():
    t = np.linspace(0.0, 1.0, 20)
    c = DiscreteCurve(np.column_stack([t, 2 * t, -t]))
    f = frenet_frame(c)
    np.testing.assert_allclose(np.sum(f.T * f.N, axis=1), 0.0, atol=1e-12)
    np.testing.assert_allclose(np.linalg.norm(f.N, axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(f.N, np.broadcast_to(f.N[0], f.N.shape), atol=1e-10)


def test_frenet_frame_rejects_point_curve():
    with pytest.raises(DegenerateCurveError):
        frenet_frame(DiscreteCurve(np.ones((5, 3))))


def test_curve_json_and_csv_files(tmp_path, ellipse):
    c = ellipse(n=16)
    write_curve(c, tmp_path / "c.json")
    back = read_curve(tmp_path / "c.json")
    assert back.closed
    np.testing.assert_array_equal(back.samples, c.samples)

    write_curve(c, tmp_path / "c.csv")
    back = read_curve(tmp_path / "c.csv", closed=True)
    np.testing.assert_array_equal(back.samples, c.samples)


def test_csv_errors_carry_line_number():
    with pytest.raises(InputValidationError, match="line 2"):
        curve_from_csv("0,0\n1,x\n2,2\n")
