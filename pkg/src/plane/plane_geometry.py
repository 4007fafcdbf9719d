# -*- coding: utf-8 -*-
"""
Скорость и кривизна SRV-образа плоской кривой c̃ = q(c).
- ω̃ = sqrt(ω̇²/(4ω) + ω³κ²)
- c̃: иммерсия тогда и только тогда, когда κ и ω̇ не имеют общих нулей
- κ̃ω̃ = κω + φ̇,  φ: угол вектора (ω̇, 2ω²κ)
φ берётся через atan2 и разворачивается вдоль отсчётов; φ̇: численная производная.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError, NotImmersedError
from src.curves.discrete_curve import DiscreteCurve, parameter_step, require_immersion
from src.curves.finite_differences import differentiate
from src.curves.speed import plane_curvature, speed

# Порог нуля: доля от масштаба соответствующей последовательности
EPS_ZERO_RELATIVE = 1e-7

# На концах открытой кривой дважды продифференцированный SRV-образ неточен:
# при сравнении с аналитикой отбрасываем столько отсчётов с каждой стороны
EDGE_SAMPLES = 2


@dataclass(frozen=True, eq=False)
class PlaneGeometry:
    omega: np.ndarray
    omega_dot: np.ndarray
    kappa: np.ndarray
    omega_tilde: np.ndarray
    kappa_tilde: np.ndarray
    phi: np.ndarray
    phi_dot: np.ndarray

    @property
    def turning_density(self) -> np.ndarray:
        """κω: подынтегральное выражение полной кривизны."""
        return self.kappa * self.omega


def _as_array(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _zero_tolerance(x: np.ndarray) -> float:
    return EPS_ZERO_RELATIVE * float(np.max(np.abs(x))) if x.size else 0.0


def srv_speed_analytic(omega, omega_dot, kappa) -> np.ndarray:
    omega, omega_dot, kappa = _as_array(omega), _as_array(omega_dot), _as_array(kappa)
    bad = np.flatnonzero(omega <= 0.0)
    if bad.size:
        raise NotImmersedError(int(bad[0]))
    return np.sqrt(omega_dot ** 2 / (4.0 * omega) + omega ** 3 * kappa ** 2)


def srv_is_immersion(omega_dot, kappa) -> tuple[bool, np.ndarray]:
    omega_dot, kappa = _as_array(omega_dot), _as_array(kappa)
    both = (np.abs(kappa) <= _zero_tolerance(kappa)) & (np.abs(omega_dot) <= _zero_tolerance(omega_dot))
    idx = np.flatnonzero(both)
    return idx.size == 0, idx


def _unwrapped_rate(phi: np.ndarray, closed: bool, dt: float) -> np.ndarray:
    u = np.unwrap(phi)
    if not closed:
        return differentiate(u, False, dt)
    # продолжаем развёрнутый угол через точку склейки
    jump = np.angle(np.exp(1j * (phi[0] - phi[-1])))
    winding = u[-1] + jump - u[0]
    nxt = np.append(u[1:], u[0] + winding)
    prv = np.insert(u[:-1], 0, u[-1] - winding)
    return (nxt - prv) / (2.0 * dt)


def _srv_curvature_parts(omega, omega_dot, kappa, closed, dt):
    omega_tilde = srv_speed_analytic(omega, omega_dot, kappa)
    phi = np.arctan2(2.0 * omega ** 2 * kappa, omega_dot)
    phi_dot = _unwrapped_rate(phi, closed, dt)
    kappa_tilde = np.full_like(omega_tilde, np.nan)
    defined = omega_tilde > _zero_tolerance(omega_tilde)
    kappa_tilde[defined] = (kappa[defined] * omega[defined] + phi_dot[defined]) / omega_tilde[defined]
    return omega_tilde, kappa_tilde, phi, phi_dot


def srv_curvature_analytic(omega, omega_dot, kappa, closed: bool = False,
                           dt: float | None = None) -> np.ndarray:
    """κ̃ по формуле кривизны; NaN там, где ω̃ практически ноль."""
    omega, omega_dot, kappa = _as_array(omega), _as_array(omega_dot), _as_array(kappa)
    if not (omega.shape == omega_dot.shape == kappa.shape):
        raise InputValidationError("omega, omega_dot and kappa must have equal length")
    ok, idx = srv_is_immersion(omega_dot, kappa)
    if not ok:
        raise NotImmersedError(int(idx[0]))
    if dt is None:
        dt = parameter_step(omega.size, closed)
    return _srv_curvature_parts(omega, omega_dot, kappa, closed, dt)[1]


def plane_geometry(c: DiscreteCurve) -> PlaneGeometry:
    """Все величины утверждения для кривой. Необщие нули не требуются: там κ̃ = NaN."""
    omega = speed(c)
    require_immersion(c, omega)
    kappa = plane_curvature(c)
    omega_dot = differentiate(omega, c.closed, c.dt)
    omega_tilde, kappa_tilde, phi, phi_dot = _srv_curvature_parts(omega, omega_dot, kappa, c.closed, c.dt)
    return PlaneGeometry(omega=omega, omega_dot=omega_dot, kappa=kappa, omega_tilde=omega_tilde,
                         kappa_tilde=kappa_tilde, phi=np.angle(np.exp(1j * phi)), phi_dot=phi_dot)


def interior(values, closed: bool) -> np.ndarray:
    """Отсчёты без краевых; у замкнутой кривой краёв нет."""
    v = _as_array(values)
    if closed or v.shape[0] <= 2 * EDGE_SAMPLES:
        return v
    return v[EDGE_SAMPLES:-EDGE_SAMPLES]


def collinearity_residual(points: np.ndarray) -> float:
    """Максимальное расстояние до прямой наименьших квадратов, делённое на длину ломаной."""
    pts = _as_array(points)
    centred = pts - pts.mean(axis=0)
    direction = np.linalg.svd(centred, full_matrices=False)[2][0]
    off_line = centred - np.outer(centred @ direction, direction)
    length = float(np.sum(np.linalg.norm(np.diff(pts, axis=0), axis=1)))
    if length == 0.0:
        return 0.0
    return float(np.max(np.linalg.norm(off_line, axis=1)) / length)
