# -*- coding: utf-8 -*-
"""
Расстояние между кривыми на S² (и S²×R) через SRV на SO(3):
    d² = min_{x ∈ K} [ d_H(α₁(0), α₂(0)x)² + ‖q(α₁) − Ad_{x⁻¹} q(α₂)‖²_{L²} ] + aux-слагаемое,
K = SO(2) вокруг e₃, x = Rz(θ). Поиск θ: сетка из 720 точек, затем уточнение
ограниченным методом Брента между соседями лучшего узла сетки.
Вещественный канал aux (вес λ) даёт обычное скалярное SRV-слагаемое:
(λa₁(0) − λa₂(0))² + ‖q(λa₁) − q(λa₂)‖²; от θ оно не зависит.
Опционально: фактор по Diff⁺: чередование θ и DP по (ξ, q_aux).
"""

import sys
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.homogeneous.group_srv import AlgebraSrv, group_srv
from src.homogeneous.horizontal_lift import horizontal_lift
from src.homogeneous.so3 import rotation_about_e3, so3_distance
from src.homogeneous.sphere_curve import SphereCurve
from src.registration.optimal_reparam import optimal_reparam
from src.registration.warp import Warp, apply_warp
from src.srv.srv_transform import SrvCurve, srv_from_velocity

log = get_logger("homogeneous.distance")

# 🔧 Параметры демонстрации
N = 129
ARC_ANGLE = np.pi / 3
OPENING = np.pi / 6

THETA_GRID = 720
THETA_XATOL = 1e-10


@dataclass(frozen=True, eq=False)
class HomoChart:
    """Точка карты H × L² (× R × L² для aux): всё, что нужно для расстояния и геодезической."""
    start: np.ndarray
    xi: np.ndarray
    aux_start: float | None = None
    aux_q: np.ndarray | None = None

    @property
    def dt(self) -> float:
        return 1.0 / self.xi.shape[0]

    @property
    def has_aux(self) -> bool:
        return self.aux_q is not None


@dataclass(frozen=True, eq=False)
class HomoDistance:
    distance: float
    theta: float
    rotation: np.ndarray
    warp: Warp | None = None
    iterations: int = 1


def aux_srv(aux: np.ndarray, weight: float, dt: float) -> tuple[float, np.ndarray]:
    """Скалярный канал как кривая в R: (λa(0), q(λa)) по интервалам."""
    scaled = weight * np.asarray(aux, dtype=float)
    rate = np.diff(scaled)[:, None] / dt
    return float(scaled[0]), srv_from_velocity(rate)[:, 0]


def homo_chart(g: SphereCurve, aux_weight: float = 1.0, start: np.ndarray | None = None) -> HomoChart:
    s = group_srv(horizontal_lift(g, start))
    if g.aux is None:
        return HomoChart(start=s.start, xi=s.xi)
    aux_start, aux_q = aux_srv(g.aux, aux_weight, g.dt)
    return HomoChart(start=s.start, xi=s.xi, aux_start=aux_start, aux_q=aux_q)


def chart_algebra_srv(c: HomoChart) -> AlgebraSrv:
    return AlgebraSrv(start=c.start, xi=c.xi)


def _check_pair(c1: HomoChart, c2: HomoChart) -> None:
    if c1.xi.shape != c2.xi.shape:
        raise InputValidationError(f"sphere curves differ in sample count: {c1.xi.shape[0] + 1} vs {c2.xi.shape[0] + 1}")
    if c1.has_aux != c2.has_aux:
        raise InputValidationError("either both sphere curves carry aux or neither does")


def aux_term(c1: HomoChart, c2: HomoChart) -> float:
    if not c1.has_aux:
        return 0.0
    return (c1.aux_start - c2.aux_start) ** 2 + c1.dt * float(np.sum((c1.aux_q - c2.aux_q) ** 2))


def homo_objective(c1: HomoChart, c2: HomoChart, theta: float) -> float:
    """Квадрат расстояния при фиксированном x = Rz(θ)."""
    x = rotation_about_e3(theta)
    start_term = so3_distance(c1.start, c2.start @ x) ** 2
    # Ad_{x⁻¹}ξ = xᵀξ; для строк-векторов это ξ·x
    diff = c1.xi - c2.xi @ x
    return start_term + c1.dt * float(np.sum(diff ** 2)) + aux_term(c1, c2)


def best_theta(c1: HomoChart, c2: HomoChart) -> tuple[float, float]:
    step = 2.0 * np.pi / THETA_GRID
    grid = step * np.arange(THETA_GRID)
    values = np.array([homo_objective(c1, c2, th) for th in grid])
    k = int(np.argmin(values))
    theta, value = float(grid[k]), float(values[k])

    res = minimize_scalar(lambda th: homo_objective(c1, c2, th), bounds=(theta - step, theta + step),
                          method="bounded", options={"xatol": THETA_XATOL})
    if res.fun < value:
        theta, value = float(res.x), float(res.fun)
    theta = float(np.angle(np.exp(1j * theta)))
    return theta, max(value, 0.0)


def _stacked(c: HomoChart) -> np.ndarray:
    return c.xi if not c.has_aux else np.column_stack([c.xi, c.aux_q])


def warp_chart(c: HomoChart, warp: Warp) -> HomoChart:
    moved = apply_warp(SrvCurve(q=_stacked(c), basepoint=np.zeros(_stacked(c).shape[1])), warp).q
    if not c.has_aux:
        return HomoChart(start=c.start, xi=moved)
    return HomoChart(start=c.start, xi=moved[:, :3], aux_start=c.aux_start, aux_q=moved[:, 3])


def rotate_chart(c: HomoChart, x: np.ndarray) -> HomoChart:
    """Правое действие x ∈ K: α₂ ↦ α₂x, ξ ↦ Ad_{x⁻¹}ξ."""
    return HomoChart(start=c.start @ x, xi=c.xi @ x, aux_start=c.aux_start, aux_q=c.aux_q)


def chart_distance(c1: HomoChart, c2: HomoChart, reparam: bool = False, shift_samples: int = 32,
                   max_rounds: int = 20, tol: float = 1e-8) -> HomoDistance:
    _check_pair(c1, c2)
    theta, value = best_theta(c1, c2)
    if not reparam:
        return HomoDistance(distance=float(np.sqrt(value)), theta=theta, rotation=rotation_about_e3(theta))

    warp = Warp.identity(c1.xi.shape[0])
    target = SrvCurve(q=_stacked(c1), basepoint=np.zeros(_stacked(c1).shape[1]))
    rounds = 0
    for rounds in range(1, max_rounds + 1):
        previous = value
        turned = rotate_chart(c2, rotation_about_e3(theta))
        cand = optimal_reparam(target, SrvCurve(q=_stacked(turned), basepoint=np.zeros(target.dim)),
                               shift_samples=shift_samples)
        warped = warp_chart(c2, cand)
        cand_theta, cand_value = best_theta(c1, warped)
        if cand_value <= value:
            warp, theta, value = cand, cand_theta, cand_value
        log.debug("раунд %d: d² = %.10f", rounds, value)
        if previous - value < tol:
            break
    return HomoDistance(distance=float(np.sqrt(value)), theta=theta, rotation=rotation_about_e3(theta),
                        warp=warp, iterations=rounds)


def homo_distance(g1: SphereCurve, g2: SphereCurve, aux_weight: float = 1.0, reparam: bool = False,
                  shift_samples: int = 32) -> HomoDistance:
    if g1.n != g2.n:
        raise InputValidationError(f"sphere curves differ in sample count: {g1.n} vs {g2.n}")
    if aux_weight <= 0.0:
        raise InputValidationError(f"aux weight must be positive, got {aux_weight}")
    return chart_distance(homo_chart(g1, aux_weight), homo_chart(g2, aux_weight), reparam=reparam,
                          shift_samples=shift_samples)


def great_circle_arc(start: np.ndarray, direction: np.ndarray, angle: float, n: int) -> SphereCurve:
    t = np.linspace(0.0, angle, n)[:, None]
    return SphereCurve(np.cos(t) * start + np.sin(t) * direction)


if __name__ == "__main__":
    try:
        e3 = np.array([0.0, 0.0, 1.0])
        g1 = great_circle_arc(e3, np.array([1.0, 0.0, 0.0]), ARC_ANGLE, N)
        g2 = great_circle_arc(e3, np.array([np.cos(OPENING), np.sin(OPENING), 0.0]), ARC_ANGLE, N)
        result = homo_distance(g1, g2)
        print(f"SUCCESS distance={result.distance:.8f} theta={result.theta:.8f}")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
