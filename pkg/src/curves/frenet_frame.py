# -*- coding: utf-8 -*-
"""
Репер Френе (T, N, B) пространственной кривой.
Где |Ṫ| < ε_frame нормаль не определена: репер продолжается минимально вращающимся
(метод двойного отражения) от последнего корректного репера Френе.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import DegenerateCurveError, InputValidationError, NotImmersedError
from src.curves.discrete_curve import DiscreteCurve, speed_tolerance
from src.curves.finite_differences import differentiate
from src.curves.speed import velocity

EPS_FRAME = 1e-6


@dataclass(frozen=True, eq=False)
class FrameField:
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray


def _any_perpendicular(t: np.ndarray) -> np.ndarray:
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(t)))] = 1.0
    n = axis - (axis @ t) * t
    return n / np.linalg.norm(n)


def _double_reflection(x0, x1, t0, t1, r0) -> np.ndarray:
    v1 = x1 - x0
    c1 = v1 @ v1
    r_l = r0 - (2.0 / c1) * (v1 @ r0) * v1
    t_l = t0 - (2.0 / c1) * (v1 @ t0) * v1
    v2 = t1 - t_l
    c2 = v2 @ v2
    if c2 == 0.0:
        return r_l
    return r_l - (2.0 / c2) * (v2 @ r_l) * v2


def frenet_frame(c: DiscreteCurve) -> FrameField:
    if c.dim != 3:
        raise InputValidationError(f"Frenet frame needs a curve in R^3, got dimension {c.dim}")
    d1 = velocity(c)
    omega = np.linalg.norm(d1, axis=1)
    tol = speed_tolerance(c)
    if tol == 0.0 or np.all(omega < tol):
        raise DegenerateCurveError()
    bad = np.flatnonzero(omega < tol)
    if bad.size:
        raise NotImmersedError(int(bad[0]))

    T = d1 / omega[:, None]
    dT = differentiate(T, c.closed, c.dt)
    dT -= np.sum(dT * T, axis=1)[:, None] * T
    mag = np.linalg.norm(dT, axis=1)
    valid = mag >= EPS_FRAME

    N = np.zeros_like(T)
    N[valid] = dT[valid] / mag[valid][:, None]
    x = c.samples
    if not valid.any():
        first = 0
        N[0] = _any_perpendicular(T[0])
    else:
        first = int(np.argmax(valid))
    for i in range(first + 1, c.n):
        if not valid[i]:
            N[i] = _double_reflection(x[i - 1], x[i], T[i - 1], T[i], N[i - 1])
    for i in range(first - 1, -1, -1):
        N[i] = _double_reflection(x[i + 1], x[i], T[i + 1], T[i], N[i + 1])

    N -= np.sum(N * T, axis=1)[:, None] * T
    N /= np.linalg.norm(N, axis=1, keepdims=True)
    B = np.cross(T, N)
    return FrameField(T=T, N=N, B=B)
