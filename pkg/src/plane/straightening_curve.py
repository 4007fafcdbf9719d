# -*- coding: utf-8 -*-
"""
Кривая, которую SRV-преобразование выпрямляет: ω(t) = A/sin²(at+b), κ = a/ω.
Строится интегрированием уравнений Френе (ċ = ωT, Ṫ = ωκN, Ṅ = -ωκT)
классическим методом Рунге–Кутты 4-го порядка с постоянным шагом,
из начала координат с касательной (1, 0).
"""

import sys

import numpy as np

from src.common.errors import InputValidationError, SpeedPoleError
from src.curves.discrete_curve import DiscreteCurve

# 🔧 Параметры примера
A_COEF = 1.0
B_COEF = 0.5
AMPLITUDE = 1.0
COUNT = 2048


def straightening_speed(t: np.ndarray, a: float, b: float, amplitude: float) -> np.ndarray:
    return amplitude / np.sin(a * np.asarray(t, dtype=float) + b) ** 2


def _has_pole(a: float, b: float) -> bool:
    lo, hi = sorted((b, a + b))
    return bool(np.ceil(lo / np.pi) * np.pi <= hi)


def straightening_curve(a: float, b: float, amplitude: float, n: int) -> DiscreteCurve:
    if not (a * b > 0.0 and amplitude > 0.0):
        raise InputValidationError("straightening curve needs a*b > 0 and A > 0")
    if n < 3:
        raise InputValidationError(f"a curve needs at least 3 samples, got {n}")
    if _has_pole(a, b):
        raise SpeedPoleError()

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        w = float(straightening_speed(t, a, b, amplitude))
        turn = a  # κ·ω = a
        tangent, normal = y[2:4], y[4:6]
        return np.concatenate([w * tangent, turn * normal, -turn * tangent])

    h = 1.0 / (n - 1)
    y = np.array([0.0, 0.0, 1.0, 0.0, 0.0, 1.0])
    out = np.empty((n, 2))
    out[0] = y[:2]
    for i in range(n - 1):
        t = i * h
        k1 = rhs(t, y)
        k2 = rhs(t + h / 2, y + h / 2 * k1)
        k3 = rhs(t + h / 2, y + h / 2 * k2)
        k4 = rhs(t + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        out[i + 1] = y[:2]
    return DiscreteCurve(out, closed=False)


if __name__ == "__main__":
    try:
        curve = straightening_curve(A_COEF, B_COEF, AMPLITUDE, COUNT)
        print(f"SUCCESS {curve.n} samples, end point {curve.samples[-1]}")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
