# -*- coding: utf-8 -*-
"""
SRV в алгебре Ли: Q(α) = (α(0), q(α)), q = L_{α⁻¹}α̇ / sqrt‖α̇‖.
Дискретно: по интервалам: v_i = vee(log(α_iᵀ α_{i+1})) / dt, ξ_i = v_i / sqrt|v_i|,
i = 0..N-2. Обратное: α_{i+1} = α_i exp(dt·ξ_i|ξ_i|), точно для такой схемы.
"""

import sys
from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError, NotImmersedError
from src.homogeneous.horizontal_lift import RotationCurve
from src.homogeneous.so3 import is_rotation, so3_exp, so3_log

# 🔧 Параметры демонстрации
N = 65
BODY_VELOCITY = (0.3, -1.2, 0.5)


@dataclass(frozen=True, eq=False)
class AlgebraSrv:
    start: np.ndarray
    xi: np.ndarray

    def __post_init__(self):
        start = np.array(self.start, dtype=float)
        xi = np.array(self.xi, dtype=float)
        if not is_rotation(start):
            raise InputValidationError("AlgebraSrv.start must be a rotation")
        if xi.ndim != 2 or xi.shape[1] != 3 or xi.shape[0] < 1:
            raise InputValidationError(f"xi must be an (N-1, 3) array, got shape {xi.shape}")
        start.setflags(write=False)
        xi.setflags(write=False)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "xi", xi)

    @property
    def n(self) -> int:
        return self.xi.shape[0] + 1

    @property
    def dt(self) -> float:
        return 1.0 / self.xi.shape[0]


def body_velocity(a: RotationCurve) -> np.ndarray:
    quotients = np.swapaxes(a.frames[:-1], 1, 2) @ a.frames[1:]
    return so3_log(quotients) / a.dt


def group_srv(a: RotationCurve) -> AlgebraSrv:
    v = body_velocity(a)
    speed = np.linalg.norm(v, axis=1)
    bad = np.flatnonzero(speed == 0.0)
    if bad.size:
        raise NotImmersedError(int(bad[0]))
    return AlgebraSrv(start=a.frames[0], xi=v / np.sqrt(speed)[:, None])


def group_srv_inverse(s: AlgebraSrv) -> RotationCurve:
    steps = so3_exp(s.dt * s.xi * np.linalg.norm(s.xi, axis=1)[:, None])
    frames = np.empty((s.n, 3, 3))
    frames[0] = s.start
    for i, step in enumerate(steps):
        frames[i + 1] = frames[i] @ step
    return RotationCurve(frames)


if __name__ == "__main__":
    try:
        v = np.array(BODY_VELOCITY)
        t = np.linspace(0.0, 1.0, N)
        curve = RotationCurve(so3_exp(t[:, None] * v))
        s = group_srv(curve)
        back = group_srv_inverse(s)
        print(f"xi[0] = {s.xi[0]}, expected {v / np.sqrt(np.linalg.norm(v))}")
        print(f"round trip = {np.abs(back.frames - curve.frames).max():.3e}")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
