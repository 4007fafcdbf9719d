# -*- coding: utf-8 -*-
"""
Горизонтальный лифт кривой γ на S² = SO(3)/SO(2) в кривую α в SO(3), α·e₃ = γ.
Шаг: α_{i+1} = R_i α_i, где R_i: минимальный поворот γ_i → γ_{i+1} (ось γ_i × γ_{i+1}).
Тогда скорость тела log(α_iᵀ α_{i+1}) не имеет e₃-компоненты (вертикаль 𝔨 = 𝔰𝔬(2)).
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError, LiftUndefinedError, NotImmersedError
from src.homogeneous.so3 import E3, is_rotation, minimal_rotation
from src.homogeneous.sphere_curve import SphereCurve

# Минимальная сферическая скорость (угол шага / dt)
SPHERE_SPEED_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class RotationCurve:
    frames: np.ndarray

    def __post_init__(self):
        frames = np.array(self.frames, dtype=float)
        if frames.ndim != 3 or frames.shape[1:] != (3, 3) or frames.shape[0] < 2:
            raise InputValidationError(f"rotation curve needs an (N, 3, 3) array, got shape {frames.shape}")
        if not is_rotation(frames):
            raise InputValidationError("rotation curve frames must be rotations (orthogonal, det +1)")
        frames.setflags(write=False)
        object.__setattr__(self, "frames", frames)

    @property
    def n(self) -> int:
        return self.frames.shape[0]

    @property
    def dt(self) -> float:
        return 1.0 / (self.n - 1)

    def project(self) -> np.ndarray:
        return self.frames[:, :, 2].copy()


def initial_frame(p: np.ndarray) -> np.ndarray:
    """Кадр над точкой p: минимальный поворот e₃ → p (π вокруг e₁, если p = −e₃)."""
    r = minimal_rotation(E3, p)
    if r is None:
        return np.diag([1.0, -1.0, -1.0])
    return r


def horizontal_lift(g: SphereCurve, start: np.ndarray | None = None) -> RotationCurve:
    pts = g.points
    if start is None:
        start = initial_frame(pts[0])
    else:
        start = np.asarray(start, dtype=float)
        if not is_rotation(start) or np.abs(start[:, 2] - pts[0]).max() > 1e-8:
            raise InputValidationError("initial frame must be a rotation taking e3 to the first point")

    step_tol = SPHERE_SPEED_EPS * g.dt
    frames = np.empty((g.n, 3, 3))
    frames[0] = start
    for i in range(g.n - 1):
        if np.linalg.norm(pts[i + 1] - pts[i]) < step_tol:
            raise NotImmersedError(i)
        step = minimal_rotation(pts[i], pts[i + 1])
        if step is None:
            raise LiftUndefinedError(i)
        frames[i + 1] = step @ frames[i]
    return RotationCurve(frames)
