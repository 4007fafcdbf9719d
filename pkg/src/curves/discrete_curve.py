# -*- coding: utf-8 -*-
"""
Дискретная кривая: N равномерно расставленных по параметру точек в R^d.
- Открытая кривая: t_i = i/(N-1), шаг dt = 1/(N-1).
- Замкнутая кривая: t_i = i/N, шаг dt = 1/N, конечная точка не дублируется.
Объект неизменяемый: массив отсчётов только для чтения.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError, NotImmersedError

# Относительный порог скорости: доля диагонали габаритного прямоугольника
SPEED_EPS_RELATIVE = 1e-8


@dataclass(frozen=True, eq=False)
class DiscreteCurve:
    samples: np.ndarray
    closed: bool = False

    def __post_init__(self):
        arr = np.array(self.samples, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.ndim != 2:
            raise InputValidationError(f"samples must be an (N, d) array, got shape {arr.shape}")
        if arr.shape[0] < 3:
            raise InputValidationError(f"a curve needs at least 3 samples, got {arr.shape[0]}")
        if not np.all(np.isfinite(arr)):
            raise InputValidationError("samples contain non-finite values")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "closed", bool(self.closed))

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    @property
    def dim(self) -> int:
        return self.samples.shape[1]

    @property
    def dt(self) -> float:
        return parameter_step(self.n, self.closed)

    @property
    def params(self) -> np.ndarray:
        return parameter_grid(self.n, self.closed)


def parameter_step(n: int, closed: bool) -> float:
    return 1.0 / n if closed else 1.0 / (n - 1)


def parameter_grid(n: int, closed: bool) -> np.ndarray:
    if closed:
        return np.arange(n) / n
    return np.linspace(0.0, 1.0, n)


def bounding_diagonal(points: np.ndarray) -> float:
    pts = np.asarray(points, dtype=float)
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))


def speed_tolerance(c: DiscreteCurve) -> float:
    """ε_speed = 1e-8 × диагональ габаритного прямоугольника."""
    return SPEED_EPS_RELATIVE * bounding_diagonal(c.samples)


def first_non_immersed(omega: np.ndarray, tol: float) -> int | None:
    # tol == 0 означает вырожденную (точечную) кривую: любой отсчёт плохой
    bad = np.flatnonzero(omega <= tol) if tol == 0.0 else np.flatnonzero(omega < tol)
    return int(bad[0]) if bad.size else None


def require_immersion(c: DiscreteCurve, omega: np.ndarray) -> None:
    idx = first_non_immersed(omega, speed_tolerance(c))
    if idx is not None:
        raise NotImmersedError(idx)
