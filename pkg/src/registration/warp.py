# -*- coding: utf-8 -*-
"""
Репараметризация γ ∈ Diff⁺ и её действие.
- На SRV: q ↦ (q∘γ)·sqrt(γ̇).
- На кривой: c ↦ c∘γ.
Для замкнутых кривых warp задан на N+1 узлах t = i/N (включая точку склейки)
и дополняется циклическим сдвигом начальной точки shift.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_trapezoid

from src.common.errors import DegenerateCurveError, InputValidationError
from src.curves.discrete_curve import DiscreteCurve
from src.curves.finite_differences import differentiate
from src.curves.speed import speed
from src.srv.srv_transform import SrvCurve


@dataclass(frozen=True, eq=False)
class Warp:
    values: np.ndarray
    shift: int = 0

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 1 or v.size < 2:
            raise InputValidationError("warp values must be a 1-D sequence of at least 2 values")
        if np.any(np.diff(v) < -1e-12):
            raise InputValidationError("warp must be nondecreasing")
        if abs(v[0]) > 1e-9 or abs(v[-1] - 1.0) > 1e-9:
            raise InputValidationError("warp must satisfy γ(0) = 0 and γ(1) = 1")
        v = np.clip(np.maximum.accumulate(v), 0.0, 1.0)
        v[0], v[-1] = 0.0, 1.0
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "shift", int(self.shift))

    @classmethod
    def identity(cls, n: int, closed: bool = False) -> "Warp":
        return cls(np.linspace(0.0, 1.0, n + 1 if closed else n))

    @property
    def knots(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.values.size)


def _extended(samples: np.ndarray, closed: bool, shift: int) -> tuple[np.ndarray, np.ndarray]:
    """Отсчёты на сетке [0, 1]; для замкнутых: со сдвигом и повтором первой точки."""
    if not closed:
        return np.linspace(0.0, 1.0, samples.shape[0]), samples
    rolled = np.roll(samples, -shift, axis=0)
    n = samples.shape[0]
    return np.arange(n + 1) / n, np.vstack([rolled, rolled[:1]])


def _check_size(warp: Warp, n: int, closed: bool) -> None:
    expected = n + 1 if closed else n
    if warp.values.size != expected:
        raise InputValidationError(f"warp has {warp.values.size} values, expected {expected}")


def compose_samples(samples: np.ndarray, closed: bool, warp: Warp) -> np.ndarray:
    """samples∘γ на исходной сетке параметра."""
    grid, ext = _extended(np.asarray(samples, dtype=float), closed, warp.shift)
    n = samples.shape[0]
    gamma = warp.values[:n] if closed else warp.values
    return np.column_stack([np.interp(gamma, grid, ext[:, k]) for k in range(ext.shape[1])])


def warp_rate(warp: Warp) -> np.ndarray:
    return np.maximum(differentiate(warp.values, False, 1.0 / (warp.values.size - 1)), 0.0)


def apply_warp(s: SrvCurve, warp: Warp) -> SrvCurve:
    _check_size(warp, s.n, s.closed)
    moved = compose_samples(s.q, s.closed, warp)
    rate = warp_rate(warp)[:s.n]
    return SrvCurve(q=moved * np.sqrt(rate)[:, None], basepoint=s.basepoint, closed=s.closed)


def warp_curve(c: DiscreteCurve, warp: Warp) -> DiscreteCurve:
    _check_size(warp, c.n, c.closed)
    return DiscreteCurve(compose_samples(c.samples, c.closed, warp), closed=c.closed)


def arc_length_fraction(c: DiscreteCurve) -> np.ndarray:
    """Доля длины дуги s(t) ∈ [0, 1] в отсчётах открытой кривой."""
    arc = cumulative_trapezoid(speed(c), dx=c.dt, initial=0.0)
    if arc[-1] <= 0.0:
        raise DegenerateCurveError()
    return arc / arc[-1]


def arc_length_warp(c0: DiscreteCurve, c1: DiscreteCurve) -> Warp:
    """γ = s₁⁻¹∘s₀: совмещает нормированные длины дуг; начальное приближение для открытых кривых."""
    if c0.closed or c1.closed or c0.n != c1.n:
        raise InputValidationError("arc-length warp needs two open curves with equal sample count")
    return Warp(np.interp(arc_length_fraction(c0), arc_length_fraction(c1), c1.params))
