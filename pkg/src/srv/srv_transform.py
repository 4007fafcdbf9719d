# -*- coding: utf-8 -*-
"""
SRV-преобразование q(c) = ċ / sqrt(|ċ|) и обратное к нему.
- SrvCurve хранит q, базовую точку c(0) и флаг замкнутости.
- srv_inverse восстанавливает кривую из q|q| точным обращением разностной схемы.
"""

import sys
from dataclasses import dataclass

import numpy as np

from src.curves.discrete_curve import DiscreteCurve, parameter_step, require_immersion
from src.curves.finite_differences import integrate_samples, integrate_velocity
from src.curves.speed import velocity

# 🔧 Параметры демонстрации
N = 512


@dataclass(frozen=True, eq=False)
class SrvCurve:
    q: np.ndarray
    basepoint: np.ndarray
    closed: bool = False

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        if q.ndim == 1:
            q = q[:, None]
        base = np.array(self.basepoint, dtype=float).reshape(q.shape[1])
        q.setflags(write=False)
        base.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "basepoint", base)
        object.__setattr__(self, "closed", bool(self.closed))

    @property
    def n(self) -> int:
        return self.q.shape[0]

    @property
    def dim(self) -> int:
        return self.q.shape[1]

    @property
    def dt(self) -> float:
        return parameter_step(self.n, self.closed)


def srv_from_velocity(d1: np.ndarray) -> np.ndarray:
    """ċ/sqrt|ċ| с q = 0 там, где ċ = 0."""
    omega = np.linalg.norm(d1, axis=1)
    root = np.sqrt(omega)
    out = np.zeros_like(d1)
    nz = root > 0.0
    out[nz] = d1[nz] / root[nz][:, None]
    return out


def srv_transform(c: DiscreteCurve) -> SrvCurve:
    d1 = velocity(c)
    require_immersion(c, np.linalg.norm(d1, axis=1))
    return SrvCurve(q=srv_from_velocity(d1), basepoint=c.samples[0], closed=c.closed)


def srv_inverse(s: SrvCurve) -> DiscreteCurve:
    v = s.q * np.linalg.norm(s.q, axis=1)[:, None]
    return DiscreteCurve(integrate_velocity(v, s.basepoint, s.closed, s.dt), closed=s.closed)


def closure_gap(s: SrvCurve) -> float:
    """|∫ q|q| dt|: насколько восстановленная замкнутая кривая не замыкается."""
    v = s.q * np.linalg.norm(s.q, axis=1)[:, None]
    return float(np.linalg.norm(integrate_samples(v, True, s.dt)))


def srv_image(s: SrvCurve) -> DiscreteCurve:
    """Образ SRV как самостоятельная кривая: точки q_i."""
    return DiscreteCurve(s.q, closed=s.closed)


if __name__ == "__main__":
    try:
        t = np.arange(N) / N
        circle = DiscreteCurve(np.column_stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)]), closed=True)
        s = srv_transform(circle)
        back = srv_inverse(s)
        print(f"|q| = {np.linalg.norm(s.q, axis=1).mean():.6f}, "
              f"round trip = {np.abs(back.samples - circle.samples).max():.3e}")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
