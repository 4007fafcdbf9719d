# -*- coding: utf-8 -*-
"""
Трубки: однопараметрическое семейство окружностей c(s, t) = γ + r(N cos s + B sin s).
Кодирование трубки кривой в R⁴: (γ_i, μ·r_i); декодирование делит на μ.
Репер (N, B): Френе с минимально вращающимся продолжением там, где Френе вырожден.
"""

import sys
from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError
from src.curves.discrete_curve import DiscreteCurve
from src.curves.frenet_frame import frenet_frame
from src.surfaces.mesh import Mesh, grid_faces

# 🔧 Параметры демонстрации
N = 64
CIRCLE_SAMPLES = 16
CENTER_RADIUS = 2.0
TUBE_RADIUS = 0.5


@dataclass(frozen=True, eq=False)
class TubeSpec:
    center: DiscreteCurve
    radius: np.ndarray

    def __post_init__(self):
        if self.center.dim != 3:
            raise InputValidationError(f"tube center must be a curve in R^3, got dimension {self.center.dim}")
        r = np.array(self.radius, dtype=float).reshape(-1)
        if r.size == 1:
            r = np.full(self.center.n, r[0])
        if r.size != self.center.n:
            raise InputValidationError(f"tube radius has {r.size} values for {self.center.n} samples")
        if not np.all(r > 0.0):
            raise InputValidationError("tube radius must be positive")
        r.setflags(write=False)
        object.__setattr__(self, "radius", r)


def tube_encode(spec: TubeSpec, mu: float = 1.0) -> DiscreteCurve:
    return DiscreteCurve(np.column_stack([spec.center.samples, mu * spec.radius]), closed=spec.center.closed)


def tube_decode(c: DiscreteCurve, mu: float = 1.0) -> TubeSpec:
    if c.dim != 4:
        raise InputValidationError(f"tube state must be a curve in R^4, got dimension {c.dim}")
    radius = c.samples[:, 3] / mu
    if not np.all(radius > 0.0):
        raise InputValidationError("invalid tube state")
    return TubeSpec(center=DiscreteCurve(c.samples[:, :3], closed=c.closed), radius=radius)


def tube_mesh(spec: TubeSpec, circle_samples: int) -> Mesh:
    if circle_samples < 3:
        raise InputValidationError(f"a tube needs at least 3 circle samples, got {circle_samples}")
    frame = frenet_frame(spec.center)
    s = 2.0 * np.pi * np.arange(circle_samples) / circle_samples
    ring = (np.cos(s)[None, :, None] * frame.N[:, None, :] + np.sin(s)[None, :, None] * frame.B[:, None, :])
    vertices = spec.center.samples[:, None, :] + spec.radius[:, None, None] * ring
    faces = grid_faces(spec.center.n, circle_samples, cyclic_rows=spec.center.closed, cyclic_cols=True)
    return Mesh(vertices.reshape(-1, 3), faces)


if __name__ == "__main__":
    try:
        t = 2 * np.pi * np.arange(N) / N
        center = DiscreteCurve(CENTER_RADIUS * np.column_stack([np.cos(t), np.sin(t), np.zeros(N)]), closed=True)
        mesh = tube_mesh(TubeSpec(center, TUBE_RADIUS), CIRCLE_SAMPLES)
        print(f"SUCCESS torus: {len(mesh.vertices)} vertices, {len(mesh.faces)} faces")
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
