# -*- coding: utf-8 -*-
"""
Линейчатые поверхности c(s, t) = γ(t) + s·v(t), |v| = 1.
Кодирование в R⁶: (γ_i, ν·v_i). При декодировании v возвращается на единичную
сферу; поправка больше RULING_CORRECTION_WARN попадает в лог.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.curves.discrete_curve import DiscreteCurve
from src.surfaces.mesh import Mesh, grid_faces

log = get_logger("surfaces.ruled")

RULING_UNIT_TOL = 1e-10
RULING_MIN_NORM = 1e-6
RULING_CORRECTION_WARN = 1e-3


@dataclass(frozen=True, eq=False)
class RuledSpec:
    base: DiscreteCurve
    ruling: np.ndarray

    def __post_init__(self):
        if self.base.dim != 3:
            raise InputValidationError(f"ruled base must be a curve in R^3, got dimension {self.base.dim}")
        v = np.array(self.ruling, dtype=float)
        if v.shape != self.base.samples.shape:
            raise InputValidationError(f"ruling shape {v.shape} does not match base {self.base.samples.shape}")
        if np.abs(np.linalg.norm(v, axis=1) - 1.0).max() > RULING_UNIT_TOL:
            raise InputValidationError("ruling vectors must be unit length")
        v.setflags(write=False)
        object.__setattr__(self, "ruling", v)


def ruled_encode(spec: RuledSpec, nu: float = 1.0) -> DiscreteCurve:
    return DiscreteCurve(np.column_stack([spec.base.samples, nu * spec.ruling]), closed=spec.base.closed)


def ruling_correction(c: DiscreteCurve, nu: float = 1.0) -> float:
    """Наибольшее отклонение |v| от 1 в состоянии c."""
    return float(np.abs(np.linalg.norm(c.samples[:, 3:] / nu, axis=1) - 1.0).max())


def ruled_decode(c: DiscreteCurve, nu: float = 1.0) -> RuledSpec:
    if c.dim != 6:
        raise InputValidationError(f"ruled state must be a curve in R^6, got dimension {c.dim}")
    v = c.samples[:, 3:] / nu
    norms = np.linalg.norm(v, axis=1)
    if np.any(norms < RULING_MIN_NORM):
        raise InputValidationError(f"ruling vanishes at sample {int(np.argmax(norms < RULING_MIN_NORM))}")
    off = np.abs(norms - 1.0)
    if off.max() > RULING_CORRECTION_WARN:
        log.warning("ruling renormalized: max correction %.3e", off.max())
    fix = off > 1e-12
    v = v.copy()
    v[fix] /= norms[fix][:, None]
    return RuledSpec(base=DiscreteCurve(c.samples[:, :3], closed=c.closed), ruling=v)


def ruled_mesh(spec: RuledSpec, s_samples: int) -> Mesh:
    if s_samples < 2:
        raise InputValidationError(f"a ruled mesh needs at least 2 samples along the ruling, got {s_samples}")
    s = np.arange(s_samples) / (s_samples - 1)
    vertices = spec.base.samples[:, None, :] + s[None, :, None] * spec.ruling[:, None, :]
    faces = grid_faces(spec.base.n, s_samples, cyclic_rows=spec.base.closed, cyclic_cols=False)
    return Mesh(vertices.reshape(-1, 3), faces)
