# -*- coding: utf-8 -*-
"""
Сферические полосы: c(s, t) = exp_γ(s·r·B), B = γ × T: единичная бинормаль на S².
Полоса кодируется кривой на S² с каналом aux = r (ширина в радианах);
вес λ применяется в метрике S²×R.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError, NotImmersedError
from src.curves.finite_differences import differentiate
from src.homogeneous.sphere_curve import SphereCurve, sphere_exp
from src.surfaces.mesh import Mesh, grid_faces

SEAM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StripSpec:
    base: SphereCurve
    bandwidth: np.ndarray

    def __post_init__(self):
        r = np.array(self.bandwidth, dtype=float).reshape(-1)
        if r.size == 1:
            r = np.full(self.base.n, r[0])
        if r.size != self.base.n:
            raise InputValidationError(f"bandwidth has {r.size} values for {self.base.n} samples")
        if not np.all((r > 0.0) & (r < np.pi / 2)):
            raise InputValidationError("bandwidth must lie in (0, pi/2)")
        r.setflags(write=False)
        object.__setattr__(self, "bandwidth", r)


def strip_encode(spec: StripSpec) -> SphereCurve:
    return SphereCurve(spec.base.points, spec.bandwidth)


def strip_decode(g: SphereCurve) -> StripSpec:
    if g.aux is None:
        raise InputValidationError("strip state needs an aux (bandwidth) channel")
    return StripSpec(base=SphereCurve(g.points), bandwidth=g.aux)


def sphere_tangent(points: np.ndarray) -> np.ndarray:
    """
    Единичная касательная кривой на S².
    Если первая и последняя точки совпадают, кривая замкнута: разности циклические,
    касательная в шве одна и та же с обеих сторон.
    """
    n = points.shape[0]
    if n > 3 and np.linalg.norm(points[0] - points[-1]) <= SEAM_TOL:
        d = differentiate(points[:-1], True, 1.0 / (n - 1))
        d = np.vstack([d, d[:1]])
    else:
        d = differentiate(points, False, 1.0 / (n - 1))
    d -= np.sum(d * points, axis=1)[:, None] * points
    norms = np.linalg.norm(d, axis=1)
    bad = np.flatnonzero(norms <= 1e-12)
    if bad.size:
        raise NotImmersedError(int(bad[0]))
    return d / norms[:, None]


def strip_binormal(points: np.ndarray) -> np.ndarray:
    b = np.cross(points, sphere_tangent(points))
    return b / np.linalg.norm(b, axis=1)[:, None]


def strip_mesh(spec: StripSpec, s_samples: int) -> Mesh:
    if s_samples < 2:
        raise InputValidationError(f"a strip mesh needs at least 2 samples across, got {s_samples}")
    pts = spec.base.points
    b = strip_binormal(pts)
    s = np.arange(s_samples) / (s_samples - 1)
    offsets = s[None, :, None] * spec.bandwidth[:, None, None] * b[:, None, :]
    base = np.broadcast_to(pts[:, None, :], offsets.shape)
    vertices = sphere_exp(base, offsets)
    faces = grid_faces(spec.base.n, s_samples, cyclic_rows=False, cyclic_cols=False)
    return Mesh(vertices.reshape(-1, 3), faces)
