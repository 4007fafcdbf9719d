# -*- coding: utf-8 -*-
"""
Кривая на S² (с необязательным вещественным каналом aux: фактор R в S²×R)
и экспонента сферы exp_x(v) = cos|v|·x + sin|v|·v/|v|.
JSON-схема: {"kind": "curve", "dim": "S2", "points": [[x, y, z], ...], "aux": [...]}.
"""

import sys
from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError

# 🔧 Параметры демонстрации
BASE = (0.0, 0.0, 1.0)
TANGENT = (np.pi / 2, 0.0, 0.0)

UNIT_TOL = 1e-8
TANGENT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SphereCurve:
    points: np.ndarray
    aux: np.ndarray | None = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
            raise InputValidationError(f"sphere curve needs an (N >= 3, 3) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise InputValidationError("sphere curve contains non-finite values")
        norms = np.linalg.norm(pts, axis=1)
        if np.abs(norms - 1.0).max() > UNIT_TOL:
            raise InputValidationError("sphere curve points must be unit vectors")
        pts /= norms[:, None]
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        if self.aux is not None:
            aux = np.array(self.aux, dtype=float).reshape(-1)
            if aux.size != pts.shape[0]:
                raise InputValidationError(f"aux has {aux.size} values for {pts.shape[0]} points")
            aux.setflags(write=False)
            object.__setattr__(self, "aux", aux)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dt(self) -> float:
        return 1.0 / (self.n - 1)

    def rotated(self, r: np.ndarray) -> "SphereCurve":
        return SphereCurve(self.points @ np.asarray(r, dtype=float).T, self.aux)


def sphere_exp(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Векторизовано по ведущим осям: x, v формы (..., 3)."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    norm_v = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(np.abs(np.sum(x * v, axis=-1)) > TANGENT_TOL * np.maximum(1.0, norm_v[..., 0])):
        raise InputValidationError("sphere_exp: v is not tangent at x")
    safe = np.where(norm_v > 0.0, norm_v, 1.0)
    out = np.cos(norm_v) * x + np.where(norm_v > 0.0, np.sin(norm_v) * v / safe, 0.0)
    return out / np.linalg.norm(out, axis=-1, keepdims=True)


def sphere_curve_to_dict(g: SphereCurve, meta: dict | None = None) -> dict:
    payload = {"kind": "curve", "dim": "S2", "points": g.points.tolist()}
    if g.aux is not None:
        payload["aux"] = g.aux.tolist()
    if meta:
        payload["meta"] = dict(meta)
    return payload


def sphere_curve_from_dict(payload: dict) -> SphereCurve:
    if payload.get("dim") != "S2":
        raise InputValidationError(f"expected a sphere curve (dim 'S2'), got dim {payload.get('dim')!r}")
    try:
        return SphereCurve(np.asarray(payload["points"], dtype=float), payload.get("aux"))
    except KeyError as exc:
        raise InputValidationError(f"sphere curve JSON is missing {exc}") from exc


if __name__ == "__main__":
    try:
        print(sphere_exp(np.array(BASE), np.array(TANGENT)))
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
