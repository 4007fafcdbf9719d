# -*- coding: utf-8 -*-
"""
Равномерная по длине дуги перевыборка кривой.
- resample_uniform: ломаная в R^d, кусочно-линейная интерполяция (np.interp по накопленной длине).
- resample_sphere_uniform: кривая на S², интерполяция по дугам большого круга
  (взвешенная хорда + нормировка), вспомогательный канал: линейно по длине дуги.
"""

import sys

import numpy as np

from src.common.errors import DegenerateCurveError, InputValidationError
from src.curves.discrete_curve import DiscreteCurve, speed_tolerance

# 🔧 Параметры демонстрации
COUNT = 9


def resample_uniform(c: DiscreteCurve, m: int) -> DiscreteCurve:
    if m < 3:
        raise InputValidationError(f"resampling needs m >= 3, got {m}")

    pts = c.samples
    if c.closed:
        pts = np.vstack([pts, pts[:1]])
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    keep = np.concatenate([[True], seg > 0.0])
    pts = pts[keep]
    arc = np.concatenate([[0.0], np.cumsum(seg[seg > 0.0])])
    length = arc[-1]
    if length <= speed_tolerance(c) or pts.shape[0] < 2:
        raise DegenerateCurveError()

    targets = np.linspace(0.0, length, m, endpoint=not c.closed)
    out = np.column_stack([np.interp(targets, arc, pts[:, k]) for k in range(c.dim)])
    return DiscreteCurve(out, closed=c.closed)


def great_circle_angles(points: np.ndarray) -> np.ndarray:
    """Углы между соседними точками единичной сферы (устойчиво через atan2)."""
    p, q = points[:-1], points[1:]
    cross = np.linalg.norm(np.cross(p, q), axis=1)
    dot = np.sum(p * q, axis=1)
    return np.arctan2(cross, dot)


def resample_sphere_uniform(points: np.ndarray, m: int,
                            aux: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray | None]:
    if m < 3:
        raise InputValidationError(f"resampling needs m >= 3, got {m}")
    pts = np.asarray(points, dtype=float)
    seg = great_circle_angles(pts)
    keep = np.concatenate([[True], seg > 0.0])
    pts = pts[keep]
    seg = seg[seg > 0.0]
    aux_kept = None if aux is None else np.asarray(aux, dtype=float)[keep]
    if seg.size == 0:
        raise DegenerateCurveError()

    arc = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.linspace(0.0, arc[-1], m)
    k = np.clip(np.searchsorted(arc, targets, side="right") - 1, 0, seg.size - 1)
    alpha = targets - arc[k]
    theta = seg[k]
    # веса сферической интерполяции: точка на дуге под углом alpha от начала
    w0 = np.sin(theta - alpha)[:, None]
    w1 = np.sin(alpha)[:, None]
    out = w0 * pts[k] + w1 * pts[k + 1]
    out /= np.linalg.norm(out, axis=1, keepdims=True)

    out_aux = None if aux_kept is None else np.interp(targets, arc, aux_kept)
    return out, out_aux


if __name__ == "__main__":
    try:
        segment = DiscreteCurve(np.column_stack([np.linspace(0, 1, 5), np.zeros(5)]))
        print(resample_uniform(segment, COUNT).samples)
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
