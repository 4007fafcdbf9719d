# -*- coding: utf-8 -*-
"""
SO(3) и 𝔰𝔬(3) ≅ R³ (hat/vee), exp/log через scipy Rotation.
Биинвариантная метрика нормирована так, что ‖v̂‖ = |v|: расстояние = угол поворота.
"""

import numpy as np
from scipy.spatial.transform import Rotation

E1 = np.array([1.0, 0.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])

# Порог |a×b|, ниже которого две единичные точки считаются совпадающими или антиподальными
PARALLEL_EPS = 1e-12


def hat(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    out = np.zeros(v.shape[:-1] + (3, 3))
    out[..., 0, 1], out[..., 0, 2] = -v[..., 2], v[..., 1]
    out[..., 1, 0], out[..., 1, 2] = v[..., 2], -v[..., 0]
    out[..., 2, 0], out[..., 2, 1] = -v[..., 1], v[..., 0]
    return out


def vee(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return np.stack([m[..., 2, 1], m[..., 0, 2], m[..., 1, 0]], axis=-1)


def so3_exp(v: np.ndarray) -> np.ndarray:
    return Rotation.from_rotvec(np.asarray(v, dtype=float)).as_matrix()


def so3_log(r: np.ndarray) -> np.ndarray:
    return Rotation.from_matrix(np.asarray(r, dtype=float)).as_rotvec()


def so3_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(so3_log(a.T @ b)))


def rotation_about_e3(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def is_rotation(r: np.ndarray, tol: float = 1e-8) -> bool:
    r = np.asarray(r, dtype=float)
    if r.shape[-2:] != (3, 3):
        return False
    eye = np.broadcast_to(np.eye(3), r.shape)
    orth = np.abs(np.swapaxes(r, -1, -2) @ r - eye).max() <= tol
    return bool(orth and np.all(np.abs(np.linalg.det(r) - 1.0) <= tol))


def minimal_rotation(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Поворот вокруг оси a×b, переводящий единичный a в b; None для антиподов."""
    axis = np.cross(a, b)
    sin = float(np.linalg.norm(axis))
    cos = float(np.dot(a, b))
    if sin <= PARALLEL_EPS:
        return np.eye(3) if cos > 0.0 else None
    return so3_exp(axis / sin * np.arctan2(sin, cos))
