# -*- coding: utf-8 -*-
"""
Оптимальный поворот (Прокруст/Кабш): R = argmin_{SO(d)} ∫|q1 - R q2|² dt.
A = ∫ q1 q2ᵀ dt = U S Vᵀ,  R = U diag(1, ..., det(UVᵀ)) Vᵀ.
"""

from typing import NamedTuple

import numpy as np
from scipy.linalg import det, svd

from src.common.log import get_logger
from src.curves.finite_differences import integrate_samples
from src.srv.l2_distance import check_compatible
from src.srv.srv_transform import SrvCurve

log = get_logger("registration.rotation")


class OptimalRotation(NamedTuple):
    matrix: np.ndarray
    degenerate: bool


def correlation_matrix(s1: SrvCurve, s2: SrvCurve) -> np.ndarray:
    outer = s1.q[:, :, None] * s2.q[:, None, :]
    return np.asarray(integrate_samples(outer, s1.closed, s1.dt))


def optimal_rotation(s1: SrvCurve, s2: SrvCurve) -> OptimalRotation:
    check_compatible(s1, s2)
    a = correlation_matrix(s1, s2)
    u, sing, vt = svd(a)
    fix = np.eye(a.shape[0])
    if det(u @ vt) < 0:
        fix[-1, -1] = -1.0
    rotation = u @ fix @ vt
    degenerate = bool(sing[0] == 0.0 or sing[-1] <= 1e-12 * sing[0])
    if degenerate:
        log.warning("матрица корреляции вырождена: поворот определён неоднозначно")
    return OptimalRotation(matrix=rotation, degenerate=degenerate)


def rotate_srv(s: SrvCurve, rotation: np.ndarray) -> SrvCurve:
    return SrvCurve(q=s.q @ rotation.T, basepoint=rotation @ s.basepoint, closed=s.closed)
