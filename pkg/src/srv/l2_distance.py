# -*- coding: utf-8 -*-
"""
Плоская L²-метрика в пространстве SRV: sqrt(∫ |q1 - q2|² dt).
Базовые точки игнорируются (фактор по сдвигам).
"""

import numpy as np

from src.common.errors import InputValidationError
from src.curves.finite_differences import integrate_samples
from src.srv.srv_transform import SrvCurve


def check_compatible(s1: SrvCurve, s2: SrvCurve) -> None:
    if s1.q.shape != s2.q.shape:
        raise InputValidationError(f"SRV shapes differ: {s1.q.shape} vs {s2.q.shape}")
    if s1.closed != s2.closed:
        raise InputValidationError("cannot compare an open curve with a closed one")


def l2_norm(q: np.ndarray, closed: bool, dt: float) -> float:
    sq = np.sum(np.asarray(q, dtype=float) ** 2, axis=1)
    return float(np.sqrt(max(float(integrate_samples(sq, closed, dt)), 0.0)))


def l2_distance(s1: SrvCurve, s2: SrvCurve) -> float:
    check_compatible(s1, s2)
    return l2_norm(s1.q - s2.q, s1.closed, s1.dt)
