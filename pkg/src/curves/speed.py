# -*- coding: utf-8 -*-
"""
Скорость ω = |ċ| и знаковая кривизна плоской кривой κ = (ċ × c̈) / ω³.
Знак: положительная для окружности, обходимой против часовой стрелки.
"""

import numpy as np

from src.common.errors import InputValidationError
from src.curves.discrete_curve import DiscreteCurve, require_immersion
from src.curves.finite_differences import differentiate, second_derivative


def velocity(c: DiscreteCurve) -> np.ndarray:
    return differentiate(c.samples, c.closed, c.dt)


def speed(c: DiscreteCurve) -> np.ndarray:
    return np.linalg.norm(velocity(c), axis=1)


def plane_curvature(c: DiscreteCurve) -> np.ndarray:
    if c.dim != 2:
        raise InputValidationError(f"plane curvature needs a curve in R^2, got dimension {c.dim}")
    d1 = velocity(c)
    omega = np.linalg.norm(d1, axis=1)
    require_immersion(c, omega)
    d2 = second_derivative(c.samples, c.closed, c.dt)
    cross = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
    return cross / omega ** 3
