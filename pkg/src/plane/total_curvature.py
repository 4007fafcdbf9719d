# -*- coding: utf-8 -*-
"""
Полная кривизна ∫κω dt и число вращения замкнутой плоской кривой.
"""

import numpy as np

from src.common.errors import InputValidationError
from src.curves.discrete_curve import DiscreteCurve
from src.curves.finite_differences import integrate_samples
from src.curves.speed import plane_curvature, speed


def total_curvature(c: DiscreteCurve) -> float:
    kappa = plane_curvature(c)
    return float(integrate_samples(kappa * speed(c), c.closed, c.dt))


def turning_number(c: DiscreteCurve) -> int:
    if not c.closed:
        raise InputValidationError("turning number is defined for closed curves only")
    return int(np.round(total_curvature(c) / (2.0 * np.pi)))
