# -*- coding: utf-8 -*-
"""
Геодезическая между кривыми на S² (S²×R) в карте H × L²:
- старт: по геодезической SO(3) от α₁(0) к α₂(0)x*,
- ξ: линейно от q(α₁) к Ad_{x*⁻¹}q(α₂),
- канал aux: по своей SRV-прямой.
Каждый шаг восстанавливается через group_srv_inverse и проецируется на S² (·e₃).
"""

from dataclasses import dataclass

import numpy as np

from src.homogeneous.group_srv import group_srv_inverse
from src.homogeneous.homo_distance import (HomoChart, aux_term, chart_algebra_srv, chart_distance,
                                           homo_chart, rotate_chart, warp_chart)
from src.homogeneous.so3 import so3_distance, so3_exp, so3_log
from src.homogeneous.sphere_curve import SphereCurve
from src.srv.srv_geodesic import interpolation_times


@dataclass(frozen=True, eq=False)
class HomoGeodesic:
    curves: tuple[SphereCurve, ...]
    charts: tuple[HomoChart, ...]
    distance: float
    theta: float

    def length(self) -> float:
        """Сумма длин хорд между соседними шагами в карте."""
        total = 0.0
        for a, b in zip(self.charts[:-1], self.charts[1:]):
            sq = so3_distance(a.start, b.start) ** 2 + a.dt * float(np.sum((a.xi - b.xi) ** 2)) + aux_term(a, b)
            total += float(np.sqrt(sq))
        return total


def _decode_aux(c: HomoChart, weight: float) -> np.ndarray:
    rate = c.aux_q * np.abs(c.aux_q)
    scaled = c.aux_start + c.dt * np.concatenate([[0.0], np.cumsum(rate)])
    return scaled / weight


def chart_to_sphere_curve(c: HomoChart, aux_weight: float = 1.0) -> SphereCurve:
    frames = group_srv_inverse(chart_algebra_srv(c))
    aux = _decode_aux(c, aux_weight) if c.has_aux else None
    return SphereCurve(frames.project(), aux)


def homo_geodesic(g1: SphereCurve, g2: SphereCurve, steps: int, aux_weight: float = 1.0,
                  reparam: bool = False, shift_samples: int = 32) -> HomoGeodesic:
    taus = interpolation_times(steps)
    c1, c2 = homo_chart(g1, aux_weight), homo_chart(g2, aux_weight)
    best = chart_distance(c1, c2, reparam=reparam, shift_samples=shift_samples)
    if best.warp is not None:
        c2 = warp_chart(c2, best.warp)
    c2 = rotate_chart(c2, best.rotation)

    log_start = so3_log(c1.start.T @ c2.start)
    charts = []
    for tau in taus:
        start = c1.start @ so3_exp(tau * log_start)
        xi = (1.0 - tau) * c1.xi + tau * c2.xi
        if c1.has_aux:
            charts.append(HomoChart(start=start, xi=xi,
                                    aux_start=(1.0 - tau) * c1.aux_start + tau * c2.aux_start,
                                    aux_q=(1.0 - tau) * c1.aux_q + tau * c2.aux_q))
        else:
            charts.append(HomoChart(start=start, xi=xi))
    curves = tuple(chart_to_sphere_curve(c, aux_weight) for c in charts)
    return HomoGeodesic(curves=curves, charts=tuple(charts), distance=best.distance, theta=best.theta)
