# -*- coding: utf-8 -*-
"""
Геодезическая в пространстве кривых по модулю сдвигов: прямая в SRV-координатах.
Шаг k: q = (1-τ)q0 + τq1, базовая точка (1-τ)c0(0) + τc1(0), τ = k/(steps-1).
Промежуточные кривые могут не быть иммерсиями (там, где q обращается в ноль):
они возвращаются с флагом. Для замкнутых кривых разрыв замыкания только сообщается.
"""

from dataclasses import dataclass

import numpy as np

from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.curves.discrete_curve import DiscreteCurve, bounding_diagonal, SPEED_EPS_RELATIVE
from src.srv.l2_distance import check_compatible, l2_distance
from src.srv.srv_transform import SrvCurve, closure_gap, srv_inverse, srv_transform

log = get_logger("srv.geodesic")


@dataclass(frozen=True, eq=False)
class GeodesicPath:
    curves: tuple[DiscreteCurve, ...]
    srvs: tuple[SrvCurve, ...]
    immersed: tuple[bool, ...]
    closure_gaps: tuple[float, ...]

    def length(self) -> float:
        return float(sum(l2_distance(a, b) for a, b in zip(self.srvs[:-1], self.srvs[1:])))


def interpolation_times(steps: int) -> np.ndarray:
    if steps < 2:
        raise InputValidationError(f"a geodesic needs steps >= 2, got {steps}")
    return np.linspace(0.0, 1.0, steps)


def _is_immersed(s: SrvCurve, scale: float) -> bool:
    omega = np.sum(s.q ** 2, axis=1)
    return bool(np.all(omega >= SPEED_EPS_RELATIVE * scale))


def srv_line(s0: SrvCurve, s1: SrvCurve, steps: int) -> list[SrvCurve]:
    check_compatible(s0, s1)
    return [SrvCurve(q=(1.0 - tau) * s0.q + tau * s1.q,
                     basepoint=(1.0 - tau) * s0.basepoint + tau * s1.basepoint,
                     closed=s0.closed)
            for tau in interpolation_times(steps)]


def srv_geodesic(c0: DiscreteCurve, c1: DiscreteCurve, steps: int) -> GeodesicPath:
    if c0.samples.shape != c1.samples.shape or c0.closed != c1.closed:
        raise InputValidationError("geodesic endpoints must share sample count, dimension and closed flag")
    srvs = srv_line(srv_transform(c0), srv_transform(c1), steps)
    scale = max(bounding_diagonal(c0.samples), bounding_diagonal(c1.samples))

    curves, immersed, gaps = [], [], []
    for k, s in enumerate(srvs):
        curves.append(srv_inverse(s))
        ok = _is_immersed(s, scale)
        immersed.append(ok)
        if not ok:
            log.warning("шаг %d геодезической не является иммерсией (q обращается в ноль)", k)
        gap = closure_gap(s) if s.closed else 0.0
        gaps.append(gap)
        if s.closed and gap > 1e-6 * scale:
            log.info("шаг %d: разрыв замыкания %.3e", k, gap)
    return GeodesicPath(curves=tuple(curves), srvs=tuple(srvs), immersed=tuple(immersed),
                        closure_gaps=tuple(gaps))
