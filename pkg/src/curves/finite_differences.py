# -*- coding: utf-8 -*-
"""
Разностная схема и квадратуры, общие для всех модулей.
- Открытые кривые: центральные разности внутри, односторонние 2-го порядка на концах.
- Замкнутые кривые: циклические центральные разности.
- Интеграл: трапеции (открытые) / сумма Римана (замкнутые).
integrate_velocity: точное обращение differentiate: восстанавливает отсчёты по скоростям.
"""

import numpy as np
from scipy.integrate import trapezoid


def differentiate(values: np.ndarray, closed: bool, dt: float) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if closed:
        return (np.roll(v, -1, axis=0) - np.roll(v, 1, axis=0)) / (2.0 * dt)
    return np.gradient(v, dt, axis=0, edge_order=2)


def second_derivative(values: np.ndarray, closed: bool, dt: float) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if closed:
        return (np.roll(v, -1, axis=0) - 2.0 * v + np.roll(v, 1, axis=0)) / dt ** 2
    out = np.empty_like(v)
    n = v.shape[0]
    if n < 4:
        out[:] = (v[0] - 2.0 * v[1] + v[2]) / dt ** 2
        return out
    out[1:-1] = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / dt ** 2
    out[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / dt ** 2
    out[-1] = (2.0 * v[-1] - 5.0 * v[-2] + 4.0 * v[-3] - v[-4]) / dt ** 2
    return out


def integrate_samples(values: np.ndarray, closed: bool, dt: float) -> np.ndarray | float:
    v = np.asarray(values, dtype=float)
    if closed:
        return dt * np.sum(v, axis=0)
    return trapezoid(v, dx=dt, axis=0)


def integrate_velocity(velocity: np.ndarray, start: np.ndarray, closed: bool, dt: float) -> np.ndarray:
    """
    Восстанавливает c по ċ так, что differentiate(c) == ċ (для согласованных данных: точно).
    Центральная разность связывает отсчёты через один, поэтому чётные и нечётные отсчёты
    собираются двумя кумулятивными суммами:
        c[i+1] = c[i-1] + 2·dt·ċ[i].
    Сдвиг нечётной цепочки: для открытой кривой: из уравнения левого конца,
    для замкнутой: минимизацией циклических вторых разностей.
    """
    v = np.asarray(velocity, dtype=float)
    if v.ndim == 1:
        v = v[:, None]
    n = v.shape[0]
    start = np.broadcast_to(np.asarray(start, dtype=float), (v.shape[1],))

    out = np.empty_like(v)
    out[0] = start
    out[2::2] = start + 2.0 * dt * np.cumsum(v[1:n - 1:2], axis=0)

    if closed:
        first_odd = start + dt * v[0]
    else:
        # (-3 c0 + 4 c1 - c2) / (2 dt) = ċ0
        first_odd = (2.0 * dt * v[0] + 3.0 * start + out[2]) / 4.0
    out[1] = first_odd
    out[3::2] = first_odd + 2.0 * dt * np.cumsum(v[2:n - 1:2], axis=0)

    if closed:
        idx = np.arange(n)
        odd = (idx % 2 == 1).astype(float)
        weight = odd[(idx + 1) % n] + odd[(idx - 1) % n] - 2.0 * odd
        d2 = np.roll(out, -1, axis=0) - 2.0 * out + np.roll(out, 1, axis=0)
        shift = -(weight @ d2) / (weight @ weight)
        out[1::2] += shift
    return out
