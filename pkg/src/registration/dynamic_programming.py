# -*- coding: utf-8 -*-
"""
Динамическое программирование по монотонным путям на сетке G×G.
Допустимые шаги (di, dj): (1,1), (1,2), (2,1), (1,3), (3,1), (2,3), (3,2).
Стоимость ребра: формула трапеций для |q1(t) - q2(γ(t))·sqrt(γ̇)|² вдоль ребра.
Порядок шагов задаёт разрешение равенств: при равной стоимости выигрывает диагональ.
Найденный путь затем уточняется вне решётки (refine_path): значения γ в узлах
сдвигаются покоординатно при тех же границах наклона [1/3, 3].
"""

import numpy as np
from numba import njit

from src.common.env import numba_cache_enabled

SLOPES = np.array([[1, 1], [1, 2], [2, 1], [1, 3], [3, 1], [2, 3], [3, 2]], dtype=np.int64)

MAX_SWEEPS = 200
SWEEP_TOL = 1e-12
GOLDEN_XTOL = 1e-9
INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0

_CACHE = numba_cache_enabled()


@njit(cache=_CACHE, nogil=True)
def edge_cost(q1, q2, k, l, i, j, h):
    di = i - k
    dj = j - l
    root = np.sqrt(dj / di)
    last = q2.shape[0] - 1
    total = 0.0
    for m in range(di + 1):
        num = l * di + m * dj
        p = num // di
        frac = (num % di) / di
        acc = 0.0
        for dd in range(q1.shape[1]):
            if p >= last:
                val = q2[last, dd]
            else:
                val = q2[p, dd] * (1.0 - frac) + q2[p + 1, dd] * frac
            diff = q1[k + m, dd] - val * root
            acc += diff * diff
        if m == 0 or m == di:
            acc *= 0.5
        total += acc
    return total * h


@njit(cache=_CACHE, nogil=True)
def dp_table(q1, q2, slopes, h):
    g = q1.shape[0]
    cost = np.full((g, g), np.inf)
    back = np.full((g, g), -1, dtype=np.int64)
    cost[0, 0] = 0.0
    for i in range(1, g):
        for j in range(1, g):
            best = np.inf
            arg = -1
            for s in range(slopes.shape[0]):
                k = i - slopes[s, 0]
                l = j - slopes[s, 1]
                if k < 0 or l < 0 or cost[k, l] == np.inf:
                    continue
                cand = cost[k, l] + edge_cost(q1, q2, k, l, i, j, h)
                if cand < best:
                    best = cand
                    arg = s
            cost[i, j] = best
            back[i, j] = arg
    return cost, back


def reparam_path(q1: np.ndarray, q2: np.ndarray) -> tuple[float, np.ndarray]:
    """Оптимальная стоимость и путь (узлы (i, j)) для SRV на общей равномерной сетке."""
    q1 = np.ascontiguousarray(q1, dtype=float)
    q2 = np.ascontiguousarray(q2, dtype=float)
    g = q1.shape[0]
    cost, back = dp_table(q1, q2, SLOPES, 1.0 / (g - 1))
    i, j = g - 1, g - 1
    nodes = [(i, j)]
    while (i, j) != (0, 0):
        s = back[i, j]
        i -= int(SLOPES[s, 0])
        j -= int(SLOPES[s, 1])
        nodes.append((i, j))
    return float(cost[g - 1, g - 1]), np.array(nodes[::-1], dtype=np.int64)


@njit(cache=_CACHE, nogil=True)
def _sample(q, pos, h, dd):
    x = pos / h
    last = q.shape[0] - 1
    if x <= 0.0:
        return q[0, dd]
    if x >= last:
        return q[last, dd]
    p = int(np.floor(x))
    frac = x - p
    return q[p, dd] * (1.0 - frac) + q[p + 1, dd] * frac


@njit(cache=_CACHE, nogil=True)
def cell_cost(q1, q2, i, a, b, h):
    """Трапеции на ячейке [t_i, t_{i+1}] при γ(t_i) = a, γ(t_{i+1}) = b (совпадает с edge_cost для узлов решётки)."""
    root = np.sqrt(max(b - a, 0.0) / h)
    total = 0.0
    for dd in range(q1.shape[1]):
        e0 = q1[i, dd] - _sample(q2, a, h, dd) * root
        e1 = q1[i + 1, dd] - _sample(q2, b, h, dd) * root
        total += e0 * e0 + e1 * e1
    return 0.5 * h * total


@njit(cache=_CACHE, nogil=True)
def _knot_cost(q1, q2, v, k, x, h):
    return cell_cost(q1, q2, k - 1, v[k - 1], x, h) + cell_cost(q1, q2, k, x, v[k + 1], h)


@njit(cache=_CACHE, nogil=True)
def refine_knots(q1, q2, values, h, max_sweeps, tol):
    """
    Покоординатный спуск по значениям γ в узлах сетки.
    Каждый узел ищется золотым сечением при наклонах соседних ячеек в [1/3, 3];
    новое значение принимается только при уменьшении стоимости.
    """
    v = values.copy()
    g = v.shape[0]
    total = 0.0
    for i in range(g - 1):
        total += cell_cost(q1, q2, i, v[i], v[i + 1], h)
    xtol = GOLDEN_XTOL * h
    for _ in range(max_sweeps):
        before = total
        for k in range(1, g - 1):
            lo = min(max(v[k - 1] + h / 3.0, v[k + 1] - 3.0 * h), v[k])
            hi = max(min(v[k - 1] + 3.0 * h, v[k + 1] - h / 3.0), v[k])
            current = _knot_cost(q1, q2, v, k, v[k], h)
            a = lo
            b = hi
            c = b - INV_PHI * (b - a)
            d = a + INV_PHI * (b - a)
            fc = _knot_cost(q1, q2, v, k, c, h)
            fd = _knot_cost(q1, q2, v, k, d, h)
            while b - a > xtol:
                if fc < fd:
                    b = d
                    d = c
                    fd = fc
                    c = b - INV_PHI * (b - a)
                    fc = _knot_cost(q1, q2, v, k, c, h)
                else:
                    a = c
                    c = d
                    fc = fd
                    d = a + INV_PHI * (b - a)
                    fd = _knot_cost(q1, q2, v, k, d, h)
            if fc < fd:
                x, fx = c, fc
            else:
                x, fx = d, fd
            if fx < current:
                v[k] = x
                total += fx - current
        if before - total <= tol * (1.0 + total):
            break
    total = 0.0
    for i in range(g - 1):
        total += cell_cost(q1, q2, i, v[i], v[i + 1], h)
    return v, total


def refine_path(q1: np.ndarray, q2: np.ndarray, nodes: np.ndarray,
                max_sweeps: int = MAX_SWEEPS, tol: float = SWEEP_TOL) -> tuple[float, np.ndarray]:
    """Уточняет путь DP вне решётки; возвращает стоимость и значения γ во всех G узлах."""
    q1 = np.ascontiguousarray(q1, dtype=float)
    q2 = np.ascontiguousarray(q2, dtype=float)
    g = q1.shape[0]
    knots = np.linspace(0.0, 1.0, g)
    initial = np.interp(knots, nodes[:, 0] / (g - 1), nodes[:, 1] / (g - 1))
    values, cost = refine_knots(q1, q2, initial, 1.0 / (g - 1), int(max_sweeps), float(tol))
    return float(cost), values
