# -*- coding: utf-8 -*-
"""
Оптимальная репараметризация: DP на сетке G = min(N, 128) (по умолчанию).
- Открытые кривые: один проход DP.
- Замкнутые кривые: перебор S начальных точек (циклических сдвигов q2)
  с уточнением в окрестности лучшего сдвига.
Путь DP (для замкнутых: только лучшего сдвига) уточняется вне решётки
и кусочно-линейно интерполируется на исходные отсчёты.
"""

import numpy as np

from src.common.log import get_logger
from src.registration.dynamic_programming import refine_path, reparam_path
from src.registration.warp import Warp
from src.srv.l2_distance import check_compatible
from src.srv.srv_transform import SrvCurve

log = get_logger("registration.reparam")

DEFAULT_GRID = 128
DEFAULT_SHIFT_SAMPLES = 32


def _on_grid(grid: np.ndarray, ext: np.ndarray, g: int) -> np.ndarray:
    if g == grid.size:
        return ext
    target = np.linspace(0.0, 1.0, g)
    return np.column_stack([np.interp(target, grid, ext[:, k]) for k in range(ext.shape[1])])


def _refined_warp(q1: np.ndarray, q2: np.ndarray, nodes: np.ndarray, out_grid: np.ndarray) -> np.ndarray:
    cost, values = refine_path(q1, q2, nodes)
    log.debug("стоимость после уточнения пути: %.6e", cost)
    return np.interp(out_grid, np.linspace(0.0, 1.0, values.size), values)


def optimal_reparam(s1: SrvCurve, s2: SrvCurve, grid_size: int | None = None,
                    shift_samples: int = DEFAULT_SHIFT_SAMPLES) -> Warp:
    check_compatible(s1, s2)
    n = s1.n
    g = min(n, DEFAULT_GRID) if grid_size is None else max(3, min(int(grid_size), n))

    if not s1.closed:
        grid = np.linspace(0.0, 1.0, n)
        q1, q2 = _on_grid(grid, s1.q, g), _on_grid(grid, s2.q, g)
        _, nodes = reparam_path(q1, q2)
        return Warp(_refined_warp(q1, q2, nodes, grid))

    grid = np.arange(n + 1) / n
    q1 = _on_grid(grid, np.vstack([s1.q, s1.q[:1]]), g)
    results: dict[int, tuple[float, np.ndarray, np.ndarray]] = {}

    def evaluate(shift: int) -> None:
        if shift in results:
            return
        rolled = np.roll(s2.q, -shift, axis=0)
        q2 = _on_grid(grid, np.vstack([rolled, rolled[:1]]), g)
        cost, nodes = reparam_path(q1, q2)
        results[shift] = (cost, nodes, q2)

    shift_samples = max(1, min(int(shift_samples), n))
    coarse = sorted({int(round(k * n / shift_samples)) % n for k in range(shift_samples)})
    for shift in coarse:
        evaluate(shift)
    best = min(coarse, key=lambda k: results[k][0])
    width = int(np.ceil(n / shift_samples))
    for delta in range(-width, width + 1):
        evaluate((best + delta) % n)

    best = min(sorted(results), key=lambda k: results[k][0])
    cost, nodes, q2 = results[best]
    log.debug("лучший сдвиг начальной точки: %d (стоимость %.6e)", best, cost)
    return Warp(_refined_warp(q1, q2, nodes, grid), shift=best)
