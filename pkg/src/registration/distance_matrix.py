# -*- coding: utf-8 -*-
"""
Матрица попарных расстояний с ограниченным числом воркеров (ELASTICA_THREADS).
Считаются только пары i < j; результат записывается по индексам, поэтому
порядок завершения задач на результат не влияет.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

from src.common.env import get_worker_count

T = TypeVar("T")


def distance_matrix(items: Sequence[T], metric: Callable[[T, T], float],
                    workers: int | None = None) -> np.ndarray:
    n = len(items)
    out = np.zeros((n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return out
    workers = get_worker_count() if workers is None else max(1, int(workers))
    with ThreadPoolExecutor(max_workers=min(workers, len(pairs))) as pool:
        values = list(pool.map(lambda ij: metric(items[ij[0]], items[ij[1]]), pairs))
    for (i, j), value in zip(pairs, values):
        out[i, j] = out[j, i] = value
    return out
