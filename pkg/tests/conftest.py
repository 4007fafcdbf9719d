"""
Общие фикстуры тестов: корень репозитория в sys.path и аналитические кривые.
"""

import os
import sys

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, _ROOT)

import numpy as np
import pytest

from src.curves.discrete_curve import DiscreteCurve


def _closed(points_fn, n: int) -> DiscreteCurve:
    t = np.arange(n) / n
    return DiscreteCurve(points_fn(t), closed=True)


@pytest.fixture
def circle():
    def make(n: int = 256, radius: float = 1.0, turns: int = 1) -> DiscreteCurve:
        return _closed(lambda t: radius * np.column_stack([np.cos(2 * np.pi * turns * t),
                                                           np.sin(2 * np.pi * turns * t)]), n)
    return make


@pytest.fixture
def ellipse():
    def make(n: int = 256, a: float = 2.0, b: float = 1.0) -> DiscreteCurve:
        return _closed(lambda t: np.column_stack([a * np.cos(2 * np.pi * t), b * np.sin(2 * np.pi * t)]), n)
    return make


@pytest.fixture
def wavy_arc():
    """Открытая плоская кривая с переменной скоростью и кривизной."""
    def make(n: int = 128, phase: float = 0.0) -> DiscreteCurve:
        t = np.linspace(0.0, 1.0, n)
        angle = 2.5 * np.pi * t + 0.4 * np.sin(2 * np.pi * t + phase)
        r = 1.0 + 0.3 * t
        return DiscreteCurve(np.column_stack([r * np.cos(angle), r * np.sin(angle)]))
    return make


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
