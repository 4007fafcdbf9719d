# -*- coding: utf-8 -*-
"""
Настройки окружения (.env / переменные окружения).
- ELASTICA_THREADS     : максимум воркеров для матриц расстояний (по умолчанию число CPU)
- ELASTICA_LOG_LEVEL   : уровень логирования (по умолчанию INFO)
- ELASTICA_NUMBA_CACHE : кэшировать скомпилированные ядра numba на диске (по умолчанию да)
"""

import os
from dotenv import load_dotenv

from src.common.errors import InputValidationError


def _str_to_bool(v: str | None) -> bool:
    return (v or "").strip().lower() in {"1", "true", "yes", "y", "on"}


def get_worker_count() -> int:
    load_dotenv()
    raw = os.getenv("ELASTICA_THREADS")
    if not raw:
        return max(1, os.cpu_count() or 1)
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputValidationError(f"ELASTICA_THREADS must be an integer, got {raw!r}")


def get_log_level() -> str:
    load_dotenv()
    return (os.getenv("ELASTICA_LOG_LEVEL") or "INFO").strip().upper()


def numba_cache_enabled() -> bool:
    load_dotenv()
    raw = os.getenv("ELASTICA_NUMBA_CACHE")
    if raw is None:
        return True
    return _str_to_bool(raw)
