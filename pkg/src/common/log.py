# -*- coding: utf-8 -*-
"""
Единая настройка логирования: формат "[YYYY-mm-dd HH:MM:SS] LEVEL имя: сообщение" в stderr.
"""

import logging
import sys

from src.common.env import get_log_level

_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"
_configured = False


def get_logger(name: str) -> logging.Logger:
    global _configured
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT, _DATEFMT))
        root = logging.getLogger("elastica")
        root.addHandler(handler)
        root.setLevel(get_log_level())
        root.propagate = False
        _configured = True
    return logging.getLogger(f"elastica.{name}")
