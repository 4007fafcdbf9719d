# -*- coding: utf-8 -*-
"""
Отбор штормов по годам (год первой фиксации) и категории Саффира–Симпсона
по пиковому maxwind. Категория 5: от 137 узлов.
"""

from typing import Iterable

from src.hurdat.storm_record import StormRecord

CATEGORY_THRESHOLDS = {1: 64, 2: 83, 3: 96, 4: 113, 5: 137}


def saffir_simpson_category(wind: int | None) -> int:
    if wind is None:
        return 0
    return max((cat for cat, kt in CATEGORY_THRESHOLDS.items() if wind >= kt), default=0)


def filter_storms(records: Iterable[StormRecord], year_from: int | None = None, year_to: int | None = None,
                  min_category: int = 0) -> list[StormRecord]:
    out = []
    for rec in records:
        if not rec.fixes:
            continue
        if year_from is not None and rec.year < year_from:
            continue
        if year_to is not None and rec.year > year_to:
            continue
        if min_category > 0 and saffir_simpson_category(rec.peak_wind) < min_category:
            continue
        out.append(rec)
    return out
