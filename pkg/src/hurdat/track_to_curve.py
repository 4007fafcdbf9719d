# -*- coding: utf-8 -*-
"""
Трек шторма → кривая на S² с каналом интенсивности aux = λ_w·maxwind.
- Фиксации без ветра отбрасываются (или интерполируются по времени, interpolate_missing=True).
- Подряд идущие совпадающие позиции сливаются (остаётся первая).
- Перевыборка: равномерно по длине дуги большого круга.
"""

import numpy as np

from src.common.errors import InputValidationError
from src.homogeneous.sphere_curve import SphereCurve
from src.curves.resample_uniform import resample_sphere_uniform
from src.hurdat.storm_record import StormRecord

DEFAULT_WIND_WEIGHT = 0.01
DEFAULT_SAMPLES = 128


def lat_lon_to_unit(lat_deg: np.ndarray, lon_deg: np.ndarray) -> np.ndarray:
    lat = np.radians(np.asarray(lat_deg, dtype=float))
    lon = np.radians(np.asarray(lon_deg, dtype=float))
    return np.stack([np.cos(lat) * np.cos(lon), np.cos(lat) * np.sin(lon), np.sin(lat)], axis=-1)


def _winds(record: StormRecord, interpolate_missing: bool) -> tuple[list[int], np.ndarray]:
    known = [k for k, f in enumerate(record.fixes) if f.wind is not None]
    if not interpolate_missing or not known:
        return known, np.array([record.fixes[k].wind for k in known], dtype=float)
    t0 = record.fixes[0].time
    hours = np.array([(f.time - t0).total_seconds() for f in record.fixes]) / 3600.0
    values = np.interp(hours, hours[known], [record.fixes[k].wind for k in known])
    return list(range(len(record.fixes))), values


def track_to_curve(record: StormRecord, n: int = DEFAULT_SAMPLES, wind_weight: float = DEFAULT_WIND_WEIGHT,
                   interpolate_missing: bool = False) -> SphereCurve:
    if wind_weight <= 0.0:
        raise InputValidationError(f"wind weight must be positive, got {wind_weight}")
    keep, winds = _winds(record, interpolate_missing)
    lat = [record.fixes[k].lat for k in keep]
    lon = [record.fixes[k].lon for k in keep]

    merged = [0] if keep else []
    for k in range(1, len(keep)):
        if (lat[k], lon[k]) != (lat[merged[-1]], lon[merged[-1]]):
            merged.append(k)
    if len(merged) < 3:
        raise InputValidationError(f"track too short: {record.id} has {len(merged)} usable fixes")

    points = lat_lon_to_unit(np.take(lat, merged), np.take(lon, merged))
    points, aux = resample_sphere_uniform(points, n, winds[merged])
    return SphereCurve(points, wind_weight * aux)
