# -*- coding: utf-8 -*-
"""
JSON-схема поверхностей: {"class": "tube"|"ruled"|"strip", ...каналы...}.
- tube:  {"center": <curve>, "radius": [...]}
- ruled: {"base": <curve>, "ruling": [[...], ...]}
- strip: {"base": <sphere curve>, "bandwidth": [...]}
"""

from src.common.errors import InputValidationError
from src.curves.curve_io import curve_from_dict, curve_to_dict
from src.homogeneous.sphere_curve import sphere_curve_from_dict, sphere_curve_to_dict
from src.surfaces.ruled import RuledSpec
from src.surfaces.strip import StripSpec
from src.surfaces.tube import TubeSpec


def surface_to_dict(spec) -> dict:
    if isinstance(spec, TubeSpec):
        return {"class": "tube", "center": curve_to_dict(spec.center), "radius": spec.radius.tolist()}
    if isinstance(spec, RuledSpec):
        return {"class": "ruled", "base": curve_to_dict(spec.base), "ruling": spec.ruling.tolist()}
    if isinstance(spec, StripSpec):
        return {"class": "strip", "base": sphere_curve_to_dict(spec.base), "bandwidth": spec.bandwidth.tolist()}
    raise InputValidationError(f"unknown surface class {type(spec).__name__}")


def surface_from_dict(payload: dict):
    kind = payload.get("class")
    try:
        if kind == "tube":
            return TubeSpec(curve_from_dict(payload["center"]), payload["radius"])
        if kind == "ruled":
            return RuledSpec(curve_from_dict(payload["base"]), payload["ruling"])
        if kind == "strip":
            return StripSpec(sphere_curve_from_dict(payload["base"]), payload["bandwidth"])
    except KeyError as exc:
        raise InputValidationError(f"{kind} surface JSON is missing {exc}") from exc
    raise InputValidationError(f"unknown surface class {kind!r}")
