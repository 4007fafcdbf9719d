# -*- coding: utf-8 -*-
"""
Кратчайший путь между поверхностями одного класса:
кодирование → геодезическая (srv_geodesic в R⁴/R⁶ или homo_geodesic в S²×R) →
декодирование → сетка на каждом шаге. align=True выравнивает вторую поверхность
по репараметризации (без поворотов: поворот изменил бы поверхность).
"""

import sys
from dataclasses import dataclass, field

import numpy as np

from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.curves.discrete_curve import DiscreteCurve
from src.homogeneous.homo_geodesic import homo_geodesic
from src.homogeneous.sphere_curve import SphereCurve
from src.registration.shape_distance import shape_distance
from src.registration.warp import warp_curve
from src.srv.srv_geodesic import srv_geodesic
from src.surfaces.mesh import Mesh
from src.surfaces.ruled import RuledSpec, ruled_decode, ruled_encode, ruled_mesh
from src.surfaces.strip import StripSpec, strip_decode, strip_encode, strip_mesh
from src.surfaces.tube import TubeSpec, tube_decode, tube_encode, tube_mesh

log = get_logger("surfaces.geodesic")

# 🔧 Параметры демонстрации
N = 48
STEPS = 5

SurfaceSpec = TubeSpec | RuledSpec | StripSpec


@dataclass(frozen=True)
class SurfaceWeights:
    mu: float = 1.0
    nu: float = 1.0
    lam: float = 1.0


@dataclass(frozen=True, eq=False)
class SurfacePath:
    specs: tuple[SurfaceSpec, ...]
    meshes: tuple[Mesh, ...]
    weights: SurfaceWeights = field(default_factory=SurfaceWeights)


def surface_class(spec: SurfaceSpec) -> str:
    if isinstance(spec, TubeSpec):
        return "tube"
    if isinstance(spec, RuledSpec):
        return "ruled"
    if isinstance(spec, StripSpec):
        return "strip"
    raise InputValidationError(f"unknown surface class {type(spec).__name__}")


def surface_mesh(spec: SurfaceSpec, samples: int) -> Mesh:
    kind = surface_class(spec)
    if kind == "tube":
        return tube_mesh(spec, samples)
    if kind == "ruled":
        return ruled_mesh(spec, samples)
    return strip_mesh(spec, samples)


def _flat_path(c0: DiscreteCurve, c1: DiscreteCurve, steps: int, align: bool) -> tuple[DiscreteCurve, ...]:
    if align:
        alignment = shape_distance(c0, c1, rotations=False)
        c1 = warp_curve(c1, alignment.warp)
    return srv_geodesic(c0, c1, steps).curves


def surface_geodesic(a: SurfaceSpec, b: SurfaceSpec, steps: int, samples: int = 16,
                     weights: SurfaceWeights = SurfaceWeights(), align: bool = False) -> SurfacePath:
    kind = surface_class(a)
    if surface_class(b) != kind:
        raise InputValidationError(f"cannot connect a {kind} surface to a {surface_class(b)} surface")

    if kind == "tube":
        curves = _flat_path(tube_encode(a, weights.mu), tube_encode(b, weights.mu), steps, align)
        specs = tuple(tube_decode(c, weights.mu) for c in curves)
    elif kind == "ruled":
        curves = _flat_path(ruled_encode(a, weights.nu), ruled_encode(b, weights.nu), steps, align)
        specs = tuple(ruled_decode(c, weights.nu) for c in curves)
    else:
        path = homo_geodesic(strip_encode(a), strip_encode(b), steps, aux_weight=weights.lam, reparam=align)
        specs = tuple(strip_decode(g) for g in path.curves)

    log.info("путь между поверхностями (%s): %d шагов", kind, len(specs))
    return SurfacePath(specs=specs, meshes=tuple(surface_mesh(s, samples) for s in specs), weights=weights)


if __name__ == "__main__":
    try:
        t = np.linspace(0.0, 1.0, N)
        axis = DiscreteCurve(np.column_stack([np.zeros(N), np.zeros(N), t]))
        path = surface_geodesic(TubeSpec(axis, 0.1), TubeSpec(axis, 0.3), STEPS)
        print("SUCCESS radii:", [round(float(s.radius.mean()), 6) for s in path.specs])
    except Exception as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        sys.exit(1)
