# -*- coding: utf-8 -*-
"""
Подкоманды CLI. Каждая возвращает JSON-отчёт (dict) и пишет файлы в cfg.out:
- distance   : выравнивание и расстояние двух входов
- geodesic   : шаги геодезической (JSON кривых, OBJ для поверхностей)
- prop-check : таблица аналитических и численных ω̃, κ̃ для плоской кривой
- hurricane  : матрица расстояний треков HURDAT2 и геодезическая первой пары
- mesh       : сетка одной поверхности в OBJ
"""

import csv
import io
import json
from pathlib import Path

import numpy as np

from src.cli.run_config import RunConfig
from src.common.errors import InputValidationError
from src.common.log import get_logger
from src.curves.curve_io import curve_from_csv, curve_from_dict, curve_to_dict, dump_json
from src.curves.discrete_curve import DiscreteCurve
from src.curves.resample_uniform import resample_sphere_uniform, resample_uniform
from src.curves.speed import plane_curvature, speed
from src.homogeneous.homo_distance import homo_distance
from src.homogeneous.homo_geodesic import homo_geodesic
from src.homogeneous.sphere_curve import SphereCurve, sphere_curve_from_dict, sphere_curve_to_dict
from src.hurdat.filter_storms import filter_storms
from src.hurdat.parse_hurdat2 import read_hurdat2
from src.hurdat.track_to_curve import DEFAULT_SAMPLES, track_to_curve
from src.plane.plane_geometry import collinearity_residual, interior, plane_geometry
from src.plane.straightening_curve import straightening_curve
from src.plane.total_curvature import total_curvature, turning_number
from src.registration.distance_matrix import distance_matrix
from src.registration.shape_distance import shape_distance
from src.registration.warp import warp_curve
from src.srv.srv_geodesic import srv_geodesic
from src.srv.srv_transform import srv_image, srv_transform
from src.surfaces.mesh import write_obj
from src.surfaces.ruled import RuledSpec, ruled_encode
from src.surfaces.strip import StripSpec, strip_encode
from src.surfaces.surface_geodesic import SurfaceWeights, surface_geodesic, surface_mesh
from src.surfaces.surface_io import surface_from_dict, surface_to_dict
from src.surfaces.tube import TubeSpec, tube_encode

log = get_logger("cli")

PROP_CHECK_SAMPLES = 2048
RANDOM_MODES = 4


# ---------- ввод ----------

def load_input(path: str, cfg: RunConfig):
    """Кривая в R^d, кривая на S² или поверхность: по содержимому файла."""
    p = Path(path)
    if not p.is_file():
        raise InputValidationError(f"{path}: no such file")
    text = p.read_text(encoding="utf-8")
    try:
        if p.suffix.lower() == ".csv":
            item = curve_from_csv(text, closed=cfg.closed)
        else:
            payload = json.loads(text)
            if "class" in payload:
                item = surface_from_dict(payload)
            elif payload.get("dim") == "S2":
                item = sphere_curve_from_dict(payload)
            else:
                item = curve_from_dict(payload)
    except json.JSONDecodeError as exc:
        raise InputValidationError(f"{path}: invalid JSON: {exc.msg}", line=exc.lineno) from exc
    except InputValidationError as exc:
        raise InputValidationError(f"{path}: {exc}") from exc
    return _resampled(item, cfg.n)


def _resampled(item, n: int | None):
    if n is None:
        return item
    if isinstance(item, DiscreteCurve):
        return resample_uniform(item, n)
    if isinstance(item, SphereCurve):
        points, aux = resample_sphere_uniform(item.points, n, item.aux)
        return SphereCurve(points, aux)
    return item


def _pair(cfg: RunConfig):
    if len(cfg.inputs) != 2:
        raise InputValidationError(f"{cfg.command} needs exactly two inputs, got {len(cfg.inputs)}")
    a, b = (load_input(p, cfg) for p in cfg.inputs)
    if type(a) is not type(b):
        raise InputValidationError(f"inputs are of different kinds: {type(a).__name__} vs {type(b).__name__}")
    return a, b


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_report(cfg: RunConfig, name: str, report: dict) -> dict:
    (_out_dir(cfg) / name).write_text(dump_json(report), encoding="utf-8")
    return report


def _weights(cfg: RunConfig) -> SurfaceWeights:
    return SurfaceWeights(mu=cfg.mu, nu=cfg.nu, lam=cfg.lam)


def _report(cfg: RunConfig, **fields) -> dict:
    return {"config": cfg.to_dict(), **fields}


# ---------- distance ----------

def _euclidean_alignment(c0: DiscreteCurve, c1: DiscreteCurve, cfg: RunConfig, rotations: bool):
    return shape_distance(c0, c1, rotations=rotations, reparam=cfg.reparam, shift_samples=cfg.shift_samples)


def cmd_distance(cfg: RunConfig) -> dict:
    a, b = _pair(cfg)
    if isinstance(a, (SphereCurve, StripSpec)):
        ga, gb = (strip_encode(a), strip_encode(b)) if isinstance(a, StripSpec) else (a, b)
        res = homo_distance(ga, gb, aux_weight=cfg.lam, reparam=cfg.reparam, shift_samples=cfg.shift_samples)
        report = _report(cfg, distance=res.distance, theta=res.theta, rotation=res.rotation.tolist(),
                         warp=None if res.warp is None else res.warp.values.tolist())
        return _write_report(cfg, "distance.json", report)

    rotations = cfg.rotations
    if isinstance(a, TubeSpec):
        a, b, rotations = tube_encode(a, cfg.mu), tube_encode(b, cfg.mu), False
    elif isinstance(a, RuledSpec):
        a, b, rotations = ruled_encode(a, cfg.nu), ruled_encode(b, cfg.nu), False
    res = _euclidean_alignment(a, b, cfg, rotations)
    report = _report(cfg, distance=res.distance, rotation=res.rotation.tolist(), warp=res.warp.values.tolist(),
                     shift=res.shift, iterations=res.iterations)
    return _write_report(cfg, "distance.json", report)


# ---------- geodesic ----------

def _aligned_second(c0: DiscreteCurve, c1: DiscreteCurve, cfg: RunConfig) -> DiscreteCurve:
    if not (cfg.rotations or cfg.reparam):
        return c1
    res = _euclidean_alignment(c0, c1, cfg, cfg.rotations)
    moved = warp_curve(c1, res.warp)
    return DiscreteCurve(moved.samples @ res.rotation.T, closed=moved.closed)


def cmd_geodesic(cfg: RunConfig) -> dict:
    a, b = _pair(cfg)
    out = _out_dir(cfg)
    if isinstance(a, (TubeSpec, RuledSpec, StripSpec)):
        path = surface_geodesic(a, b, cfg.steps, samples=cfg.samples, weights=_weights(cfg), align=cfg.reparam)
        for k, (spec, mesh) in enumerate(zip(path.specs, path.meshes)):
            write_obj(mesh, out / f"step_{k:03d}.obj")
            (out / f"step_{k:03d}.json").write_text(dump_json(surface_to_dict(spec)), encoding="utf-8")
        return _write_report(cfg, "geodesic.json", _report(cfg, steps=len(path.specs)))

    if isinstance(a, SphereCurve):
        path = homo_geodesic(a, b, cfg.steps, aux_weight=cfg.lam, reparam=cfg.reparam,
                             shift_samples=cfg.shift_samples)
        for k, g in enumerate(path.curves):
            (out / f"step_{k:03d}.json").write_text(dump_json(sphere_curve_to_dict(g)), encoding="utf-8")
        report = _report(cfg, steps=len(path.curves), distance=path.distance, length=path.length())
        return _write_report(cfg, "geodesic.json", report)

    path = srv_geodesic(a, _aligned_second(a, b, cfg), cfg.steps)
    for k, c in enumerate(path.curves):
        (out / f"step_{k:03d}.json").write_text(dump_json(curve_to_dict(c)), encoding="utf-8")
    report = _report(cfg, steps=len(path.curves), length=path.length(), immersed=list(path.immersed),
                     closure_gaps=list(path.closure_gaps))
    return _write_report(cfg, "geodesic.json", report)


# ---------- prop-check ----------

def random_plane_curve(seed: int, n: int) -> DiscreteCurve:
    """Эллипс с малыми случайными гармониками (замкнутая кривая)."""
    rng = np.random.default_rng(seed)
    t = 2.0 * np.pi * np.arange(n) / n
    pts = np.column_stack([2.0 * np.cos(t), np.sin(t)])
    for k in range(2, 2 + RANDOM_MODES):
        coef = rng.normal(scale=0.05 / k ** 2, size=(2, 2))
        pts += np.column_stack([coef[0, 0] * np.cos(k * t) + coef[0, 1] * np.sin(k * t),
                                coef[1, 0] * np.cos(k * t) + coef[1, 1] * np.sin(k * t)])
    return DiscreteCurve(pts, closed=True)


def _prop_check_curve(cfg: RunConfig) -> DiscreteCurve:
    n = cfg.n or PROP_CHECK_SAMPLES
    if cfg.straightening is not None:
        a, b, amplitude = cfg.straightening
        return straightening_curve(a, b, amplitude, n)
    if cfg.inputs:
        c = load_input(cfg.inputs[0], cfg)
        if not isinstance(c, DiscreteCurve):
            raise InputValidationError("prop-check needs a plane curve")
        return c
    return random_plane_curve(cfg.seed, n)


def _max_abs(x: np.ndarray) -> float:
    x = np.abs(np.asarray(x, dtype=float))
    x = x[np.isfinite(x)]
    return float(x.max()) if x.size else 0.0


def cmd_prop_check(cfg: RunConfig) -> dict:
    c = _prop_check_curve(cfg)
    if c.dim != 2:
        raise InputValidationError(f"prop-check needs a plane curve, got dimension {c.dim}")
    geo = plane_geometry(c)
    image = srv_image(srv_transform(c))
    omega_tilde_num = speed(image)
    kappa_tilde_num = plane_curvature(image)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "omega", "kappa", "omega_tilde_analytic", "omega_tilde_numeric",
                     "kappa_tilde_analytic", "kappa_tilde_numeric", "phi"])
    for row in zip(c.params, geo.omega, geo.kappa, geo.omega_tilde, omega_tilde_num,
                   geo.kappa_tilde, kappa_tilde_num, geo.phi):
        writer.writerow([f"{float(x):.12g}" for x in row])
    (_out_dir(cfg) / "prop_check.csv").write_text(buf.getvalue(), encoding="utf-8")

    summary = {
        "samples": c.n,
        "closed": c.closed,
        "max_omega_tilde_gap": _max_abs(interior(geo.omega_tilde - omega_tilde_num, c.closed)),
        "max_kappa_tilde_gap": _max_abs(interior(geo.kappa_tilde - kappa_tilde_num, c.closed)),
        "max_abs_kappa_tilde_numeric": _max_abs(interior(kappa_tilde_num, c.closed)),
        "image_collinearity_residual": collinearity_residual(image.samples),
        "total_curvature": total_curvature(c),
        "image_total_curvature": total_curvature(image),
    }
    if c.closed:
        summary["turning_number"] = turning_number(c)
        summary["image_turning_number"] = turning_number(image)
    return _write_report(cfg, "prop_check.json", _report(cfg, summary=summary))


# ---------- hurricane ----------

def cmd_hurricane(cfg: RunConfig) -> dict:
    if not cfg.inputs:
        raise InputValidationError("hurricane needs a HURDAT2 file")
    path = Path(cfg.inputs[0])
    if not path.is_file():
        raise InputValidationError(f"{path}: no such file")
    try:
        records = read_hurdat2(path)
    except InputValidationError as exc:
        raise InputValidationError(f"{path}: {exc}") from exc
    selected = filter_storms(records, cfg.year_from, cfg.year_to, cfg.min_category)

    storms, curves = [], []
    for rec in selected:
        try:
            curves.append(track_to_curve(rec, n=cfg.n or DEFAULT_SAMPLES, wind_weight=cfg.lam_w,
                                         interpolate_missing=cfg.interpolate_missing))
            storms.append(rec)
        except InputValidationError as exc:
            log.warning("шторм %s пропущен: %s", rec.id, exc)
    log.info("штормов для сравнения: %d из %d", len(storms), len(records))

    # aux = λ_w·maxwind уже после track_to_curve
    matrix = distance_matrix(curves, lambda g1, g2: homo_distance(
        g1, g2, aux_weight=1.0, reparam=cfg.reparam, shift_samples=cfg.shift_samples).distance)

    out = _out_dir(cfg)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id"] + [rec.id for rec in storms])
    for rec, row in zip(storms, matrix):
        writer.writerow([rec.id] + [f"{x:.12g}" for x in row])
    (out / "distances.csv").write_text(buf.getvalue(), encoding="utf-8")

    geodesic_steps = 0
    if len(curves) >= 2:
        path = homo_geodesic(curves[0], curves[1], cfg.steps, aux_weight=1.0, reparam=cfg.reparam,
                             shift_samples=cfg.shift_samples)
        geo_dir = out / "geodesic"
        geo_dir.mkdir(exist_ok=True)
        for k, g in enumerate(path.curves):
            meta = {"from": storms[0].id, "to": storms[1].id, "step": k}
            (geo_dir / f"step_{k:03d}.json").write_text(dump_json(sphere_curve_to_dict(g, meta)), encoding="utf-8")
        geodesic_steps = len(path.curves)

    for rec, g in zip(storms, curves):
        (out / f"{rec.id}.json").write_text(dump_json(sphere_curve_to_dict(g, rec.meta())), encoding="utf-8")

    report = _report(cfg, storms=[rec.meta() for rec in storms], distances=matrix.tolist(),
                     geodesic_steps=geodesic_steps)
    return _write_report(cfg, "hurricane.json", report)


# ---------- mesh ----------

def cmd_mesh(cfg: RunConfig) -> dict:
    if len(cfg.inputs) != 1:
        raise InputValidationError(f"mesh needs exactly one surface input, got {len(cfg.inputs)}")
    spec = load_input(cfg.inputs[0], cfg)
    if not isinstance(spec, (TubeSpec, RuledSpec, StripSpec)):
        raise InputValidationError(f"{cfg.inputs[0]}: not a surface spec")
    mesh = surface_mesh(spec, cfg.samples)
    write_obj(mesh, _out_dir(cfg) / "mesh.obj")
    report = _report(cfg, vertices=int(mesh.vertices.shape[0]), faces=int(mesh.faces.shape[0]))
    return _write_report(cfg, "mesh.json", report)


COMMANDS = {
    "distance": cmd_distance,
    "geodesic": cmd_geodesic,
    "prop-check": cmd_prop_check,
    "hurricane": cmd_hurricane,
    "mesh": cmd_mesh,
}
