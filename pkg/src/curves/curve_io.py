# -*- coding: utf-8 -*-
"""
Чтение/запись кривых.
- JSON: {"closed": bool, "dim": d, "samples": [[x, ...], ...]}; SRV-кривые с "kind": "srv".
- CSV: одна точка на строку, без заголовка.
"""

import csv
import io
import json
from pathlib import Path

import numpy as np

from src.common.errors import InputValidationError
from src.curves.discrete_curve import DiscreteCurve


def curve_to_dict(c: DiscreteCurve) -> dict:
    return {"closed": c.closed, "dim": c.dim, "samples": c.samples.tolist()}


def curve_from_dict(payload: dict) -> DiscreteCurve:
    if "samples" not in payload:
        raise InputValidationError("curve JSON has no 'samples' field")
    c = DiscreteCurve(np.asarray(payload["samples"], dtype=float), closed=bool(payload.get("closed", False)))
    dim = payload.get("dim")
    if dim is not None and int(dim) != c.dim:
        raise InputValidationError(f"declared dim {dim} does not match samples of dimension {c.dim}")
    return c


def dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def curve_to_csv(c: DiscreteCurve) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in c.samples:
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()


def curve_from_csv(text: str, closed: bool = False) -> DiscreteCurve:
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        try:
            rows.append([float(cell) for cell in row if cell.strip()])
        except ValueError:
            raise InputValidationError(f"non-numeric value in row {row}", line=lineno)
    if rows and len({len(r) for r in rows}) != 1:
        raise InputValidationError("CSV rows have different lengths")
    return DiscreteCurve(np.asarray(rows, dtype=float), closed=closed)


def read_curve(path: str | Path, closed: bool = False) -> DiscreteCurve:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return curve_from_csv(text, closed=closed)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputValidationError(f"{path}: invalid JSON ({exc.msg})", line=exc.lineno)
    return curve_from_dict(payload)


def write_curve(c: DiscreteCurve, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        path.write_text(curve_to_csv(c), encoding="utf-8")
    else:
        path.write_text(dump_json(curve_to_dict(c)), encoding="utf-8")
