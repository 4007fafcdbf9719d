# -*- coding: utf-8 -*-
"""
Треугольная сетка и запись в OBJ (ASCII, индексы с 1, строки "v x y z" / "f i j k").
grid_faces триангулирует прямоугольную решётку вершин rows × cols
(индекс вершины = row·cols + col), с замыканием по строкам и/или столбцам.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from src.common.errors import InputValidationError


@dataclass(frozen=True, eq=False)
class Mesh:
    vertices: np.ndarray
    faces: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        f = np.array(self.faces, dtype=np.int64)
        if v.ndim != 2 or v.shape[1] != 3:
            raise InputValidationError(f"mesh vertices must be an (V, 3) array, got shape {v.shape}")
        if f.ndim != 2 or f.shape[1] != 3:
            raise InputValidationError(f"mesh faces must be an (F, 3) array, got shape {f.shape}")
        if f.size and (f.min() < 0 or f.max() >= v.shape[0]):
            raise InputValidationError("mesh face index out of range")
        v.setflags(write=False)
        f.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "faces", f)

    def face_areas(self) -> np.ndarray:
        a, b, c = (self.vertices[self.faces[:, k]] for k in range(3))
        return 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)


def grid_faces(rows: int, cols: int, cyclic_rows: bool, cyclic_cols: bool) -> np.ndarray:
    faces = []
    row_steps = rows if cyclic_rows else rows - 1
    col_steps = cols if cyclic_cols else cols - 1
    for i in range(row_steps):
        i1 = (i + 1) % rows
        for j in range(col_steps):
            j1 = (j + 1) % cols
            a, b = i * cols + j, i1 * cols + j
            c, d = i1 * cols + j1, i * cols + j1
            faces.append((a, b, c))
            faces.append((a, c, d))
    return np.array(faces, dtype=np.int64).reshape(-1, 3)


def obj_text(mesh: Mesh) -> str:
    lines = [f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in mesh.vertices]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.faces]
    return "\n".join(lines) + "\n"


def write_obj(mesh: Mesh, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(obj_text(mesh), encoding="utf-8")
