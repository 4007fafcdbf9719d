# -*- coding: utf-8 -*-
"""
Параметры запуска CLI: одна неизменяемая структура, проверяемая один раз.
Каждый отчёт включает её целиком (to_dict).
"""

from dataclasses import asdict, dataclass

from src.common.errors import InputValidationError


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    n: int | None = None
    steps: int = 10
    rotations: bool = True
    reparam: bool = True
    shift_samples: int = 32
    mu: float = 1.0
    nu: float = 1.0
    lam: float = 1.0
    lam_w: float = 0.01
    out: str = "elastica_out"
    seed: int = 0
    closed: bool = False
    samples: int = 16
    straightening: tuple[float, float, float] | None = None
    year_from: int | None = None
    year_to: int | None = None
    min_category: int = 0
    interpolate_missing: bool = False

    def validate(self) -> "RunConfig":
        for name in ("mu", "nu", "lam", "lam_w"):
            if getattr(self, name) <= 0:
                raise InputValidationError(f"--{name.replace('_', '-')} must be positive, got {getattr(self, name)}")
        if self.n is not None and self.n < 8:
            raise InputValidationError(f"--n must be at least 8, got {self.n}")
        if self.steps < 2:
            raise InputValidationError(f"--steps must be at least 2, got {self.steps}")
        if self.shift_samples < 1:
            raise InputValidationError(f"--shift-samples must be at least 1, got {self.shift_samples}")
        if self.samples < 3:
            raise InputValidationError(f"--samples must be at least 3, got {self.samples}")
        return self

    def to_dict(self) -> dict:
        out = asdict(self)
        out["inputs"] = list(self.inputs)
        if self.straightening is not None:
            out["straightening"] = list(self.straightening)
        return out
