# -*- coding: utf-8 -*-
"""
Иерархия исключений пакета.
- InputValidationError: плохие входные данные (формат файла, размеры, грамматика HURDAT2).
- NumericalError: численный отказ (кривая не иммерсия, лифт не определён и т.п.).
CLI отображает первые в код выхода 2, вторые в код выхода 1.
"""


class InputValidationError(ValueError):
    """Некорректные или несогласованные входные данные."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NumericalError(RuntimeError):
    """Численный отказ операции."""


class NotImmersedError(NumericalError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"not an immersion at sample {index}")


class DegenerateCurveError(NumericalError):
    def __init__(self, message: str = "degenerate curve"):
        super().__init__(message)


class LiftUndefinedError(NumericalError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"lift undefined: samples {index} and {index + 1} are antipodal")


class SpeedPoleError(NumericalError):
    def __init__(self):
        super().__init__("speed pole in domain")
