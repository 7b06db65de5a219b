"""
@file: errors.py
@description: Иерархия исключений библиотеки latticeqm
@dependencies: -
@created: 2024-03-21
"""

from pathlib import Path
from typing import Optional, Sequence, Union


class LatticeQMError(Exception):
    """Базовое исключение библиотеки."""


class InvalidArgumentError(LatticeQMError, ValueError):
    """Недопустимые индексы или параметры операции."""


class LadderBoundaryError(LatticeQMError):
    """Лестничный оператор применён к крайнему уровню."""


class DomainError(LatticeQMError, ValueError):
    """Импульс попадает на полюс tan (|k_μ ε| >= 1/2)."""


class QuantizationError(LatticeQMError, ValueError):
    """Импульс не квантован для периодического хранения поля."""


class NoRealRootError(LatticeQMError):
    """Дисперсионное уравнение не имеет вещественного корня."""


class NoNullVectorError(LatticeQMError):
    """Матрица Дирака невырождена: импульс вне массовой поверхности."""


class TruncationError(LatticeQMError):
    """Не удалось подтвердить оценку хвоста усечённой суммы."""


class UnknownSuiteError(LatticeQMError):
    """Запрошен неизвестный набор проверок."""

    def __init__(self, suite: str, known: Sequence[str]):
        self.suite = suite
        self.known = tuple(known)
        super().__init__(
            f"Unknown suite '{suite}'. Known suites: {', '.join(self.known)}"
        )


class ReportIOError(LatticeQMError, OSError):
    """Ошибка записи отчёта."""

    def __init__(self, path: Union[str, Path], reason: Optional[str] = None):
        self.path = Path(path)
        message = f"Cannot write report to {self.path}"
        if reason:
            message = f"{message}: {reason}"
        super().__init__(message)
