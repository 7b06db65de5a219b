"""
@file: models.py
@description: Модели записей проверок и конфигурации прогона
@dependencies: pydantic
@created: 2024-03-26
"""

import math
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

KNOWN_SUITES: Tuple[str, ...] = ("weyl", "poly", "oscillator", "hydrogen", "dirac")

OutputFormat = Literal["csv", "json"]


class CheckRecord(BaseModel):
    """
    Результат одной проверки.

    Attributes:
        suite: Набор проверок
        check: Имя проверки
        params: Параметры в виде строк
        residual: Измеренная невязка
        threshold: Порог приёмки (> 0)
        passed: residual <= threshold (в отчёте поле "pass")
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    suite: str
    check: str
    params: Dict[str, str] = Field(default_factory=dict)
    residual: float
    threshold: float = Field(gt=0.0)
    passed: bool = Field(alias="pass")

    @model_validator(mode="after")
    def _pass_matches_residual(self) -> "CheckRecord":
        expected = math.isfinite(self.residual) and self.residual <= self.threshold
        if self.passed != expected:
            raise ValueError(f"pass={self.passed} contradicts residual={self.residual} threshold={self.threshold}")
        return self

    @classmethod
    def measure(cls, suite: str, check: str, params: Dict[str, object], residual: float, threshold: float) -> "CheckRecord":
        """Строит запись, вычисляя pass по порогу."""
        residual = float(residual)
        return cls(
            suite=suite,
            check=check,
            params={key: str(value) for key, value in params.items()},
            residual=residual,
            threshold=threshold,
            passed=math.isfinite(residual) and residual <= threshold,
        )

    def params_text(self) -> str:
        """Параметры в виде "k=v;k=v" с ключами по алфавиту."""
        return ";".join(f"{key}={self.params[key]}" for key in sorted(self.params))

    def sort_key(self) -> Tuple[str, str, str]:
        return (self.suite, self.check, self.params_text())


class WeylGrid(BaseModel):
    dims: List[int] = Field(default_factory=lambda: list(range(2, 257)))
    matrix_dims: List[int] = Field(default_factory=lambda: [2, 3, 4, 5, 7, 8, 16, 31, 64, 128, 256])
    samples: int = Field(default=50, ge=1)
    pair: Optional[Tuple[int, int]] = None
    sigma: float = math.pi / 6.0
    tau: float = 1.0
    scaling: str = "momentum"
    continuum_dims: List[int] = Field(default_factory=lambda: [16, 32, 64, 128, 256])


class PolyGrid(BaseModel):
    j_max: float = 20.0
    betas: List[float] = Field(default_factory=lambda: [math.pi / 3.0, math.pi / 2.0, 2.0 * math.pi / 3.0])
    meixner_points: List[Tuple[float, float]] = Field(default_factory=lambda: [(1.0, 0.3), (2.5, 0.5), (4.0, 0.7)])
    n_max: int = Field(default=10, ge=0)
    x_max: int = Field(default=60, ge=0)
    family: Optional[Literal["kravchuk", "meixner"]] = None


class OscillatorGrid(BaseModel):
    js: List[float] = Field(default_factory=lambda: [k / 2.0 for k in range(1, 41)])
    betas: List[float] = Field(default_factory=lambda: [math.pi / 3.0, math.pi / 2.0, 2.0 * math.pi / 3.0])
    hermite_js: List[float] = Field(default_factory=lambda: [25.0, 50.0, 100.0, 200.0])
    hermite_levels: List[int] = Field(default_factory=lambda: [0, 1, 2])


class HydrogenGrid(BaseModel):
    points: List[Tuple[float, float]] = Field(default_factory=lambda: [(1.0, 0.3), (2.0, 0.5), (4.0, 0.7)])
    n_max: int = Field(default=8, ge=1)
    laguerre_mus: List[float] = Field(default_factory=lambda: [0.9, 0.95, 0.975])
    laguerre_levels: List[Tuple[int, int]] = Field(default_factory=lambda: [(1, 0), (2, 0), (2, 1), (3, 1)])


class DiracGrid(BaseModel):
    epsilon: float = Field(default=0.5, gt=0.0)
    m0c: float = Field(default=1.0, ge=0.0)
    extents: Tuple[int, int, int, int] = (4, 4, 4, 4)
    k: Optional[Tuple[float, float, float, float]] = None
    kernel_samples: int = Field(default=10, ge=1)
    momenta: int = Field(default=20, ge=1)
    momentum_bound: float = Field(default=0.2, gt=0.0, lt=0.5)
    momentum_extent: int = Field(default=32, ge=2)
    kg_sizes: List[int] = Field(default_factory=lambda: [2, 3, 4, 5, 6])
    kg_fields: int = Field(default=50, ge=1)


class SuiteGrids(BaseModel):
    weyl: WeylGrid = Field(default_factory=WeylGrid)
    poly: PolyGrid = Field(default_factory=PolyGrid)
    oscillator: OscillatorGrid = Field(default_factory=OscillatorGrid)
    hydrogen: HydrogenGrid = Field(default_factory=HydrogenGrid)
    dirac: DiracGrid = Field(default_factory=DiracGrid)


class RunConfig(BaseModel):
    """
    Конфигурация прогона.

    Attributes:
        suites: Выбранные наборы
        checks: Выбранные проверки по наборам (None - все)
        grids: Сетки параметров по наборам
        output_path: Файл отчёта (None - без записи)
        output_format: csv или json
        seed: Зерно генератора случайных чисел
        workers: Число потоков для наборов
    """

    suites: List[str]
    checks: Optional[Dict[str, List[str]]] = None
    grids: SuiteGrids = Field(default_factory=SuiteGrids)
    output_path: Optional[Path] = None
    output_format: OutputFormat = "csv"
    seed: int = 20240321
    workers: int = Field(default=4, ge=1)

    @field_validator("suites")
    @classmethod
    def _deduplicate(cls, value: List[str]) -> List[str]:
        return list(dict.fromkeys(value))
