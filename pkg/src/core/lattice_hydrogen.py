"""
@file: lattice_hydrogen.py
@description: Дискретная радиальная задача на функциях Мейкснера: уравнение
    Штурма-Лиувилля, ортогональность с весом 1/(x+γ), лестничные операторы L±,
    предел μ -> 1 к функциям Лагерра
@dependencies: numpy, scipy, pydantic, discrete_poly
@created: 2024-03-24
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import eval_genlaguerre, gammaln

from .discrete_poly import MeixnerFamily, MeixnerTruncation, meixner_truncation, radial_table
from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)

PREFACTOR_TOLERANCE = 1e-9


class HydrogenModel(BaseModel):
    """
    Радиальная модель с параметрами Мейкснера.

    Attributes:
        gamma: γ > 0 (роль 2l+2)
        mu: 0 < μ < 1
        n_max: Число сохраняемых уровней (>= 1)
    """

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(gt=0.0, allow_inf_nan=False)
    mu: float = Field(gt=0.0, lt=1.0)
    n_max: int = Field(default=8, ge=1)

    @property
    def family(self) -> MeixnerFamily:
        return MeixnerFamily(gamma=self.gamma, mu=self.mu)

    @property
    def truncation(self) -> MeixnerTruncation:
        """Подтверждённое усечение для уровней 0..n_max+1 (L+ достигает n_max+1)."""
        return _truncation(self.gamma, self.mu, self.n_max + 1)

    @property
    def x_cut(self) -> int:
        return self.truncation.x_cut


class LadderDirection(str, Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class LadderFit:
    """
    Результат подгонки L±U_n ≈ c U_{n±1}.

    Attributes:
        n: Исходный уровень
        direction: Направление
        prefactor: Коэффициент c по методу наименьших квадратов
        cosine: Косинус угла между L±U_n и U_{n±1}
        residual: max |L±U_n - c U_{n±1}|
        printed: Значение напечатанной формулы (nan, если не определено)
        expected: Коэффициент, согласованный с рекурсией
    """

    n: int
    direction: LadderDirection
    prefactor: float
    cosine: float
    residual: float
    printed: float
    expected: float


@dataclass(frozen=True)
class LaguerrePoint:
    """Ошибка в sup-норме для одного μ."""

    mu: float
    sup_error: float


@lru_cache(maxsize=64)
def _truncation(gamma: float, mu: float, levels: int) -> MeixnerTruncation:
    return meixner_truncation(MeixnerFamily(gamma=gamma, mu=mu), levels)


@lru_cache(maxsize=64)
def _radial(gamma: float, mu: float, levels: int, x_max: int) -> NDArray[np.float64]:
    table = radial_table(MeixnerFamily(gamma=gamma, mu=mu), levels, x_max)
    table.setflags(write=False)
    return table


def _model_table(model: HydrogenModel) -> NDArray[np.float64]:
    # одна лишняя точка по x для слагаемого U(x+1)
    return _radial(model.gamma, model.mu, model.n_max + 1, model.x_cut + 1)


def _check_level(model: HydrogenModel, n: int) -> None:
    if not 0 <= n <= model.n_max + 1:
        raise InvalidArgumentError(f"level n={n} outside [0, {model.n_max + 1}]")


def _sl_operator(gamma: float, mu: float, rows: NDArray[np.float64], x: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Левая часть уравнения Штурма-Лиувилля по точкам x, rows[..., x] = U(x).

    √(μ(x+1)/(x+γ+1)) U(x+1) + √(μx/(x+γ)) U(x-1) - (μ(x+γ)+x)/(x+γ) U(x);
    при x = 0 слагаемое с U(-1) выпадает.
    """
    count = x.size
    here = rows[..., :count]
    ahead = rows[..., 1 : count + 1]
    behind = np.zeros_like(here)
    behind[..., 1:] = rows[..., : count - 1]
    return (
        np.sqrt(mu * (x + 1.0) / (x + gamma + 1.0)) * ahead
        + np.sqrt(mu * x / (x + gamma)) * behind
        - (mu * (x + gamma) + x) / (x + gamma) * here
    )


def sl_difference_residual(model: HydrogenModel, n: int, x: int) -> float:
    """
    Левая минус правая часть разностного уравнения в точке (n, x).

    Правая часть (μ-1) n U_n(x)/(x+γ).

    Args:
        model: Радиальная модель
        n: Уровень (0 <= n <= n_max+1)
        x: Точка сетки (x >= 0)

    Returns:
        float: Знаковая невязка

    Raises:
        InvalidArgumentError: Если индексы вне диапазона
    """
    _check_level(model, n)
    if x < 0:
        raise InvalidArgumentError(f"x must be nonnegative, got {x}")
    rows = _radial(model.gamma, model.mu, n, x + 1)[n]
    grid = np.arange(x + 1, dtype=np.float64)
    lhs = _sl_operator(model.gamma, model.mu, rows, grid)[x]
    rhs = (model.mu - 1.0) * n * rows[x] / (x + model.gamma)
    return float(lhs - rhs)


def sl_residual_max(model: HydrogenModel) -> float:
    """max |невязка| по n <= n_max, 0 <= x <= x_cut."""
    table = _model_table(model)[: model.n_max + 1]
    x = np.arange(model.x_cut + 1, dtype=np.float64)
    n = np.arange(model.n_max + 1, dtype=np.float64)[:, None]
    lhs = _sl_operator(model.gamma, model.mu, table, x)
    rhs = (model.mu - 1.0) * n * table[:, : x.size] / (x + model.gamma)
    residual = float(np.max(np.abs(lhs - rhs)))
    logger.debug(f"[HYDROGEN] diffeq gamma={model.gamma} mu={model.mu} residual={residual:.3e}")
    return residual


def sl_gram(model: HydrogenModel) -> NDArray[np.float64]:
    """Матрица Σ_x U_m U_n/(x+γ) для m, n <= n_max."""
    table = _model_table(model)[: model.n_max + 1, : model.x_cut + 1]
    weight = 1.0 / (np.arange(model.x_cut + 1) + model.gamma)
    return (table * weight) @ table.T


def sl_orthogonality(model: HydrogenModel, m: int, n: int) -> float:
    """
    Взвешенная сумма Σ_{x=0}^{x_cut} U_m(x) U_n(x)/(x+γ).

    Ноль при m ≠ n, положительна (равна μ) при m = n.
    """
    _check_level(model, m)
    _check_level(model, n)
    table = _model_table(model)
    weight = 1.0 / (np.arange(model.x_cut + 1) + model.gamma)
    return float(np.sum(table[m, : model.x_cut + 1] * table[n, : model.x_cut + 1] * weight))


def sl_eigenvalue(model: HydrogenModel, n: int) -> float:
    """
    Отношение Рэлея Σ U_n (L U_n) / Σ U_n²/(x+γ); ожидается (μ-1) n.
    """
    _check_level(model, n)
    rows = _model_table(model)[n]
    x = np.arange(model.x_cut + 1, dtype=np.float64)
    image = _sl_operator(model.gamma, model.mu, rows, x)
    here = rows[: x.size]
    return float(np.dot(here, image) / np.sum(here**2 / (x + model.gamma)))


def _x_grid(model: HydrogenModel, x_range: Optional[Iterable[int]]) -> NDArray[np.int64]:
    if x_range is None:
        return np.arange(model.x_cut + 1)
    grid = np.asarray(list(x_range), dtype=np.int64)
    if grid.size and grid.min() < 0:
        raise InvalidArgumentError("x_range must be nonnegative")
    return grid


def ladder_up(model: HydrogenModel, n: int, x_range: Optional[Iterable[int]] = None) -> NDArray[np.float64]:
    """
    Правая часть L+: μ(x+n+γ) U_n(x) - √(μx(x+γ)) U_n(x-1).

    Args:
        model: Радиальная модель
        n: Уровень (0 <= n <= n_max)
        x_range: Точки x (по умолчанию 0..x_cut)

    Returns:
        NDArray: Значения по x_range
    """
    if not 0 <= n <= model.n_max:
        raise InvalidArgumentError(f"level n={n} outside [0, {model.n_max}]")
    grid = _x_grid(model, x_range)
    if grid.size == 0:
        return np.zeros(0)
    mu, gamma = model.mu, model.gamma
    rows = _radial(gamma, mu, n, int(grid.max()))[n]
    x = grid.astype(np.float64)
    behind = np.where(grid > 0, rows[np.maximum(grid - 1, 0)], 0.0)
    return mu * (x + n + gamma) * rows[grid] - np.sqrt(mu * x * (x + gamma)) * behind


def ladder_down(
    model: HydrogenModel,
    n: int,
    x_range: Optional[Iterable[int]] = None,
    printed: bool = False,
) -> NDArray[np.float64]:
    """
    Правая часть L-: μ(x+γ+n) U_n(x) - c(x) U_n(x+1).

    Коэффициент c(x) = √μ (x+γ) √((x+1)/(x+γ+1)) даёт функцию, коллинеарную
    U_{n-1}. При printed=True используется напечатанный вариант
    μ (x+γ) √((x+1)/(x+γ+1)), который коллинеарности не даёт.
    Для n = 0 возвращается нулевой массив.
    """
    if not 0 <= n <= model.n_max + 1:
        raise InvalidArgumentError(f"level n={n} outside [0, {model.n_max + 1}]")
    grid = _x_grid(model, x_range)
    if n == 0 or grid.size == 0:
        return np.zeros(grid.size)
    mu, gamma = model.mu, model.gamma
    rows = _radial(gamma, mu, n, int(grid.max()) + 1)[n]
    x = grid.astype(np.float64)
    scale = mu if printed else math.sqrt(mu)
    coefficient = scale * (x + gamma) * np.sqrt((x + 1.0) / (x + gamma + 1.0))
    return mu * (x + gamma + n) * rows[grid] - coefficient * rows[grid + 1]


def up_prefactor_expected(model: HydrogenModel, n: int) -> float:
    """√(μ(γ+n)(n+1))."""
    return math.sqrt(model.mu * (model.gamma + n) * (n + 1))


def up_prefactor_printed(model: HydrogenModel, n: int) -> float:
    """Напечатанный вариант √(μ(γ+n)(n-1)); nan при n = 0."""
    value = model.mu * (model.gamma + n) * (n - 1)
    return math.sqrt(value) if value >= 0 else float("nan")


def down_prefactor_expected(model: HydrogenModel, n: int) -> float:
    """√(μn(n+γ-1))."""
    return math.sqrt(model.mu * n * (n + model.gamma - 1.0))


def ladder_prefactor(
    model: HydrogenModel,
    n: int,
    direction: LadderDirection = LadderDirection.UP,
    printed: bool = False,
) -> LadderFit:
    """
    Измеряет коэффициент c в L±U_n = c U_{n±1} по всей усечённой сетке.

    Расхождение с напечатанной формулой пишется в лог как предупреждение.

    Args:
        model: Радиальная модель
        n: Уровень (для DOWN n >= 1)
        direction: Направление лестницы
        printed: Для DOWN использовать напечатанный коэффициент при U_n(x+1)

    Returns:
        LadderFit: Коэффициент, косинус и невязка
    """
    direction = LadderDirection(direction)
    if direction is LadderDirection.UP:
        image = ladder_up(model, n)
        target_level = n + 1
        expected = up_prefactor_expected(model, n)
        printed_value = up_prefactor_printed(model, n)
    else:
        if n < 1:
            raise InvalidArgumentError("lowering fit needs n >= 1")
        image = ladder_down(model, n, printed=printed)
        target_level = n - 1
        expected = down_prefactor_expected(model, n)
        printed_value = expected
    target = _model_table(model)[target_level, : model.x_cut + 1]
    overlap = float(np.dot(image, target))
    prefactor = overlap / float(np.dot(target, target))
    cosine = overlap / float(np.linalg.norm(image) * np.linalg.norm(target))
    residual = float(np.max(np.abs(image - prefactor * target)))
    fit = LadderFit(
        n=n,
        direction=direction,
        prefactor=prefactor,
        cosine=cosine,
        residual=residual,
        printed=printed_value,
        expected=expected,
    )
    if direction is LadderDirection.UP and not abs(prefactor - printed_value) <= PREFACTOR_TOLERANCE:
        logger.warning(
            f"[HYDROGEN] L+ prefactor n={n}: measured={prefactor:.12g} "
            f"printed sqrt(mu(gamma+n)(n-1))={printed_value:.12g} "
            f"sqrt(mu(gamma+n)(n+1))={expected:.12g}"
        )
    if direction is LadderDirection.DOWN and printed:
        logger.warning(
            f"[HYDROGEN] L- with printed coefficient mu(x+gamma)sqrt((x+1)/(x+gamma+1)) "
            f"n={n}: cosine with U_(n-1)={cosine:.12g}"
        )
    return fit


def continuum_radial(n: int, l: int, s: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Непрерывная радиальная функция √(ρ₁(s)) L^{2l+1}_{n-l-1}(s), ρ₁(s) = s ρ(s),
    ρ(s) = s^{2l+1} e^{-s}, нормированная как Σ U²/(x+γ) при μ = 1.
    """
    degree = n - l - 1
    alpha = 2 * l + 1
    s = np.asarray(s, dtype=np.float64)
    log_norm = 0.5 * (gammaln(degree + 1.0) - gammaln(degree + alpha + 1.0))
    with np.errstate(divide="ignore"):
        envelope = np.exp(0.5 * ((alpha + 1) * np.log(s) - s) + log_norm)
    return envelope * eval_genlaguerre(degree, alpha, s)


def laguerre_limit_probe(mus: Sequence[float], n: int, l: int) -> List[LaguerrePoint]:
    """
    Сравнение U_{n-l-1}(x)/√μ при γ = 2l+2 с непрерывной функцией в точках
    s = (1-μ) x.

    Args:
        mus: Последовательность μ -> 1
        n: Главное квантовое число
        l: Орбитальное число

    Returns:
        List[LaguerrePoint]: Таблица (μ, sup-ошибка)

    Raises:
        InvalidArgumentError: Если n-l-1 < 0, l < 0 или последовательность пуста
    """
    if l < 0 or n - l - 1 < 0:
        raise InvalidArgumentError(f"invalid (n, l) = ({n}, {l}): need n - l - 1 >= 0")
    if not mus:
        raise InvalidArgumentError("mu sequence must not be empty")
    degree = n - l - 1
    gamma = 2.0 * l + 2.0
    points = []
    for mu in mus:
        family = MeixnerFamily(gamma=gamma, mu=mu)
        x_cut = meixner_truncation(family, degree).x_cut
        discrete = radial_table(family, degree, x_cut)[degree] / math.sqrt(mu)
        s = (1.0 - mu) * np.arange(x_cut + 1, dtype=np.float64)
        error = float(np.max(np.abs(discrete - continuum_radial(n, l, s))))
        points.append(LaguerrePoint(mu=mu, sup_error=error))
    logger.info(
        f"[HYDROGEN] laguerre n={n} l={l}: " + ", ".join(f"mu={p.mu}:{p.sup_error:.3e}" for p in points)
    )
    return points
