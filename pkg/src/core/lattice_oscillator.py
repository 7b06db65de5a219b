"""
@file: lattice_oscillator.py
@description: Дискретный гармонический осциллятор на d-функциях Вигнера:
    операторы рождения и уничтожения, спектры коммутатора, антикоммутатора,
    гамильтониана и оператора координаты, предел j -> ∞
@dependencies: numpy, scipy, pydantic, discrete_poly
@created: 2024-03-23
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.linalg import eigh_tridiagonal
from scipy.special import eval_hermite, gammaln

from .discrete_poly import KravchukFamily, kravchuk_table, to_doubled, wigner_table
from .errors import InvalidArgumentError, LadderBoundaryError

logger = logging.getLogger(__name__)


class OscillatorModel(BaseModel):
    """
    Осциллятор на сетке x = 0..2j.

    Attributes:
        j: Полуцелое j >= 1/2
        beta: Угол 0 < β < π, p = sin²(β/2)
        hbar_omega: Единица энергии ħω
        alpha: Обратная длина α = √(Mω/ħ)
    """

    model_config = ConfigDict(frozen=True)

    j: float
    beta: float = Field(default=math.pi / 2.0, gt=0.0, lt=math.pi)
    hbar_omega: float = Field(default=1.0, gt=0.0)
    alpha: float = Field(default=1.0, gt=0.0)

    @field_validator("j")
    @classmethod
    def _half_integer(cls, value: float) -> float:
        if to_doubled(value) < 1:
            raise ValueError(f"j must be at least 1/2, got {value}")
        return value

    @property
    def two_j(self) -> int:
        return to_doubled(self.j)

    @property
    def N(self) -> int:
        return self.two_j

    @property
    def p(self) -> float:
        return math.sin(self.beta / 2.0) ** 2

    @property
    def q(self) -> float:
        return math.cos(self.beta / 2.0) ** 2

    @property
    def lattice_spacing(self) -> float:
        """Шаг решётки 1/α = √(ħ/Mω)."""
        return 1.0 / self.alpha


@dataclass(frozen=True)
class OscState:
    """
    Функция на сетке x = 0..N при фиксированном уровне n.

    Attributes:
        two_j: Удвоенное j
        beta: Угол β
        level: Уровень n (m = j - n)
        coeffs: Значения по x (m' = j - x)
        structural_zero: Ноль, возникший на краю лестницы, а не численно
    """

    two_j: int
    beta: float
    level: int
    coeffs: NDArray[np.float64]
    structural_zero: bool = False

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True)
class SpectralMeasurement:
    """Измеренный скаляр λ и невязка max|λ f - O f|."""

    value: float
    residual: float


@dataclass(frozen=True)
class ConvergencePoint:
    """Ошибка в sup-норме для одного j."""

    j: float
    sup_error: float


@lru_cache(maxsize=128)
def _rows(two_j: int, beta: float) -> NDArray[np.float64]:
    values = wigner_table(two_j / 2.0, beta).values
    values.setflags(write=False)
    return values


def _check_level(model: OscillatorModel, n: int) -> None:
    if not 0 <= n <= model.N:
        raise InvalidArgumentError(f"level n={n} outside [0, {model.N}]")


def level_state(model: OscillatorModel, n: int) -> OscState:
    """Строка d^j_{j-n, j-x}(β), x = 0..N, вычисленная напрямую."""
    _check_level(model, n)
    return OscState(model.two_j, model.beta, n, np.array(_rows(model.two_j, model.beta)[n]))


def _zero_state(model: OscillatorModel, level: int) -> OscState:
    return OscState(model.two_j, model.beta, level, np.zeros(model.N + 1), structural_zero=True)


def _raise_rhs(model: OscillatorModel, level: int, coeffs: NDArray[np.float64]) -> NDArray[np.float64]:
    # p(N-x-n) f(x) + √(pq x(N-x+1)) f(x-1)
    big_n, p, q = model.N, model.p, model.q
    x = np.arange(big_n + 1, dtype=np.float64)
    behind = np.zeros_like(coeffs)
    behind[1:] = coeffs[:-1]
    return p * (big_n - x - level) * coeffs + np.sqrt(p * q * x * (big_n - x + 1.0)) * behind


def _lower_rhs(model: OscillatorModel, level: int, coeffs: NDArray[np.float64]) -> NDArray[np.float64]:
    # p(N-x-n) f(x) + √(pq (x+1)(N-x)) f(x+1)
    big_n, p, q = model.N, model.p, model.q
    x = np.arange(big_n + 1, dtype=np.float64)
    ahead = np.zeros_like(coeffs)
    ahead[:-1] = coeffs[1:]
    return p * (big_n - x - level) * coeffs + np.sqrt(p * q * (x + 1.0) * (big_n - x)) * ahead


def raise_state(model: OscillatorModel, n: int, strict: bool = False) -> OscState:
    """
    Правая часть первой рекуррентной формулы на данных уровня n.

    Возвращает функцию √(pq(n+1)(N-n)) d^j_{j-n-1, j-x}(β) уровня n+1.
    На верхнем уровне n = N результат - структурный ноль.

    Args:
        model: Модель осциллятора
        n: Исходный уровень
        strict: Бросать исключение на краю лестницы вместо нуля

    Returns:
        OscState: Состояние уровня n+1
    """
    _check_level(model, n)
    if n == model.N:
        if strict:
            raise LadderBoundaryError(f"creation on the top level n={n}")
        logger.debug(f"[OSC] creation on top level n={n}: structural zero")
        return _zero_state(model, n + 1)
    source = level_state(model, n)
    return OscState(model.two_j, model.beta, n + 1, _raise_rhs(model, n, source.coeffs))


def lower_state(model: OscillatorModel, n: int, strict: bool = False) -> OscState:
    """
    Правая часть второй рекуррентной формулы на данных уровня n.

    Возвращает √(pqn(N-n+1)) d^j_{j-n+1, j-x}(β) уровня n-1; при n = 0 - ноль.
    """
    _check_level(model, n)
    if n == 0:
        if strict:
            raise LadderBoundaryError("annihilation on the ground level")
        logger.debug("[OSC] annihilation on ground level: structural zero")
        return _zero_state(model, -1)
    source = level_state(model, n)
    return OscState(model.two_j, model.beta, n - 1, _lower_rhs(model, n, source.coeffs))


def apply_creation(model: OscillatorModel, state: OscState) -> OscState:
    """A† = (pqN)^{-1/2} x правая часть первой формулы: A† f_n = √((n+1)(N-n)/N) f_{n+1}."""
    if state.structural_zero or state.level >= model.N:
        return _zero_state(model, state.level + 1)
    scale = math.sqrt(model.p * model.q * model.N)
    return OscState(model.two_j, model.beta, state.level + 1, _raise_rhs(model, state.level, state.coeffs) / scale)


def apply_annihilation(model: OscillatorModel, state: OscState) -> OscState:
    """A = (pqN)^{-1/2} x правая часть второй формулы: A f_n = √(n(N-n+1)/N) f_{n-1}."""
    if state.structural_zero or state.level <= 0:
        return _zero_state(model, state.level - 1)
    scale = math.sqrt(model.p * model.q * model.N)
    return OscState(model.two_j, model.beta, state.level - 1, _lower_rhs(model, state.level, state.coeffs) / scale)


def ladder_residual(model: OscillatorModel) -> float:
    """
    Обе рекуррентные формулы по всем n и x против прямых d-функций.

    Правые части на краях (n = N для рождения, n = 0 для уничтожения)
    сравниваются с нулём.
    """
    rows = _rows(model.two_j, model.beta)
    big_n, pq = model.N, model.p * model.q
    worst = 0.0
    for n in range(big_n + 1):
        up = _raise_rhs(model, n, rows[n])
        up_expected = math.sqrt(pq * (n + 1) * (big_n - n)) * rows[n + 1] if n < big_n else 0.0
        down = _lower_rhs(model, n, rows[n])
        down_expected = math.sqrt(pq * n * (big_n - n + 1)) * rows[n - 1] if n > 0 else 0.0
        worst = max(worst, float(np.max(np.abs(up - up_expected))), float(np.max(np.abs(down - down_expected))))
    logger.debug(f"[OSC] ladder j={model.j} beta={model.beta:.4f} residual={worst:.3e}")
    return worst


def _measure(state: OscState, image: OscState) -> SpectralMeasurement:
    value = float(np.dot(state.coeffs, image.coeffs) / np.dot(state.coeffs, state.coeffs))
    residual = float(np.max(np.abs(value * state.coeffs - image.coeffs)))
    return SpectralMeasurement(value=value, residual=residual)


def _products(model: OscillatorModel, n: int):
    state = level_state(model, n)
    up_down = apply_annihilation(model, apply_creation(model, state))
    down_up = apply_creation(model, apply_annihilation(model, state))
    return state, up_down.coeffs, down_up.coeffs


def commutator_measurement(model: OscillatorModel, n: int) -> SpectralMeasurement:
    """Применяет AA† - A†A к уровню n и измеряет скаляр."""
    state, up_down, down_up = _products(model, n)
    image = OscState(model.two_j, model.beta, n, up_down - down_up)
    return _measure(state, image)


def commutator_eigenvalue(model: OscillatorModel, n: int) -> float:
    """[A, A†] d^j_{mm'} = (1 - n/j) d^j_{mm'}: измеренное значение."""
    return commutator_measurement(model, n).value


def anticommutator_measurement(model: OscillatorModel, n: int) -> SpectralMeasurement:
    """Применяет AA† + A†A к уровню n и измеряет скаляр."""
    state, up_down, down_up = _products(model, n)
    image = OscState(model.two_j, model.beta, n, up_down + down_up)
    return _measure(state, image)


def anticommutator_eigenvalue(model: OscillatorModel, n: int) -> float:
    """(AA† + A†A) d^j_{mm'} = {(2n+1) - n²/j} d^j_{mm'}: измеренное значение."""
    return anticommutator_measurement(model, n).value


def hamiltonian_spectrum(model: OscillatorModel) -> List[float]:
    """Собственные значения гамильтониана (ħω/2)(AA† + A†A) по уровням n = 0..N."""
    return [0.5 * model.hbar_omega * anticommutator_eigenvalue(model, n) for n in range(model.N + 1)]


def position_matrix_bands(model: OscillatorModel) -> NDArray[np.float64]:
    """Наддиагональ <f_{n+1}|A†|f_n> матрицы A + A†, измеренная через рекурсию."""
    bands = np.empty(model.N)
    for n in range(model.N):
        image = apply_creation(model, level_state(model, n))
        bands[n] = float(np.dot(level_state(model, n + 1).coeffs, image.coeffs))
    return bands


def position_spectrum(model: OscillatorModel) -> List[float]:
    """
    Собственные значения оператора координаты A + A† на (N+1)-мерном
    пространстве уровней, по возрастанию.
    """
    eigenvalues = eigh_tridiagonal(np.zeros(model.N + 1), position_matrix_bands(model), eigvals_only=True)
    return sorted(float(v) for v in eigenvalues)


def position_eigenvalues_expected(model: OscillatorModel) -> List[float]:
    """Равноотстоящий спектр √(2/j) m', m' = -j..j."""
    scale = math.sqrt(2.0 / model.j)
    return [scale * (k - model.j) for k in range(model.N + 1)]


def hermite_function(n: int, s: NDArray[np.float64]) -> NDArray[np.float64]:
    """ψ_n(s) = (2^n n! √π)^{-1/2} H_n(s) e^{-s²/2}."""
    s = np.asarray(s, dtype=np.float64)
    log_norm = -0.5 * (n * math.log(2.0) + gammaln(n + 1.0) + 0.5 * math.log(math.pi))
    return np.exp(log_norm - 0.5 * s**2) * eval_hermite(n, s)


def scaled_wavefunction(model: OscillatorModel, n: int):
    """
    Дискретная функция K_n(x) в непрерывной переменной s = (x - Np)/√(2Npq).

    Returns:
        Tuple: (s, K_n(x) (2Npq)^{1/4})
    """
    family = KravchukFamily(N=model.N, p=model.p)
    row = kravchuk_table(family, n)[n]
    spread = 2.0 * model.N * model.p * model.q
    s = (np.arange(model.N + 1) - model.N * model.p) / math.sqrt(spread)
    return s, row * spread**0.25


def hermite_convergence(models: Sequence[OscillatorModel], n: int) -> List[ConvergencePoint]:
    """
    Ошибка между масштабированной дискретной функцией и функцией Эрмита ψ_n(s).

    Args:
        models: Модели с β = π/2 (обычно по удваивающемуся j)
        n: Уровень

    Returns:
        List[ConvergencePoint]: Таблица (j, sup-ошибка)

    Raises:
        InvalidArgumentError: Если β ≠ π/2 или n > 2j для какой-либо модели
    """
    if not models:
        raise InvalidArgumentError("model sequence must not be empty")
    smallest = min(model.N for model in models)
    if not 0 <= n <= smallest:
        raise InvalidArgumentError(f"level n={n} too large for the smallest grid N={smallest}")
    points = []
    for model in models:
        if abs(model.beta - math.pi / 2.0) > 1e-12:
            raise InvalidArgumentError(f"convergence study needs beta = pi/2, got {model.beta}")
        s, scaled = scaled_wavefunction(model, n)
        error = float(np.max(np.abs(scaled - hermite_function(n, s))))
        points.append(ConvergencePoint(j=model.j, sup_error=error))
    logger.info(f"[OSC] hermite n={n}: " + ", ".join(f"j={p.j}:{p.sup_error:.3e}" for p in points))
    return points
