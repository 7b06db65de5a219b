"""
@file: discrete_poly.py
@description: Нормированные функции Кравчука и Мейкснера, d-функции Вигнера,
    веса и независимые оракулы (формула с факториалами, разностное уравнение)
@dependencies: numpy, scipy.linalg, scipy.special, pydantic
@created: 2024-03-22
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from .errors import InvalidArgumentError, TruncationError

logger = logging.getLogger(__name__)

# правило усечения бесконечных сумм по x
WEIGHT_CUT_RELATIVE = 1e-18
TAIL_BOUND_RELATIVE = 1e-15


class KravchukFamily(BaseModel):
    """
    Семейство Кравчука на сетке x = 0..N.

    Attributes:
        N: Параметр сетки (N = 2j)
        p: Параметр биномиального веса, 0 < p < 1
    """

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=0)
    p: float = Field(gt=0.0, lt=1.0)

    @property
    def q(self) -> float:
        """q = 1 - p (никогда не хранится отдельно)."""
        return 1.0 - self.p

    @classmethod
    def from_angle(cls, two_j: int, beta: float) -> "KravchukFamily":
        """Семейство для d^j(β): N = 2j, p = sin²(β/2)."""
        return cls(N=two_j, p=math.sin(beta / 2.0) ** 2)


class MeixnerFamily(BaseModel):
    """
    Семейство Мейкснера на x = 0, 1, 2, ...

    Attributes:
        gamma: Параметр γ > 0
        mu: Параметр 0 < μ < 1
    """

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(gt=0.0)
    mu: float = Field(gt=0.0, lt=1.0)


@dataclass(frozen=True)
class WeightTable:
    """Вес ρ на носителе и, для Мейкснера, ρ₁(x) = μ(x+γ)ρ(x)."""

    support: NDArray[np.int64]
    rho: NDArray[np.float64]
    rho1: Optional[NDArray[np.float64]] = None


@dataclass(frozen=True)
class MeixnerTruncation:
    """Точка усечения и оценка отброшенного хвоста."""

    x_cut: int
    tail_bound: float
    envelope_max: float

    @property
    def certified(self) -> bool:
        return self.tail_bound < TAIL_BOUND_RELATIVE * self.envelope_max


@dataclass(frozen=True)
class WignerDTable:
    """
    Таблица d^j_{mm'}(β); values[n, x] = d^j_{j-n, j-x}(β).

    Attributes:
        two_j: Удвоенное j
        beta: Угол β
        values: Вещественная матрица (2j+1) x (2j+1)
    """

    two_j: int
    beta: float
    values: NDArray[np.float64]

    @property
    def j(self) -> float:
        return self.two_j / 2.0

    def element(self, m: float, mp: float) -> float:
        """d^j_{mm'}(β) по полуцелым индексам."""
        m2, mp2 = to_doubled(m), to_doubled(mp)
        _check_projection(self.two_j, m2)
        _check_projection(self.two_j, mp2)
        return float(self.values[(self.two_j - m2) // 2, (self.two_j - mp2) // 2])


def to_doubled(value: float) -> int:
    """
    Переводит полуцелое число в удвоенное целое.

    Raises:
        InvalidArgumentError: Если значение не полуцелое
    """
    doubled = 2.0 * float(value)
    rounded = int(round(doubled))
    if abs(doubled - rounded) > 1e-9:
        raise InvalidArgumentError(f"{value} is not a half-integer")
    return rounded


def _check_projection(two_j: int, two_m: int) -> None:
    if two_j < 0:
        raise InvalidArgumentError(f"j must be nonnegative, got {two_j / 2}")
    if abs(two_m) > two_j or (two_j - two_m) % 2:
        raise InvalidArgumentError(
            f"projection {two_m / 2} is not on the grid of j = {two_j / 2}"
        )


# --- Кравчук ---------------------------------------------------------------


def kravchuk_log_weight(family: KravchukFamily) -> NDArray[np.float64]:
    """log ρ(x) = log C(N, x) + x log p + (N-x) log q."""
    x = np.arange(family.N + 1, dtype=np.float64)
    n = float(family.N)
    return (
        gammaln(n + 1.0)
        - gammaln(x + 1.0)
        - gammaln(n - x + 1.0)
        + x * math.log(family.p)
        + (n - x) * math.log(family.q)
    )


def kravchuk_weight(family: KravchukFamily) -> WeightTable:
    """Биномиальный вес Кравчука."""
    return WeightTable(
        support=np.arange(family.N + 1),
        rho=np.exp(kravchuk_log_weight(family)),
    )


def kravchuk_recurrence(family: KravchukFamily, n_max: int) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Коэффициенты трёхчленной рекурсии ортонормированных многочленов Кравчука.

    x k_n = a_{n+1} k_{n+1} + b_n k_n + a_n k_{n-1}

    Returns:
        Tuple: (b[0..n_max], a[0..n_max]), a[0] = 0
    """
    n = np.arange(n_max + 1, dtype=np.float64)
    big_n = float(family.N)
    b = family.p * (big_n - n) + n * family.q
    a = np.sqrt(np.clip(n * (big_n - n + 1.0), 0.0, None) * family.p * family.q)
    return b, a


def _parity(size: int) -> NDArray[np.float64]:
    idx = np.arange(size)
    return np.where((idx[None, :] - idx[:, None]) % 2 == 0, 1.0, -1.0)


@lru_cache(maxsize=64)
def _rotation_table(two_j: int, beta: float) -> NDArray[np.float64]:
    """
    d^j(β) = exp(-iβJ_y) через спектральное разложение J_x.

    В базисе n = j - m матрица exp(-iβJ_y) = S exp(-iβJ_x) S^{-1}, S = diag(i^n),
    а J_x - вещественная трёхдиагональная матрица со спектром -j..j.
    Ошибка ограничена точностью собственных векторов, без рекурсии по n.
    """
    if two_j == 0:
        values = np.ones((1, 1))
    else:
        k = np.arange(1, two_j + 1, dtype=np.float64)
        off_diagonal = 0.5 * np.sqrt(k * (two_j - k + 1.0))
        spectrum, vectors = eigh_tridiagonal(np.zeros(two_j + 1), off_diagonal)
        propagator = (vectors * np.exp(-1j * beta * spectrum)) @ vectors.T
        idx = np.arange(two_j + 1)
        phase = np.array([1.0, 1j, -1.0, -1j])[(idx[:, None] - idx[None, :]) % 4]
        values = np.real(phase * propagator)
    values.setflags(write=False)
    return values


def kravchuk_table(family: KravchukFamily, n_max: Optional[int] = None) -> NDArray[np.float64]:
    """
    Ортонормированные функции Кравчука K_n(x) = d_n^{-1} √ρ(x) k_n(x).

    Таблица берётся из d^j(β) с N = 2j, p = sin²(β/2):
    K_n(x) = (-1)^{n-x} d^j_{j-n, j-x}(β), без рекурсии по n.

    Args:
        family: Семейство Кравчука
        n_max: Старший уровень (по умолчанию N)

    Returns:
        NDArray: Массив (n_max+1, N+1)
    """
    if n_max is None:
        n_max = family.N
    if not 0 <= n_max <= family.N:
        raise InvalidArgumentError(f"n_max must lie in [0, {family.N}], got {n_max}")
    beta = 2.0 * math.asin(math.sqrt(family.p))
    table = _parity(family.N + 1) * _rotation_table(family.N, beta)
    return table[: n_max + 1]


def kravchuk_normalized(family: KravchukFamily, n: int, x: int) -> float:
    """
    Значение ортонормированной функции Кравчука.

    Args:
        family: Семейство
        n: Степень, 0 <= n <= N
        x: Точка сетки, 0 <= x <= N

    Returns:
        float: d_n^{-1} √ρ(x) k_n^{(p)}(x, N)
    """
    if not 0 <= n <= family.N or not 0 <= x <= family.N:
        raise InvalidArgumentError(f"(n, x) = ({n}, {x}) outside [0, {family.N}]")
    return float(kravchuk_table(family, n)[n, x])


def kravchuk_gram_residual(family: KravchukFamily) -> float:
    """max |Σ_x K_n K_n' - δ_nn'| (конечная сумма)."""
    table = kravchuk_table(family)
    return float(np.max(np.abs(table @ table.T - np.eye(family.N + 1))))


def kravchuk_recurrence_residual(family: KravchukFamily) -> float:
    """max |x K_n - a_{n+1} K_{n+1} - b_n K_n - a_n K_{n-1}| по всей таблице."""
    table = kravchuk_table(family)
    b, a = kravchuk_recurrence(family, family.N)
    x = np.arange(family.N + 1, dtype=np.float64)
    lhs = (x[None, :] - b[:, None]) * table
    rhs = np.zeros_like(table)
    rhs[:-1] += a[1:, None] * table[1:]
    rhs[1:] += a[1:, None] * table[:-1]
    return float(np.max(np.abs(lhs - rhs)))


# --- Вигнер -----------------------------------------------------------------


def wigner_d(j: float, m: float, mp: float, beta: float) -> float:
    """
    d^j_{mm'}(β) по явной формуле с суммой факториалов (оракул).

    Коэффициенты считаются в логарифмах через gammaln.

    Args:
        j: Полуцелое j >= 0
        m: Строчный индекс
        mp: Столбцовый индекс
        beta: Угол 0 <= β <= π

    Returns:
        float: d^j_{mm'}(β)
    """
    j2, a2, b2 = to_doubled(j), to_doubled(m), to_doubled(mp)
    _check_projection(j2, a2)
    _check_projection(j2, b2)
    if not 0.0 <= beta <= math.pi:
        raise InvalidArgumentError(f"beta must lie in [0, pi], got {beta}")

    jpa, jma = (j2 + a2) // 2, (j2 - a2) // 2
    jpb, jmb = (j2 + b2) // 2, (j2 - b2) // 2
    amb = (a2 - b2) // 2
    s = np.arange(max(0, -amb), min(jpb, jma) + 1, dtype=np.float64)
    log_coef = 0.5 * (
        gammaln(jpa + 1.0) + gammaln(jma + 1.0) + gammaln(jpb + 1.0) + gammaln(jmb + 1.0)
    ) - (gammaln(jpb - s + 1.0) + gammaln(s + 1.0) + gammaln(amb + s + 1.0) + gammaln(jma - s + 1.0))
    sign = np.where((amb + s.astype(np.int64)) % 2 == 0, 1.0, -1.0)
    cos_half, sin_half = math.cos(beta / 2.0), math.sin(beta / 2.0)
    powers = np.power(cos_half, j2 - amb - 2.0 * s) * np.power(sin_half, amb + 2.0 * s)
    return float(np.sum(sign * np.exp(log_coef) * powers))


def wigner_table(j: float, beta: float) -> WignerDTable:
    """
    Таблица d^j(β), построенная через функции Кравчука:

    (-1)^{m-m'} d^j_{mm'}(β) = K_n(x), N = 2j, m = j-n, m' = j-x, p = sin²(β/2).
    """
    two_j = to_doubled(j)
    if two_j < 0:
        raise InvalidArgumentError(f"j must be nonnegative, got {j}")
    if not 0.0 < beta < math.pi:
        raise InvalidArgumentError(f"beta must lie in (0, pi), got {beta}")
    table = kravchuk_table(KravchukFamily.from_angle(two_j, beta))
    return WignerDTable(two_j=two_j, beta=beta, values=_parity(two_j + 1) * table)


def kravchuk_wigner_residual(j: float, beta: float) -> float:
    """Сравнение пути Кравчука с формулой факториалов по всем (m, m')."""
    table = wigner_table(j, beta)
    worst = 0.0
    for n in range(table.two_j + 1):
        for x in range(table.two_j + 1):
            m, mp = table.j - n, table.j - x
            worst = max(worst, abs(wigner_d(table.j, m, mp, beta) - table.values[n, x]))
    logger.debug(f"[POLY] kravchuk-wigner j={table.j} beta={beta:.4f} residual={worst:.3e}")
    return worst


def wigner_symmetry_residual(j: float, beta: float) -> float:
    """max |d_{mm'} - (-1)^{m-m'} d_{m'm}|."""
    values = wigner_table(j, beta).values
    return float(np.max(np.abs(values - _parity(values.shape[0]) * values.T)))


# --- Мейкснер ---------------------------------------------------------------


def meixner_log_weight(family: MeixnerFamily, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """log ρ(x) = γ log(1-μ) + x log μ + log Γ(x+γ) - log Γ(γ) - log x!  (Σρ = 1)."""
    return (
        family.gamma * math.log1p(-family.mu)
        + x * math.log(family.mu)
        + gammaln(x + family.gamma)
        - gammaln(family.gamma)
        - gammaln(x + 1.0)
    )


def meixner_weight(family: MeixnerFamily, x_max: int) -> WeightTable:
    """Вес Мейкснера и ρ₁ = μ(x+γ)ρ на x = 0..x_max."""
    x = np.arange(x_max + 1, dtype=np.float64)
    rho = np.exp(meixner_log_weight(family, x))
    return WeightTable(
        support=np.arange(x_max + 1),
        rho=rho,
        rho1=family.mu * (x + family.gamma) * rho,
    )


def meixner_recurrence(family: MeixnerFamily, n_max: int) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Коэффициенты рекурсии ортонормированных многочленов Мейкснера (a[0] = 0)."""
    n = np.arange(n_max + 1, dtype=np.float64)
    mu, gamma = family.mu, family.gamma
    b = (n + mu * (n + gamma)) / (1.0 - mu)
    a = np.sqrt(n * mu * np.clip(n + gamma - 1.0, 0.0, None)) / (1.0 - mu)
    return b, a


def meixner_table(family: MeixnerFamily, n_max: int, x_max: int) -> NDArray[np.float64]:
    """
    Ортонормированные функции Мейкснера M_n(x) на x = 0..x_max.

    Знак выбран так, что M_n(0) > 0 для всех n.

    Returns:
        NDArray: Массив (n_max+1, x_max+1)
    """
    if n_max < 0 or x_max < 0:
        raise InvalidArgumentError(f"n_max and x_max must be nonnegative, got {n_max}, {x_max}")
    x = np.arange(x_max + 1, dtype=np.float64)
    b, a = meixner_recurrence(family, n_max)
    table = np.empty((n_max + 1, x_max + 1))
    table[0] = np.exp(0.5 * meixner_log_weight(family, x))
    if n_max >= 1:
        table[1] = (x - b[0]) * table[0] / a[1]
    for n in range(1, n_max):
        table[n + 1] = ((x - b[n]) * table[n] - a[n] * table[n - 1]) / a[n + 1]
    # нули многочленов лежат на (0, ∞): знак в нуле равен (-1)^n
    table[1::2] *= -1.0
    return table


def meixner_normalized(family: MeixnerFamily, n: int, x: int) -> float:
    """M_n^{(γ)}(x) = d_n^{-1} √ρ(x) m_n^γ(x)."""
    if n < 0 or x < 0:
        raise InvalidArgumentError(f"n and x must be nonnegative, got ({n}, {x})")
    return float(meixner_table(family, n, x)[n, x])


def radial_table(family: MeixnerFamily, n_max: int, x_max: int) -> NDArray[np.float64]:
    """U_n(x) = √(μ(x+γ)) M_n(x) на x = 0..x_max."""
    x = np.arange(x_max + 1, dtype=np.float64)
    return np.sqrt(family.mu * (x + family.gamma)) * meixner_table(family, n_max, x_max)


def meixner_radial(family: MeixnerFamily, n: int, x: int) -> float:
    """
    Радиальная функция U_n(x) = d_n^{-1} √ρ₁(x) m_n^γ(x), ρ₁ = μ(x+γ)ρ.

    Отношение U_n(x)/M_n(x) = √(μ(x+γ)) не зависит от n.
    """
    if n < 0 or x < 0:
        raise InvalidArgumentError(f"n and x must be nonnegative, got ({n}, {x})")
    return float(radial_table(family, n, x)[n, x])


def _weight_cut(family: MeixnerFamily) -> int:
    x_max = 64
    while True:
        log_rho = meixner_log_weight(family, np.arange(x_max + 1, dtype=np.float64))
        peak = int(np.argmax(log_rho))
        below = np.nonzero(log_rho[peak:] < log_rho[peak] + math.log(WEIGHT_CUT_RELATIVE))[0]
        if below.size:
            return peak + int(below[0])
        x_max *= 2


def meixner_truncation(family: MeixnerFamily, n_max: int, max_rounds: int = 24) -> MeixnerTruncation:
    """
    Точка усечения сумм по x для уровней n <= n_max.

    Начинает с правила веса (ρ < 1e-18 max ρ) и расширяет сетку, пока огибающая
    E(x) = max_n M_n(x)² не упадёт ниже того же порога и геометрическая оценка
    хвоста E(x_cut)/(1-r) не станет меньше 1e-15 max E.

    Raises:
        TruncationError: Если оценку не удалось подтвердить
    """
    x_cut = _weight_cut(family)
    for _ in range(max_rounds):
        envelope = np.max(meixner_table(family, n_max, x_cut) ** 2, axis=0)
        peak = float(np.max(envelope))
        ratio = envelope[-1] / envelope[-2] if envelope[-2] > 0 else 0.0
        if envelope[-1] < WEIGHT_CUT_RELATIVE * peak and ratio < 1.0:
            tail = float(envelope[-1] / (1.0 - ratio))
            truncation = MeixnerTruncation(x_cut=x_cut, tail_bound=tail, envelope_max=peak)
            if truncation.certified:
                logger.debug(
                    f"[POLY] meixner cut gamma={family.gamma} mu={family.mu} "
                    f"n_max={n_max}: x_cut={x_cut} tail={tail:.3e}"
                )
                return truncation
        x_cut = int(x_cut * 1.5) + 8
    raise TruncationError(
        f"no certified truncation for gamma={family.gamma}, mu={family.mu}, n_max={n_max}"
    )


def meixner_gram_residual(family: MeixnerFamily, n_max: int) -> float:
    """max |Σ_x M_m M_n - δ_mn| с подтверждённым усечением."""
    cut = meixner_truncation(family, n_max)
    table = meixner_table(family, n_max, cut.x_cut)
    return float(np.max(np.abs(table @ table.T - np.eye(n_max + 1))))


def meixner_difference_residual(family: MeixnerFamily, n_max: int, x_max: int) -> float:
    """
    Невязка разностного уравнения Мейкснера по n <= n_max, 0 <= x <= x_max:

    √(μ(γ+x)(x+1)) M_n(x+1) + √(μx(x+γ-1)) M_n(x-1) - [μ(x+n+γ) - n + x] M_n(x) = 0.

    При x = 0 коэффициент при M_n(-1) равен нулю.
    """
    mu, gamma = family.mu, family.gamma
    table = meixner_table(family, n_max, x_max + 1)
    x = np.arange(x_max + 1, dtype=np.float64)
    n = np.arange(n_max + 1, dtype=np.float64)[:, None]
    here = table[:, : x_max + 1]
    ahead = table[:, 1 : x_max + 2]
    behind = np.zeros_like(here)
    behind[:, 1:] = table[:, :x_max]
    lhs = (
        np.sqrt(mu * (gamma + x) * (x + 1.0)) * ahead
        + np.sqrt(mu * x * np.clip(x + gamma - 1.0, 0.0, None)) * behind
        - (mu * (x + n + gamma) - n + x) * here
    )
    return float(np.max(np.abs(lhs)))
