"""
@file: finite_weyl.py
@description: Конечномерная алгебра Вейля: матрицы сдвига и фазы, конечное
    преобразование Фурье, базисы координат и импульсов, предел N -> ∞
@dependencies: numpy, pydantic
@created: 2024-03-21
"""

import logging
import math
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field

from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)

MAX_DIMENSION = 4096

OperatorMatrix = NDArray[np.complex128]
StateVector = NDArray[np.complex128]


class FiniteSpace(BaseModel):
    """
    N-мерное пространство с корнем из единицы ω = exp(2πi/N).

    Attributes:
        N: Размерность пространства (1 <= N <= 4096)
    """

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=1, le=MAX_DIMENSION)

    @property
    def omega(self) -> complex:
        """Корень из единицы ω."""
        return self.root_power(1)

    def root_power(self, k: int) -> complex:
        """
        Возвращает ω^k, приводя показатель по модулю N.

        Args:
            k: Целый показатель

        Returns:
            complex: ω^k
        """
        return complex(np.exp(2j * np.pi * (k % self.N) / self.N))

    def root_powers(self, exponents: NDArray[np.int64]) -> NDArray[np.complex128]:
        """Векторная версия root_power."""
        reduced = np.mod(exponents, self.N)
        return np.exp(2j * np.pi * reduced / self.N)


def basis_ket(space: FiniteSpace, j: int) -> StateVector:
    """Координатный базисный вектор |j> (индекс по модулю N)."""
    ket = np.zeros(space.N, dtype=np.complex128)
    ket[j % space.N] = 1.0
    return ket


def momentum_ket(space: FiniteSpace, k: int) -> StateVector:
    """
    Импульсный базисный вектор |k> с компонентами ω^{jk}/√N.

    Нормировка 1/√N делает <l|k> = δ_lk.
    """
    j = np.arange(space.N)
    return space.root_powers(j * k) / math.sqrt(space.N)


def build_shift(space: FiniteSpace) -> OperatorMatrix:
    """
    Матрица сдвига A: A|j> = |j-1 mod N>.

    Args:
        space: Конечное пространство

    Returns:
        OperatorMatrix: Матрица перестановки N x N
    """
    return shift_power(space, 1)


def shift_power(space: FiniteSpace, a: int) -> OperatorMatrix:
    """U_a = A^a: |j> -> |j-a mod N>, строится как перестановка без умножений."""
    n = space.N
    matrix = np.zeros((n, n), dtype=np.complex128)
    columns = np.arange(n)
    matrix[(columns - a) % n, columns] = 1.0
    return matrix


def build_clock(space: FiniteSpace) -> OperatorMatrix:
    """Диагональная матрица B = diag(1, ω, ..., ω^{N-1})."""
    return clock_power(space, 1)


def clock_power(space: FiniteSpace, b: int) -> OperatorMatrix:
    """V_b = B^b = diag(ω^{bj})."""
    j = np.arange(space.N)
    return np.diag(space.root_powers(b * j))


def weyl_residual(space: FiniteSpace, s: int, t: int) -> float:
    """
    Невязка соотношения Вейля A^s B^t = ω^{st} B^t A^s.

    Args:
        space: Конечное пространство
        s: Степень сдвига
        t: Степень фазы

    Returns:
        float: max |A^s B^t - ω^{st} B^t A^s|
    """
    a_s = shift_power(space, s)
    phases = space.root_powers(t * np.arange(space.N))
    # умножение на диагональ B^t справа и слева
    lhs = a_s * phases[None, :]
    rhs = space.root_power(s * t) * (phases[:, None] * a_s)
    residual = float(np.max(np.abs(lhs - rhs)))
    logger.debug(f"[WEYL] N={space.N} s={s} t={t} residual={residual:.3e}")
    return residual


def group_closure_residual(space: FiniteSpace) -> float:
    """Невязка A^N = B^N = I (точная для перестановок и унимодулярной диагонали)."""
    identity = np.eye(space.N)
    a_n = np.linalg.matrix_power(build_shift(space), space.N)
    b_n = np.linalg.matrix_power(build_clock(space), space.N)
    return float(max(np.max(np.abs(a_n - identity)), np.max(np.abs(b_n - identity))))


def finite_fourier(space: FiniteSpace) -> OperatorMatrix:
    """
    Унитарная матрица конечного преобразования Фурье F[j][k] = ω^{jk}/√N.

    Прямое преобразование: F̂ = F @ v, обратное: v = F^† @ F̂.
    """
    j = np.arange(space.N)
    return space.root_powers(np.outer(j, j)) / math.sqrt(space.N)


def fourier_forward(space: FiniteSpace, vector: StateVector) -> StateVector:
    """F̂(k) = (1/√N) Σ_j F_j ω^{jk}."""
    return finite_fourier(space) @ np.asarray(vector, dtype=np.complex128)


def fourier_inverse(space: FiniteSpace, vector: StateVector) -> StateVector:
    """F(j) = (1/√N) Σ_k F̂(k) ω^{-jk}."""
    return finite_fourier(space).conj().T @ np.asarray(vector, dtype=np.complex128)


def unitarity_residual(space: FiniteSpace) -> float:
    """max |F^† F - I|."""
    fourier = finite_fourier(space)
    return float(np.max(np.abs(fourier.conj().T @ fourier - np.eye(space.N))))


def parseval_residual(space: FiniteSpace, vector: StateVector) -> float:
    """| ||F̂(v)|| - ||v|| |."""
    vector = np.asarray(vector, dtype=np.complex128)
    return float(abs(np.linalg.norm(fourier_forward(space, vector)) - np.linalg.norm(vector)))


def basis_intertwine_residual(space: FiniteSpace, a: int, b: int) -> float:
    """
    Проверяет действие U_a и V_b на импульсном базисе.

    U_a|k> = ω^{ak}|k>, V_b|k> = |k+b>.

    Args:
        space: Конечное пространство
        a: Степень сдвига
        b: Степень фазы

    Returns:
        float: Максимальное отклонение по всем k
    """
    u_a = shift_power(space, a)
    v_b = clock_power(space, b)
    worst = 0.0
    for k in range(space.N):
        ket = momentum_ket(space, k)
        phase_defect = u_a @ ket - space.root_power(a * k) * ket
        shift_defect = v_b @ ket - momentum_ket(space, k + b)
        worst = max(worst, float(np.max(np.abs(phase_defect))), float(np.max(np.abs(shift_defect))))
    return worst


def position_action_residual(space: FiniteSpace, a: int, b: int, vector: StateVector) -> float:
    """
    Действие операторов в координатном представлении.

    (U_a F)(j) = F(j+a) и, в прочтении со стороны бра, (V_b^† F)(j) = ω^{-bj} F(j).

    Args:
        space: Конечное пространство
        a: Степень сдвига
        b: Степень фазы
        vector: Вектор F в координатном базисе

    Returns:
        float: Максимальное отклонение обоих тождеств
    """
    vector = np.asarray(vector, dtype=np.complex128)
    j = np.arange(space.N)
    shifted = shift_power(space, a) @ vector
    shift_defect = np.max(np.abs(shifted - vector[(j + a) % space.N]))
    phased = clock_power(space, b).conj().T @ vector
    phase_defect = np.max(np.abs(phased - space.root_powers(-b * j) * vector))
    return float(max(shift_defect, phase_defect))


def momentum_action_residual(space: FiniteSpace, a: int, b: int, vector: StateVector) -> float:
    """
    Действие операторов в импульсном представлении G(k) = <k|G>.

    (U_a^† G)(k) = ω^{-ak} G(k) и (V_b G)(k) = G(k-b) для G = F^† v.
    """
    vector = np.asarray(vector, dtype=np.complex128)
    k = np.arange(space.N)
    fourier = finite_fourier(space)
    g = fourier.conj().T @ vector
    g_shift = fourier.conj().T @ (shift_power(space, a).conj().T @ vector)
    phase_defect = np.max(np.abs(g_shift - space.root_powers(-a * k) * g))
    g_clock = fourier.conj().T @ (clock_power(space, b) @ vector)
    shift_defect = np.max(np.abs(g_clock - g[(k - b) % space.N]))
    return float(max(phase_defect, shift_defect))


class ProbeScaling(str, Enum):
    """Выбор шагов ξ, η в пределе N -> ∞ (всегда ξη = 2π/N)."""

    MOMENTUM = "momentum"
    SYMMETRIC = "symmetric"


class ContinuumProbe(BaseModel):
    """
    Зонд непрерывного предела: фиксированные σ = ξs и τ = ηt.

    Attributes:
        sigma: Целевое значение σ
        tau: Целевое значение τ
        scaling: Правило выбора ξ и η
    """

    model_config = ConfigDict(frozen=True)

    sigma: float = Field(allow_inf_nan=False)
    tau: float = Field(allow_inf_nan=False)
    scaling: ProbeScaling = ProbeScaling.MOMENTUM


class ProbePoint(BaseModel):
    """Точка последовательности непрерывного предела."""

    model_config = ConfigDict(frozen=True)

    N: int
    xi: float = Field(gt=0)
    eta: float = Field(gt=0)
    s: int
    t: int
    deviation: float = Field(ge=0)


def _steps(n: int, scaling: ProbeScaling) -> Tuple[float, float]:
    if scaling is ProbeScaling.SYMMETRIC:
        step = math.sqrt(2.0 * math.pi / n)
        return step, step
    return 2.0 * math.pi / n, 1.0


def probe_point(probe: ContinuumProbe, n: int) -> ProbePoint:
    """
    Отклонение |ω^{st} - e^{iστ}| для одного N.

    Args:
        probe: Параметры зонда
        n: Размерность пространства

    Returns:
        ProbePoint: Шаги, целые s, t и отклонение
    """
    space = FiniteSpace(N=n)
    if probe.scaling is ProbeScaling.MOMENTUM and not float(probe.tau).is_integer():
        # при η = 1 величина τ = t обязана быть целой
        raise InvalidArgumentError(f"momentum scaling needs integer tau, got {probe.tau}")
    xi, eta = _steps(n, probe.scaling)
    s = int(round(probe.sigma / xi))
    t = int(round(probe.tau / eta))
    deviation = abs(space.root_power(s * t) - complex(np.exp(1j * probe.sigma * probe.tau)))
    return ProbePoint(N=n, xi=xi, eta=eta, s=s, t=t, deviation=deviation)


def continuum_limit_probe(probe: ContinuumProbe, n_sequence: Sequence[int]) -> List[ProbePoint]:
    """
    Последовательность отклонений по списку размерностей.

    При масштабе MOMENTUM и удвоении N отклонение не возрастает:
    ошибка округления s либо сохраняется, либо уменьшается.

    Args:
        probe: Параметры зонда
        n_sequence: Размерности N

    Returns:
        List[ProbePoint]: Таблица (N, отклонение)

    Raises:
        InvalidArgumentError: Если последовательность пуста
    """
    if not n_sequence:
        raise InvalidArgumentError("N_sequence must not be empty")
    points = [probe_point(probe, n) for n in n_sequence]
    logger.info(
        f"[WEYL] continuum probe sigma={probe.sigma} tau={probe.tau} "
        f"scaling={probe.scaling.value}: "
        + ", ".join(f"N={p.N}:{p.deviation:.3e}" for p in points)
    )
    return points
