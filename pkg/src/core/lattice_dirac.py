"""
@file: lattice_dirac.py
@description: Разностное исчисление на четырёхмерной решётке, решёточное уравнение
    Дирака, плоские волны с tan-дисперсией и факторизация уравнения Клейна-Гордона
@dependencies: numpy, pydantic
@created: 2024-03-25
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import DomainError, InvalidArgumentError, NoNullVectorError, NoRealRootError, QuantizationError

logger = logging.getLogger(__name__)

DIMENSIONS = 4
SPINOR_SIZE = 4
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
QUANTIZATION_TOLERANCE = 1e-9
NULL_TOLERANCE = 1e-9

Sites = Tuple[int, int, int, int]


class Contraction(str, Enum):
    """Свёртка k·j в показателе плоской волны."""

    EUCLIDEAN = "euclidean"
    MINKOWSKI = "minkowski"

    @property
    def signs(self) -> NDArray[np.float64]:
        if self is Contraction.MINKOWSKI:
            return np.array([1.0, -1.0, -1.0, -1.0])
        return np.ones(DIMENSIONS)


class DiffKind(str, Enum):
    """Одномерные разностные операторы."""

    FORWARD = "delta"  # Δf(j) = f(j+1) - f(j)
    BACKWARD = "nabla"  # ∇f(j) = f(j) - f(j-1)
    FORWARD_MEAN = "delta_tilde"  # (f(j+1) + f(j))/2
    BACKWARD_MEAN = "nabla_tilde"  # (f(j) + f(j-1))/2

    @property
    def forward(self) -> bool:
        return self in (DiffKind.FORWARD, DiffKind.FORWARD_MEAN)

    @property
    def mean(self) -> bool:
        return self in (DiffKind.FORWARD_MEAN, DiffKind.BACKWARD_MEAN)


class LatticeParams(BaseModel):
    """
    Параметры решётки (ħ = 1, масса входит только как m₀c).

    Attributes:
        epsilon: Шаг решётки ε > 0
        extents: Размеры L_μ по четырём направлениям
        m0c: Параметр массы m₀c >= 0
        contraction: Свёртка в показателе плоской волны
    """

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(gt=0.0, allow_inf_nan=False)
    extents: Sites = (4, 4, 4, 4)
    m0c: float = Field(default=0.0, ge=0.0, allow_inf_nan=False)
    contraction: Contraction = Contraction.EUCLIDEAN

    @field_validator("extents")
    @classmethod
    def _positive_extents(cls, value: Sites) -> Sites:
        if any(extent < 1 for extent in value):
            raise ValueError(f"extents must be positive, got {value}")
        return value


def check_poles(k: Sequence[float], epsilon: float) -> None:
    """
    Проверяет |k_μ ε| < 1/2 (вне полюсов tan).

    Raises:
        DomainError: Если какая-либо компонента на полюсе или за ним
    """
    for mu, value in enumerate(k):
        if not abs(value * epsilon) < 0.5:
            raise DomainError(f"|k_{mu} epsilon| = {abs(value * epsilon)} must be below 1/2")


class FourMomentum(BaseModel):
    """
    Четырёхимпульс k_μ и модифицированный импульс p̃_μ = (2/ε) tan(π k_μ ε).

    Условие |k_μ ε| < 1/2 проверяется при создании (ValidationError).
    """

    model_config = ConfigDict(frozen=True)

    k: Tuple[float, float, float, float]
    epsilon: float = Field(gt=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _inside_zone(self) -> "FourMomentum":
        check_poles(self.k, self.epsilon)
        return self

    @property
    def ptilde(self) -> NDArray[np.float64]:
        return (2.0 / self.epsilon) * np.tan(np.pi * np.asarray(self.k) * self.epsilon)


@dataclass(frozen=True)
class GammaSet:
    """Четыре матрицы γ^0..γ^3 (массив 4x4x4)."""

    matrices: NDArray[np.complex128]

    def __getitem__(self, mu: int) -> NDArray[np.complex128]:
        return self.matrices[mu]


@dataclass(frozen=True)
class SpinorField:
    """
    Четырёхкомпонентный спинор в каждом узле.

    Периодическое поле хранится на всей решётке L_0 x .. x L_3, сдвиги берутся
    по модулю. Непериодическое поле задано на окне с началом origin, и каждый
    разностный оператор сужает окно на один узел.

    Attributes:
        params: Параметры решётки
        values: Массив формы (n_0, n_1, n_2, n_3, 4)
        periodic: Периодическое хранение
        origin: Абсолютный индекс первого узла окна
    """

    params: LatticeParams
    values: NDArray[np.complex128]
    periodic: bool = True
    origin: Sites = (0, 0, 0, 0)

    def __post_init__(self) -> None:
        if self.values.ndim != DIMENSIONS + 1 or self.values.shape[-1] != SPINOR_SIZE:
            raise InvalidArgumentError(f"field values must have shape (n0,n1,n2,n3,4), got {self.values.shape}")
        if self.periodic and tuple(self.values.shape[:DIMENSIONS]) != tuple(self.params.extents):
            raise InvalidArgumentError(
                f"periodic field shape {self.values.shape[:DIMENSIONS]} differs from extents {self.params.extents}"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvalidArgumentError("field values must be finite")

    @property
    def shape(self) -> Sites:
        return tuple(self.values.shape[:DIMENSIONS])  # type: ignore[return-value]

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def with_values(self, values: NDArray[np.complex128], origin: Optional[Sites] = None) -> "SpinorField":
        return SpinorField(self.params, values, self.periodic, self.origin if origin is None else origin)


def _combine(a: SpinorField, b: SpinorField, alpha: complex = 1.0, beta: complex = 1.0) -> SpinorField:
    """alpha·a + beta·b на общем окне."""
    if a.shape != b.shape or a.origin != b.origin or a.periodic != b.periodic:
        raise InvalidArgumentError("fields live on different windows")
    return a.with_values(alpha * a.values + beta * b.values)


def _check_direction(direction: int) -> None:
    if direction not in range(DIMENSIONS):
        raise InvalidArgumentError(f"direction must be in 0..3, got {direction}")


def diff_ops(field: SpinorField, direction: int, kind: DiffKind) -> SpinorField:
    """
    Одномерный разностный оператор вдоль направления μ.

    Args:
        field: Поле
        direction: Направление μ (0..3)
        kind: Δ, ∇, Δ̃ или ∇̃

    Returns:
        SpinorField: Новое поле; непериодическое окно сужается на один узел
    """
    _check_direction(direction)
    kind = DiffKind(kind)
    extent = field.shape[direction]
    if extent < 2:
        raise InvalidArgumentError(f"extent along direction {direction} must be at least 2, got {extent}")
    values = field.values
    origin = field.origin
    if field.periodic:
        here = values
        neighbour = np.roll(values, -1 if kind.forward else 1, axis=direction)
    else:
        upper = [slice(None)] * values.ndim
        lower = [slice(None)] * values.ndim
        upper[direction] = slice(1, None)
        lower[direction] = slice(None, -1)
        if kind.forward:
            here, neighbour = values[tuple(lower)], values[tuple(upper)]
        else:
            here, neighbour = values[tuple(upper)], values[tuple(lower)]
            shifted = list(origin)
            shifted[direction] += 1
            origin = tuple(shifted)  # type: ignore[assignment]
    if kind.mean:
        result = 0.5 * (here + neighbour)
    elif kind.forward:
        result = neighbour - here
    else:
        result = here - neighbour
    return field.with_values(result, origin)


def _sign_kinds(sign: int) -> Tuple[DiffKind, DiffKind]:
    if sign == 1:
        return DiffKind.FORWARD, DiffKind.FORWARD_MEAN
    if sign == -1:
        return DiffKind.BACKWARD, DiffKind.BACKWARD_MEAN
    raise InvalidArgumentError(f"sign must be +1 or -1, got {sign}")


def delta_pm(field: SpinorField, direction: int, sign: int, order: Optional[Sequence[int]] = None) -> SpinorField:
    """
    δ±_μ = (1/ε) Δ_μ Π_{ν≠μ} Δ̃_ν (для +) и (1/ε) ∇_μ Π_{ν≠μ} ∇̃_ν (для -).

    Args:
        field: Поле
        direction: Направление μ
        sign: +1 или -1
        order: Порядок применения поперечных усреднений (по умолчанию по возрастанию ν)
    """
    _check_direction(direction)
    difference, mean = _sign_kinds(sign)
    transverse = [nu for nu in range(DIMENSIONS) if nu != direction] if order is None else list(order)
    if sorted(transverse) != [nu for nu in range(DIMENSIONS) if nu != direction]:
        raise InvalidArgumentError(f"order must list the transverse directions of {direction}, got {order}")
    result = diff_ops(field, direction, difference)
    for nu in transverse:
        result = diff_ops(result, nu, mean)
    return result.with_values(result.values / field.params.epsilon)


def eta_pm(field: SpinorField, sign: int) -> SpinorField:
    """η+ = Π_ν Δ̃_ν, η- = Π_ν ∇̃_ν."""
    _, mean = _sign_kinds(sign)
    result = field
    for nu in range(DIMENSIONS):
        result = diff_ops(result, nu, mean)
    return result


def commutation_residual(field: SpinorField) -> float:
    """
    max |A(Bψ) - B(Aψ)| по всем парам из {δ±_μ, η±}, а также по порядку
    поперечных усреднений внутри δ±_μ.
    """
    operators: List[Callable[[SpinorField], SpinorField]] = []
    for sign in (1, -1):
        for mu in range(DIMENSIONS):
            operators.append(lambda f, mu=mu, sign=sign: delta_pm(f, mu, sign))
        operators.append(lambda f, sign=sign: eta_pm(f, sign))
    worst = 0.0
    for first, second in combinations(operators, 2):
        difference = _combine(first(second(field)), second(first(field)), 1.0, -1.0)
        worst = max(worst, difference.max_abs())
    for sign in (1, -1):
        for mu in range(DIMENSIONS):
            transverse = [nu for nu in range(DIMENSIONS) if nu != mu]
            reversed_order = delta_pm(field, mu, sign, order=transverse[::-1])
            worst = max(worst, _combine(delta_pm(field, mu, sign), reversed_order, 1.0, -1.0).max_abs())
    return worst


def summation_by_parts_residual(f: SpinorField, g: SpinorField, direction: int) -> float:
    """|<Δf, g> + <f, ∇g>| для периодических полей."""
    if not (f.periodic and g.periodic):
        raise InvalidArgumentError("summation by parts needs periodic fields")
    lhs = np.vdot(diff_ops(f, direction, DiffKind.FORWARD).values, g.values)
    rhs = np.vdot(f.values, diff_ops(g, direction, DiffKind.BACKWARD).values)
    return float(abs(lhs + rhs))


def _check_quantized(params: LatticeParams, k: FourMomentum) -> None:
    for mu, (value, extent) in enumerate(zip(k.k, params.extents)):
        winding = value * extent * params.epsilon
        if abs(winding - round(winding)) > QUANTIZATION_TOLERANCE:
            raise QuantizationError(f"k_{mu}={value} is not a multiple of 1/(L_{mu} epsilon) = {1.0 / (extent * params.epsilon)}")


def plane_wave(
    params: LatticeParams,
    k: FourMomentum,
    spinor: Sequence[complex],
    periodic: bool = True,
    origin: Sites = (0, 0, 0, 0),
    extents: Optional[Sites] = None,
) -> SpinorField:
    """
    ψ(j) = u · exp(2πi (k·j) ε) со свёрткой params.contraction.

    Args:
        params: Параметры решётки
        k: Импульс
        spinor: Четырёхкомпонентный спинор u
        periodic: Хранить поле периодически (требует квантования k)
        origin: Начало окна для непериодического поля
        extents: Размер окна для непериодического поля (по умолчанию params.extents)

    Raises:
        QuantizationError: Если k не квантован при периодическом хранении
    """
    spinor = np.asarray(spinor, dtype=np.complex128)
    if spinor.shape != (SPINOR_SIZE,):
        raise InvalidArgumentError(f"spinor must have 4 components, got shape {spinor.shape}")
    if periodic:
        _check_quantized(params, k)
        origin, shape = (0, 0, 0, 0), params.extents
    else:
        shape = params.extents if extents is None else extents
    axes = [np.arange(start, start + extent) for start, extent in zip(origin, shape)]
    grids = np.meshgrid(*axes, indexing="ij")
    weights = params.contraction.signs * np.asarray(k.k) * params.epsilon
    phase = sum(w * g for w, g in zip(weights, grids))
    values = np.exp(2j * np.pi * phase)[..., None] * spinor
    return SpinorField(params, values, periodic, tuple(origin))  # type: ignore[arg-type]


def signed_ptilde(params: LatticeParams, k: FourMomentum) -> NDArray[np.float64]:
    """s_μ p̃_μ: плоская волна собственная для (1/ε)Δ_μ / Δ̃_μ с этим значением, делённым на i."""
    return params.contraction.signs * k.ptilde


def eta_plus_eigenvalue(params: LatticeParams, k: FourMomentum) -> complex:
    """
    Скаляр η+ на плоской волне: Π_μ e^{iθ_μ/2} cos(θ_μ/2), θ_μ = 2π s_μ k_μ ε.
    """
    half = np.pi * params.contraction.signs * np.asarray(k.k) * params.epsilon
    return complex(np.prod(np.exp(1j * half) * np.cos(half)))


def kernel_residual(params: LatticeParams, k: FourMomentum) -> float:
    """
    Тождество ядра (1/ε)Δ_μ ψ = i (2/ε) tan(π k_μ ε) Δ̃_μ ψ для всех μ,
    на функционально вычисленной плоской волне.
    """
    wave = plane_wave(params, k, np.array([1.0, 0.0, 0.0, 0.0]), periodic=False)
    momentum = signed_ptilde(params, k)
    worst = 0.0
    for mu in range(DIMENSIONS):
        lhs = diff_ops(wave, mu, DiffKind.FORWARD).values / params.epsilon
        rhs = 1j * momentum[mu] * diff_ops(wave, mu, DiffKind.FORWARD_MEAN).values
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    logger.debug(f"[DIRAC] kernel k={k.k} residual={worst:.3e}")
    return worst


def wrap_residual(params: LatticeParams, k: FourMomentum) -> float:
    """max_μ |ψ(j + L_μ e_μ) - ψ(j)| на окне L_μ + 1; ноль для квантованного k."""
    _check_quantized(params, k)
    shape = tuple(extent + 1 for extent in params.extents)
    wave = plane_wave(params, k, np.array([1.0, 0.0, 0.0, 0.0]), periodic=False, extents=shape)  # type: ignore[arg-type]
    worst = 0.0
    for mu, extent in enumerate(params.extents):
        first = np.take(wave.values, [0], axis=mu)
        last = np.take(wave.values, [extent], axis=mu)
        worst = max(worst, float(np.max(np.abs(first - last))))
    return worst


def dirac_gammas() -> GammaSet:
    """Матрицы Дирака в стандартном представлении."""
    identity = np.eye(2)
    sigma = [
        np.array([[0, 1], [1, 0]], dtype=np.complex128),
        np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
        np.array([[1, 0], [0, -1]], dtype=np.complex128),
    ]
    zero = np.zeros((2, 2))
    gamma0 = np.block([[identity, zero], [zero, -identity]]).astype(np.complex128)
    spatial = [np.block([[zero, s], [-s, zero]]) for s in sigma]
    return GammaSet(np.stack([gamma0, *spatial]))


def clifford_residual(gammas: GammaSet) -> float:
    """max |{γ^μ, γ^ν} - 2η^{μν} I|."""
    identity = np.eye(SPINOR_SIZE)
    worst = 0.0
    for mu in range(DIMENSIONS):
        for nu in range(DIMENSIONS):
            anti = gammas[mu] @ gammas[nu] + gammas[nu] @ gammas[mu]
            worst = max(worst, float(np.max(np.abs(anti - 2.0 * METRIC[mu, nu] * identity))))
    return worst


def hermiticity_residual(gammas: GammaSet) -> float:
    """γ^0 эрмитова, γ^i антиэрмитовы."""
    worst = float(np.max(np.abs(gammas[0] - gammas[0].conj().T)))
    for i in range(1, DIMENSIONS):
        worst = max(worst, float(np.max(np.abs(gammas[i] + gammas[i].conj().T))))
    return worst


def _gamma_sum(field: SpinorField, gammas: GammaSet, sign: int) -> SpinorField:
    total: Optional[SpinorField] = None
    for mu in range(DIMENSIONS):
        derivative = delta_pm(field, mu, sign)
        term = derivative.with_values(derivative.values @ gammas[mu].T)
        total = term if total is None else _combine(total, term)
    assert total is not None
    return total


def dirac_apply(field: SpinorField, gammas: GammaSet) -> SpinorField:
    """(iγ^μ δ+_μ - m₀c η+) ψ."""
    return _combine(_gamma_sum(field, gammas, 1), eta_pm(field, 1), 1j, -field.params.m0c)


def dirac_conjugate_apply(field: SpinorField, gammas: GammaSet) -> SpinorField:
    """(iγ^μ δ-_μ + m₀c η-) ψ."""
    return _combine(_gamma_sum(field, gammas, -1), eta_pm(field, -1), 1j, field.params.m0c)


def dispersion_residual(params: LatticeParams, k: FourMomentum) -> float:
    """(4/ε²)[tan²(πk₀ε) - Σ_i tan²(πk_iε)] - m₀²c²."""
    p = k.ptilde
    return float(p[0] ** 2 - np.sum(p[1:] ** 2) - params.m0c**2)


def dispersion_solve(params: LatticeParams, spatial_k: Sequence[float]) -> float:
    """
    Положительный корень k₀ = (1/πε) arctan √(Σ tan²(πk_iε) + ε²m₀²c²/4).

    Raises:
        DomainError: Если пространственный импульс попадает на полюс
        NoRealRootError: Если корень не попадает в |k₀ε| < 1/2
    """
    if len(spatial_k) != DIMENSIONS - 1:
        raise InvalidArgumentError(f"spatial momentum needs 3 components, got {len(spatial_k)}")
    eps = params.epsilon
    spatial_k = [float(v) for v in spatial_k]
    check_poles(spatial_k, eps)
    spatial = np.tan(np.pi * np.asarray(spatial_k) * eps)
    target = math.sqrt(float(np.sum(spatial**2)) + (eps * params.m0c) ** 2 / 4.0)
    k0 = math.atan(target) / (math.pi * eps)
    if not math.isfinite(k0) or not abs(k0 * eps) < 0.5:
        raise NoRealRootError(f"no admissible k0 for spatial k={tuple(spatial_k)}")
    return k0


def dirac_symbol(gammas: GammaSet, k: FourMomentum, m0c: float, contraction: Contraction = Contraction.EUCLIDEAN) -> NDArray[np.complex128]:
    """
    Матрица Σ_μ γ^μ s_μ p̃_μ + m₀c I: на плоской волне оператор Дирака
    действует как минус эта матрица, умноженная на η+ψ.
    """
    momentum = contraction.signs * k.ptilde
    return np.einsum("m,mab->ab", momentum, gammas.matrices) + m0c * np.eye(SPINOR_SIZE)


def null_space_dimension(gammas: GammaSet, k: FourMomentum, m0c: float, contraction: Contraction = Contraction.EUCLIDEAN) -> int:
    symbol = dirac_symbol(gammas, k, m0c, contraction)
    singular = np.linalg.svd(symbol, compute_uv=False)
    scale = max(float(singular[0]), 1.0)
    return int(np.sum(singular <= NULL_TOLERANCE * scale))


def off_shell_bound(params: LatticeParams, gammas: GammaSet, k: FourMomentum) -> float:
    """
    Нижняя граница |Dψ(j)| / |ψ(j)| на плоской волне: |η+| σ_min(Σγ s p̃ + m₀c).

    Так как (Σγ s p̃ + m₀c)(Σγ s p̃ - m₀c) = D(k) I, где D(k) = dispersion_residual,
    граница равна |η+| |D(k)| / ||Σγ s p̃ - m₀c|| и обращается в ноль только
    на массовой поверхности.
    """
    symbol = dirac_symbol(gammas, k, params.m0c, params.contraction)
    smallest = float(np.linalg.svd(symbol, compute_uv=False)[-1])
    return abs(eta_plus_eigenvalue(params, k)) * smallest


def dirac_spinor(
    gammas: GammaSet,
    k: FourMomentum,
    m0c: float,
    contraction: Contraction = Contraction.EUCLIDEAN,
) -> NDArray[np.complex128]:
    """
    Единичный нуль-вектор матрицы dirac_symbol.

    В системе покоя (k_i = 0, k₀ > 0) это собственный вектор γ^0 со значением -1.

    Raises:
        NoNullVectorError: Если матрица невырождена (k вне массовой поверхности)
    """
    symbol = dirac_symbol(gammas, k, m0c, contraction)
    _, singular, vh = np.linalg.svd(symbol)
    scale = max(float(singular[0]), 1.0)
    if singular[-1] > NULL_TOLERANCE * scale:
        raise NoNullVectorError(f"k={k.k} is off shell: smallest singular value {singular[-1]:.3e}")
    spinor = vh[-1].conj()
    return spinor / np.linalg.norm(spinor)


def on_shell_wave(
    params: LatticeParams,
    gammas: GammaSet,
    spatial_k: Sequence[float],
) -> SpinorField:
    """Плоская волна с k₀ из dispersion_solve и спинором из dirac_spinor (непериодическое окно)."""
    k0 = dispersion_solve(params, spatial_k)
    momentum = FourMomentum(k=(k0, *[float(v) for v in spatial_k]), epsilon=params.epsilon)  # type: ignore[arg-type]
    spinor = dirac_spinor(gammas, momentum, params.m0c, params.contraction)
    return plane_wave(params, momentum, spinor, periodic=False)


def plane_wave_dirac_residual(params: LatticeParams, gammas: GammaSet, spatial_k: Sequence[float]) -> float:
    """max |(iγδ+ - m₀cη+)ψ| на волне массовой поверхности."""
    residual = dirac_apply(on_shell_wave(params, gammas, spatial_k), gammas).max_abs()
    logger.debug(f"[DIRAC] plane wave k={tuple(spatial_k)} residual={residual:.3e}")
    return residual


def kg_apply(field: SpinorField) -> SpinorField:
    """
    Σ_μ η^{μμ} δ+_μ δ-_μ ψ + m₀²c² η+η-ψ.

    Обращается в ноль на волне массовой поверхности; произведение
    (iγδ- + m₀cη-)(iγδ+ - m₀cη+) равно минус этому оператору.
    """
    total: Optional[SpinorField] = None
    for mu in range(DIMENSIONS):
        second = delta_pm(delta_pm(field, mu, -1), mu, 1)
        term = second.with_values(METRIC[mu, mu] * second.values)
        total = term if total is None else _combine(total, term)
    assert total is not None
    return _combine(total, eta_pm(eta_pm(field, -1), 1), 1.0, field.params.m0c**2)


def kg_factorization_residual(field: SpinorField, gammas: GammaSet) -> float:
    """max |(iγδ- + m₀cη-)(iγδ+ - m₀cη+)ψ + kg_apply(ψ)|."""
    product = dirac_conjugate_apply(dirac_apply(field, gammas), gammas)
    residual = _combine(product, kg_apply(field)).max_abs()
    logger.debug(f"[DIRAC] kg factorization shape={field.shape} residual={residual:.3e}")
    return residual


def random_field(params: LatticeParams, rng: np.random.Generator) -> SpinorField:
    """Периодическое поле со стандартными нормальными компонентами."""
    shape = (*params.extents, SPINOR_SIZE)
    values = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return SpinorField(params, values)


def random_quantized_momentum(
    epsilon: float,
    extent: int,
    rng: np.random.Generator,
    bound: float = 0.2,
) -> Tuple[float, float, float]:
    """Пространственный импульс k_i = n_i/(L ε) с |k_i ε| <= bound (квантован на решётке L³)."""
    limit = int(math.floor(bound * extent))
    windings = rng.integers(-limit, limit + 1, size=DIMENSIONS - 1)
    return tuple(float(n) / (extent * epsilon) for n in windings)  # type: ignore[return-value]
