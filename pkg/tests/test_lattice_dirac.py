"""
@file: test_lattice_dirac.py
@description: Тесты разностного исчисления и оператора Дирака на решётке
@dependencies: pytest, numpy, src.core.lattice_dirac
@created: 2024-03-25
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import (
    DomainError,
    InvalidArgumentError,
    NoNullVectorError,
    QuantizationError,
)
from src.core.lattice_dirac import (
    Contraction,
    DiffKind,
    FourMomentum,
    LatticeParams,
    SpinorField,
    check_poles,
    clifford_residual,
    commutation_residual,
    delta_pm,
    diff_ops,
    dirac_apply,
    dirac_gammas,
    dirac_symbol,
    dirac_spinor,
    dispersion_residual,
    dispersion_solve,
    eta_plus_eigenvalue,
    eta_pm,
    hermiticity_residual,
    kernel_residual,
    kg_apply,
    kg_factorization_residual,
    null_space_dimension,
    off_shell_bound,
    on_shell_wave,
    plane_wave,
    plane_wave_dirac_residual,
    random_field,
    random_quantized_momentum,
    summation_by_parts_residual,
    wrap_residual,
)

EPS = 0.5


@pytest.fixture
def gammas():
    return dirac_gammas()


@pytest.fixture
def params():
    return LatticeParams(epsilon=EPS, m0c=1.0)


def constant_field(params: LatticeParams) -> SpinorField:
    values = np.ones((*params.extents, 4), dtype=np.complex128)
    return SpinorField(params, values)


class TestGammas:
    def test_clifford(self, gammas):
        assert clifford_residual(gammas) <= 1e-14

    def test_hermiticity(self, gammas):
        assert hermiticity_residual(gammas) <= 1e-14

    def test_gamma0_squares_to_identity(self, gammas):
        assert np.allclose(gammas[0] @ gammas[0], np.eye(4))


class TestDifferenceCalculus:
    def test_constant_field_annihilated(self, params):
        field = constant_field(params)
        for mu in range(4):
            assert diff_ops(field, mu, DiffKind.FORWARD).max_abs() == 0.0
            assert delta_pm(field, mu, 1).max_abs() == 0.0
            assert delta_pm(field, mu, -1).max_abs() == 0.0
        assert np.allclose(eta_pm(field, 1).values, 1.0)

    def test_forward_matches_circulant(self, params, rng):
        field = random_field(params, rng)
        stencil = -np.eye(4) + np.roll(np.eye(4), 1, axis=1)
        expected = np.einsum("ab,b...->a...", stencil, field.values)
        assert np.allclose(diff_ops(field, 0, DiffKind.FORWARD).values, expected)

    def test_backward_mean_matches_circulant(self, params, rng):
        field = random_field(params, rng)
        stencil = 0.5 * (np.eye(4) + np.roll(np.eye(4), -1, axis=1))
        expected = np.einsum("ab,jb...->ja...", stencil, field.values)
        assert np.allclose(diff_ops(field, 1, DiffKind.BACKWARD_MEAN).values, expected)

    def test_window_shrinks_and_shifts(self, params, rng):
        values = rng.standard_normal((5, 3, 3, 3, 4)) + 0j
        field = SpinorField(params, values, periodic=False)
        forward = diff_ops(field, 0, DiffKind.FORWARD)
        backward = diff_ops(field, 0, DiffKind.BACKWARD)
        assert forward.shape == (4, 3, 3, 3)
        assert forward.origin == (0, 0, 0, 0)
        assert backward.origin == (1, 0, 0, 0)
        # ∇f(j) = Δf(j-1)
        assert np.array_equal(backward.values, forward.values)

    def test_extent_one_rejected(self, params):
        field = SpinorField(params, np.ones((1, 3, 3, 3, 4), dtype=np.complex128), periodic=False)
        with pytest.raises(InvalidArgumentError):
            diff_ops(field, 0, DiffKind.FORWARD)

    def test_invalid_direction_and_sign(self, params):
        field = constant_field(params)
        with pytest.raises(InvalidArgumentError):
            diff_ops(field, 4, DiffKind.FORWARD)
        with pytest.raises(InvalidArgumentError):
            delta_pm(field, 0, 0)
        with pytest.raises(InvalidArgumentError):
            delta_pm(field, 0, 1, order=[1, 2])

    def test_field_shape_checked(self, params):
        with pytest.raises(InvalidArgumentError):
            SpinorField(params, np.ones((4, 4, 4, 3), dtype=np.complex128))
        with pytest.raises(InvalidArgumentError):
            SpinorField(params, np.ones((3, 4, 4, 4, 4), dtype=np.complex128))
        values = np.ones((4, 4, 4, 4, 4), dtype=np.complex128)
        values[0, 0, 0, 0, 0] = np.nan
        with pytest.raises(InvalidArgumentError):
            SpinorField(params, values)

    @pytest.mark.parametrize("direction", range(4))
    def test_summation_by_parts(self, params, rng, direction):
        f, g = random_field(params, rng), random_field(params, rng)
        assert summation_by_parts_residual(f, g, direction) <= 1e-12

    def test_summation_by_parts_needs_periodic(self, params, rng):
        values = rng.standard_normal((3, 3, 3, 3, 4)) + 0j
        window = SpinorField(params, values, periodic=False)
        with pytest.raises(InvalidArgumentError):
            summation_by_parts_residual(window, window, 0)

    def test_operators_commute(self, params, rng):
        assert commutation_residual(random_field(params, rng)) <= 1e-13

    def test_operators_commute_on_window(self, params, rng):
        values = rng.standard_normal((5, 5, 5, 5, 4)) + 1j * rng.standard_normal((5, 5, 5, 5, 4))
        assert commutation_residual(SpinorField(params, values, periodic=False)) <= 1e-13


class TestPlaneWaves:
    @pytest.mark.parametrize("k", [(0.0, 0.0, 0.0, 0.0), (0.5, -0.5, 0.0, 0.5), (0.3, 0.1, -0.7, 0.05)])
    def test_kernel_identity(self, params, k):
        assert kernel_residual(params, FourMomentum(k=k, epsilon=EPS)) <= 1e-12

    def test_kernel_identity_minkowski(self):
        params = LatticeParams(epsilon=EPS, contraction=Contraction.MINKOWSKI)
        assert kernel_residual(params, FourMomentum(k=(0.2, 0.4, -0.3, 0.1), epsilon=EPS)) <= 1e-12

    def test_pole_rejected_at_construction(self):
        with pytest.raises(ValidationError, match="must be below 1/2"):
            FourMomentum(k=(1.0, 0.0, 0.0, 0.0), epsilon=EPS)
        with pytest.raises(ValidationError):
            FourMomentum(k=(0.0, -1.5, 0.0, 0.0), epsilon=EPS)

    def test_check_poles(self):
        check_poles((0.9, -0.9, 0.0, 0.0), EPS)
        with pytest.raises(DomainError):
            check_poles((0.0, 0.0, 1.0, 0.0), EPS)

    def test_quantization_required(self, params):
        momentum = FourMomentum(k=(0.3, 0.0, 0.0, 0.0), epsilon=EPS)
        with pytest.raises(QuantizationError):
            plane_wave(params, momentum, [1, 0, 0, 0])
        with pytest.raises(QuantizationError):
            wrap_residual(params, momentum)

    def test_quantized_wave_wraps(self, params):
        momentum = FourMomentum(k=(0.5, -0.5, 0.0, 0.5), epsilon=EPS)
        assert wrap_residual(params, momentum) <= 1e-12

    def test_spinor_shape_checked(self, params):
        with pytest.raises(InvalidArgumentError):
            plane_wave(params, FourMomentum(k=(0.0, 0.0, 0.0, 0.0), epsilon=EPS), [1, 0, 0])

    def test_eta_plus_eigenvalue(self, params):
        momentum = FourMomentum(k=(0.3, 0.1, -0.2, 0.05), epsilon=EPS)
        wave = plane_wave(params, momentum, [0, 1, 0, 0], periodic=False)
        image = eta_pm(wave, 1)
        expected = eta_plus_eigenvalue(params, momentum) * wave.values[:-1, :-1, :-1, :-1]
        assert np.allclose(image.values, expected, atol=1e-13)


class TestDispersion:
    def test_massless_light_cone(self):
        params = LatticeParams(epsilon=EPS, m0c=0.0)
        momentum = FourMomentum(k=(0.3, 0.3, 0.0, 0.0), epsilon=EPS)
        assert abs(dispersion_residual(params, momentum)) <= 1e-13
        assert dispersion_solve(params, (0.3, 0.0, 0.0)) == pytest.approx(0.3, abs=1e-13)

    def test_rest_frame(self, params):
        expected = math.atan(EPS * params.m0c / 2.0) / (math.pi * EPS)
        k0 = dispersion_solve(params, (0.0, 0.0, 0.0))
        assert k0 == pytest.approx(expected, abs=1e-14)
        assert abs(dispersion_residual(params, FourMomentum(k=(k0, 0.0, 0.0, 0.0), epsilon=EPS))) <= 1e-13

    def test_small_epsilon_recovers_relativistic_energy(self):
        params = LatticeParams(epsilon=1e-4, m0c=1.0)
        k0 = dispersion_solve(params, (0.0, 0.0, 0.0))
        assert 2 * math.pi * k0 == pytest.approx(1.0, rel=1e-6)

    def test_spatial_pole(self, params):
        with pytest.raises(DomainError):
            dispersion_solve(params, (1.0, 0.0, 0.0))

    def test_wrong_arity(self, params):
        with pytest.raises(InvalidArgumentError):
            dispersion_solve(params, (0.1, 0.0))


class TestDiracSpinors:
    def test_rest_frame_spinor(self, params, gammas):
        k0 = dispersion_solve(params, (0.0, 0.0, 0.0))
        momentum = FourMomentum(k=(k0, 0.0, 0.0, 0.0), epsilon=EPS)
        spinor = dirac_spinor(gammas, momentum, params.m0c)
        assert np.linalg.norm(spinor) == pytest.approx(1.0)
        assert np.allclose(gammas[0] @ spinor, -spinor, atol=1e-12)
        assert null_space_dimension(gammas, momentum, params.m0c) == 2

    def test_off_shell_residual_bounded_below(self, params, gammas, rng):
        momentum = FourMomentum(k=(0.3, 0.1, -0.2, 0.05), epsilon=EPS)
        defect = dispersion_residual(params, momentum)
        assert abs(defect) > 0.5
        spinor = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        image = dirac_apply(plane_wave(params, momentum, spinor, periodic=False), gammas)
        bound = off_shell_bound(params, gammas, momentum)
        site_norms = np.linalg.norm(image.values, axis=-1)
        assert np.min(site_norms) >= bound * np.linalg.norm(spinor) * (1 - 1e-10)
        partner = np.linalg.norm(dirac_symbol(gammas, momentum, -params.m0c), 2)
        expected = abs(eta_plus_eigenvalue(params, momentum)) * abs(defect) / partner
        assert bound == pytest.approx(expected, rel=1e-10)

    def test_bound_vanishes_on_shell(self, params, gammas):
        spatial = (0.25, -0.125, 0.0)
        momentum = FourMomentum(k=(dispersion_solve(params, spatial), *spatial), epsilon=EPS)
        assert off_shell_bound(params, gammas, momentum) <= 1e-12

    def test_off_shell(self, params, gammas):
        momentum = FourMomentum(k=(0.0, 0.0, 0.0, 0.0), epsilon=EPS)
        assert null_space_dimension(gammas, momentum, params.m0c) == 0
        with pytest.raises(NoNullVectorError):
            dirac_spinor(gammas, momentum, params.m0c)

    def test_on_shell_residuals(self, params, gammas, rng):
        for _ in range(20):
            spatial = random_quantized_momentum(EPS, 32, rng)
            assert plane_wave_dirac_residual(params, gammas, spatial) <= 1e-11
            assert kg_apply(on_shell_wave(params, gammas, spatial)).max_abs() <= 1e-11

    def test_minkowski_contraction(self, gammas):
        params = LatticeParams(epsilon=EPS, m0c=0.7, contraction="minkowski")
        assert plane_wave_dirac_residual(params, gammas, (0.25, -0.125, 0.0)) <= 1e-11

    def test_massless_constant_field(self, gammas):
        params = LatticeParams(epsilon=EPS, m0c=0.0)
        assert dirac_apply(constant_field(params), gammas).max_abs() == 0.0

    def test_quantized_momentum_bound(self, rng):
        for _ in range(50):
            spatial = random_quantized_momentum(EPS, 32, rng, bound=0.2)
            assert all(abs(value * EPS) <= 0.2 for value in spatial)
            assert all(float(value * 32 * EPS).is_integer() for value in spatial)


class TestKleinGordon:
    @pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
    def test_factorization(self, gammas, rng, size):
        params = LatticeParams(epsilon=EPS, m0c=1.0, extents=(size,) * 4)
        for _ in range(3):
            assert kg_factorization_residual(random_field(params, rng), gammas) <= 1e-12

    def test_factorization_on_window(self, params, gammas, rng):
        values = rng.standard_normal((4, 4, 4, 4, 4)) + 1j * rng.standard_normal((4, 4, 4, 4, 4))
        window = SpinorField(params, values, periodic=False, origin=(2, 0, 1, 0))
        assert kg_factorization_residual(window, gammas) <= 1e-12


class TestParams:
    @pytest.mark.parametrize("kwargs", [{"epsilon": 0.0}, {"epsilon": 0.5, "m0c": -1.0}, {"epsilon": 0.5, "extents": (4, 0, 4, 4)}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            LatticeParams(**kwargs)
