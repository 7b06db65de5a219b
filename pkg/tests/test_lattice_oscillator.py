"""
@file: test_lattice_oscillator.py
@description: Тесты дискретного осциллятора на d-функциях Вигнера
@dependencies: pytest, numpy, src.core.lattice_oscillator
@created: 2024-03-23
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import InvalidArgumentError, LadderBoundaryError
from src.core.lattice_oscillator import (
    OscillatorModel,
    anticommutator_eigenvalue,
    anticommutator_measurement,
    apply_annihilation,
    apply_creation,
    commutator_eigenvalue,
    commutator_measurement,
    hamiltonian_spectrum,
    hermite_convergence,
    hermite_function,
    ladder_residual,
    level_state,
    lower_state,
    position_eigenvalues_expected,
    position_spectrum,
    raise_state,
    scaled_wavefunction,
)

BETAS = [math.pi / 3, math.pi / 2, 2 * math.pi / 3]
JS = [k / 2 for k in range(1, 41)]


class TestModel:
    def test_derived_quantities(self):
        model = OscillatorModel(j=2, beta=math.pi / 2, alpha=4.0)
        assert model.N == 4
        assert model.p == pytest.approx(0.5)
        assert model.p + model.q == pytest.approx(1.0)
        assert model.lattice_spacing == pytest.approx(0.25)

    @pytest.mark.parametrize("kwargs", [{"j": 0}, {"j": 0.3}, {"j": 1, "beta": 0.0}, {"j": 1, "beta": math.pi}])
    def test_invalid(self, kwargs):
        with pytest.raises((ValidationError, InvalidArgumentError)):
            OscillatorModel(**kwargs)


class TestLadder:
    def test_spin_half_raise(self):
        model = OscillatorModel(j=0.5, beta=math.pi / 3)
        p, q = model.p, model.q
        raised = raise_state(model, 0)
        assert raised.level == 1
        assert raised.coeffs == pytest.approx(math.sqrt(p * q) * np.array([math.sqrt(p), math.sqrt(q)]))

    def test_top_level_gives_structural_zero(self):
        model = OscillatorModel(j=2)
        state = raise_state(model, model.N)
        assert state.structural_zero
        assert not np.any(state.coeffs)
        with pytest.raises(LadderBoundaryError):
            raise_state(model, model.N, strict=True)

    def test_ground_level_lowering(self):
        model = OscillatorModel(j=1.5)
        assert lower_state(model, 0).structural_zero
        with pytest.raises(LadderBoundaryError):
            lower_state(model, 0, strict=True)

    def test_level_out_of_range(self):
        with pytest.raises(InvalidArgumentError):
            level_state(OscillatorModel(j=1), 3)

    @pytest.mark.parametrize("beta", BETAS)
    def test_recurrences_exact(self, beta):
        for j in JS:
            assert ladder_residual(OscillatorModel(j=j, beta=beta)) <= 1e-10

    def test_raise_matches_next_level(self):
        model = OscillatorModel(j=3, beta=1.0)
        n = 2
        expected = math.sqrt(model.p * model.q * (n + 1) * (model.N - n)) * level_state(model, n + 1).coeffs
        assert np.allclose(raise_state(model, n).coeffs, expected, atol=1e-12)

    def test_lower_matches_previous_level(self):
        model = OscillatorModel(j=3, beta=1.0)
        n = 4
        expected = math.sqrt(model.p * model.q * n * (model.N - n + 1)) * level_state(model, n - 1).coeffs
        assert np.allclose(lower_state(model, n).coeffs, expected, atol=1e-12)

    def test_creation_then_annihilation_scales(self):
        model = OscillatorModel(j=4, beta=math.pi / 2)
        n = 3
        state = level_state(model, n)
        round_trip = apply_annihilation(model, apply_creation(model, state))
        factor = (n + 1) * (model.N - n) / model.N
        assert round_trip.level == n
        assert np.allclose(round_trip.coeffs, factor * state.coeffs, atol=1e-12)

    def test_annihilation_of_zero_state(self):
        model = OscillatorModel(j=1)
        zero = apply_creation(model, level_state(model, model.N))
        assert apply_annihilation(model, zero).structural_zero


class TestSpectra:
    def test_spin_half_values(self):
        model = OscillatorModel(j=0.5)
        assert commutator_eigenvalue(model, 0) == pytest.approx(1.0)
        assert commutator_eigenvalue(model, 1) == pytest.approx(-1.0)
        assert anticommutator_eigenvalue(model, 0) == pytest.approx(1.0)
        assert anticommutator_eigenvalue(model, 1) == pytest.approx(1.0)

    @pytest.mark.parametrize("beta", BETAS)
    def test_commutator_and_anticommutator(self, beta):
        for j in [0.5, 1, 3.5, 10, 20]:
            model = OscillatorModel(j=j, beta=beta)
            for n in range(model.N + 1):
                commutator = commutator_measurement(model, n)
                anticommutator = anticommutator_measurement(model, n)
                assert abs(commutator.value - (1 - n / j)) <= 1e-10
                assert commutator.residual <= 1e-10
                assert abs(anticommutator.value - ((2 * n + 1) - n * n / j)) <= 1e-10
                assert anticommutator.residual <= 1e-10

    def test_commutator_on_top_level(self):
        model = OscillatorModel(j=1, beta=math.pi / 2)
        assert commutator_eigenvalue(model, 2) == pytest.approx(-1.0, abs=1e-12)

    def test_hamiltonian(self):
        model = OscillatorModel(j=5, hbar_omega=2.0)
        spectrum = hamiltonian_spectrum(model)
        assert len(spectrum) == 11
        assert spectrum[0] == pytest.approx(1.0)
        expected = [(2 * n + 1) - n * n / 5 for n in range(11)]
        assert spectrum == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize("beta", BETAS)
    @pytest.mark.parametrize("j", [0.5, 1, 4.5, 20])
    def test_position_spectrum_equally_spaced(self, j, beta):
        model = OscillatorModel(j=j, beta=beta)
        spectrum = position_spectrum(model)
        assert spectrum == pytest.approx(position_eigenvalues_expected(model), abs=1e-10)
        gaps = np.diff(spectrum)
        assert np.allclose(gaps, math.sqrt(2 / j), atol=1e-10)


class TestHermiteLimit:
    def test_hermite_functions_orthonormal(self):
        s = np.linspace(-12, 12, 4001)
        step = s[1] - s[0]
        for m in range(4):
            for n in range(4):
                overlap = np.sum(hermite_function(m, s) * hermite_function(n, s)) * step
                assert overlap == pytest.approx(1.0 if m == n else 0.0, abs=1e-8)

    def test_scaled_function_parity(self):
        model = OscillatorModel(j=10)
        for n in range(3):
            _, scaled = scaled_wavefunction(model, n)
            assert np.allclose(scaled[::-1], (-1) ** n * scaled, atol=1e-12)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_convergence_strictly_decreasing(self, n):
        models = [OscillatorModel(j=j) for j in [25, 50, 100, 200]]
        errors = [point.sup_error for point in hermite_convergence(models, n)]
        assert all(later < earlier for earlier, later in zip(errors, errors[1:]))

    def test_level_too_large(self):
        with pytest.raises(InvalidArgumentError):
            hermite_convergence([OscillatorModel(j=1), OscillatorModel(j=5)], 3)

    def test_requires_right_angle(self):
        with pytest.raises(InvalidArgumentError):
            hermite_convergence([OscillatorModel(j=5, beta=1.0)], 0)
