"""
@file: test_suite_runner.py
@description: Тесты запуска наборов проверок и модели записей
@dependencies: pytest, pydantic, src.core.suite_runner, src.core.checks
@created: 2024-03-26
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.checks import (
    expand_checks,
    monotone_defect,
    polynomial_table,
    run_dirac,
    run_hydrogen,
    run_weyl,
)
from src.core.errors import InvalidArgumentError, UnknownSuiteError
from src.core.models import (
    CheckRecord,
    DiracGrid,
    HydrogenGrid,
    OscillatorGrid,
    PolyGrid,
    RunConfig,
    SuiteGrids,
    WeylGrid,
)
from src.core.suite_runner import all_passed, run_suite, suite_rng
from src.core.thresholds import THRESHOLDS, checks_of, threshold_for


def small_grids() -> SuiteGrids:
    """Уменьшенные сетки для быстрых прогонов."""
    return SuiteGrids(
        weyl=WeylGrid(dims=[2, 5, 8], matrix_dims=[2, 8], samples=10, continuum_dims=[16, 32, 64]),
        poly=PolyGrid(j_max=3, betas=[math.pi / 2], meixner_points=[(2.0, 0.5)], n_max=4, x_max=20),
        oscillator=OscillatorGrid(js=[0.5, 1.0, 2.5], betas=[math.pi / 3], hermite_js=[25, 50], hermite_levels=[0]),
        hydrogen=HydrogenGrid(points=[(2.0, 0.5)], n_max=3, laguerre_mus=[0.9, 0.95], laguerre_levels=[(1, 0)]),
        dirac=DiracGrid(kernel_samples=2, momenta=3, kg_sizes=[2, 3], kg_fields=2),
    )


def small_config(**kwargs) -> RunConfig:
    return RunConfig(grids=small_grids(), **kwargs)


class TestCheckRecord:
    def test_measure_sets_pass(self):
        record = CheckRecord.measure("weyl", "commutation", {"N": 8}, 1e-15, 1e-12)
        assert record.passed
        assert record.params == {"N": "8"}
        assert not CheckRecord.measure("weyl", "commutation", {}, 1e-3, 1e-12).passed

    def test_nan_never_passes(self):
        assert not CheckRecord.measure("weyl", "parseval", {}, float("nan"), 1e-12).passed

    def test_pass_must_match_residual(self):
        with pytest.raises(ValidationError):
            CheckRecord(suite="weyl", check="parseval", residual=1.0, threshold=1e-12, passed=True)

    def test_threshold_positive(self):
        with pytest.raises(ValidationError):
            CheckRecord(suite="weyl", check="parseval", residual=0.0, threshold=0.0, passed=True)

    def test_alias(self):
        record = CheckRecord.model_validate(
            {"suite": "dirac", "check": "kernel", "params": {}, "residual": 0.0, "threshold": 1e-12, "pass": True}
        )
        assert record.passed

    def test_params_text_sorted(self):
        record = CheckRecord.measure("poly", "meixner-gram", {"mu": 0.5, "gamma": 2.0}, 0.0, 1e-10)
        assert record.params_text() == "gamma=2.0;mu=0.5"


class TestThresholds:
    def test_every_group_maps_to_known_checks(self):
        from src.core.checks import CHECK_GROUPS

        for suite, groups in CHECK_GROUPS.items():
            for names in groups.values():
                assert set(names) <= set(checks_of(suite))

    def test_values(self):
        assert threshold_for("dirac", "clifford") == 1e-14
        assert threshold_for("oscillator", "ladder") == 1e-10
        assert all(value > 0 for value in THRESHOLDS.values())

    def test_unknown(self):
        with pytest.raises(InvalidArgumentError):
            threshold_for("weyl", "ladder")


class TestExpandChecks:
    def test_groups_and_names(self):
        assert expand_checks("hydrogen", ["ladder"]) == {"colinearity", "prefactor"}
        assert expand_checks("weyl", ["parseval"]) == {"parseval"}
        assert expand_checks("dirac", None) is None

    def test_unknown(self):
        with pytest.raises(InvalidArgumentError):
            expand_checks("poly", ["ladder"])


class TestRunSuite:
    def test_weyl_dimension_eight(self):
        grids = SuiteGrids(weyl=WeylGrid(dims=[8], matrix_dims=[8]))
        records = run_suite(RunConfig(suites=["weyl"], grids=grids), progress=False)
        assert records
        assert all_passed(records)
        assert {record.check for record in records} == set(checks_of("weyl"))

    def test_all_small_suites_pass(self):
        records = run_suite(small_config(suites=["weyl", "poly", "oscillator", "hydrogen", "dirac"]), progress=False)
        failed = [(r.suite, r.check, r.params_text(), r.residual) for r in records if not r.passed]
        assert failed == []
        assert {record.suite for record in records} == {"weyl", "poly", "oscillator", "hydrogen", "dirac"}

    def test_default_poly_and_oscillator_grids_pass(self):
        records = run_suite(RunConfig(suites=["poly", "oscillator"]), progress=False)
        failed = [(r.suite, r.check, r.params_text(), r.residual) for r in records if not r.passed]
        assert failed == []
        assert {"kravchuk-gram", "wigner-consistency", "ladder", "spectrum"} <= {r.check for r in records}

    def test_sorted_by_suite_check_params(self):
        records = run_suite(small_config(suites=["poly", "weyl"]), progress=False)
        assert records == sorted(records, key=CheckRecord.sort_key)

    def test_deterministic(self):
        config = small_config(suites=["dirac", "weyl"], seed=5)
        first = run_suite(config, progress=False)
        second = run_suite(config.model_copy(update={"workers": 1}), progress=False)
        assert first == second

    def test_check_selection(self):
        records = run_suite(small_config(suites=["oscillator"], checks={"oscillator": ["spectrum"]}), progress=False)
        assert {record.check for record in records} == {"spectrum"}

    def test_empty_selection(self):
        with pytest.raises(InvalidArgumentError):
            run_suite(small_config(suites=[]), progress=False)

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError) as error:
            run_suite(small_config(suites=["weyl", "lattice"]), progress=False)
        assert "lattice" in str(error.value)

    def test_unknown_check(self):
        with pytest.raises(InvalidArgumentError):
            run_suite(small_config(suites=["weyl"], checks={"weyl": ["ladder"]}), progress=False)

    def test_duplicate_suites_collapsed(self):
        assert small_config(suites=["weyl", "weyl"]).suites == ["weyl"]

    def test_suite_rng_independent_of_order(self):
        assert suite_rng(1, "dirac").integers(0, 1000) == suite_rng(1, "dirac").integers(0, 1000)


class TestRunners:
    def test_fixed_dirac_momentum(self, rng):
        grid = DiracGrid(k=(0.25, 0.5, -0.25, 0.0), kg_sizes=[2], kg_fields=1)
        records = run_dirac(grid, rng, {"kernel", "planewave", "dispersion"})
        assert {record.check for record in records} == {"kernel", "planewave", "dispersion"}
        assert all(record.passed for record in records)

    def test_hydrogen_prefactor_uses_consistent_value(self, rng):
        records = run_hydrogen(HydrogenGrid(points=[(1.0, 0.3)], n_max=3), rng, {"prefactor", "colinearity"})
        assert all(record.passed for record in records)


class TestPolynomialTable:
    def test_kravchuk(self):
        rows = polynomial_table("kravchuk", {"N": 2, "p": 0.5})
        assert len(rows) == 9
        assert rows[0][:2] == (0, 0)
        assert rows[-1][:2] == (2, 2)

    def test_meixner_defaults(self):
        rows = polynomial_table("meixner", {"gamma": 2.0, "mu": 0.5})
        assert len(rows) == 6 * 31

    def test_missing_parameter(self):
        with pytest.raises(InvalidArgumentError):
            polynomial_table("kravchuk", {"N": 4})

    def test_unknown_family(self):
        with pytest.raises(InvalidArgumentError):
            polynomial_table("hahn", {})


class TestMonotoneDefect:
    def test_strictly_decreasing(self):
        assert monotone_defect([0.5, 0.25, 0.1, 1e-3]) == 0.0

    def test_counts_stalled_and_growing_steps(self):
        assert monotone_defect([0.5, 0.5, 0.6, 0.1]) == 2.0

    def test_zero_sequence_is_a_stall(self):
        assert monotone_defect([0.0, 0.0, 0.0]) == 2.0

    def test_exact_zero_sequence_allowed(self):
        assert monotone_defect([0.0, 0.0, 0.0], exact_zero=True) == 0.0
        assert monotone_defect([1e-3, 1e-3], exact_zero=True) == 1.0

    def test_single_value(self):
        assert monotone_defect([0.3]) == 0.0

    def test_exact_hits_fail_continuum_check(self):
        # при σ = π/4 и N = 2^k отклонение тождественно нулевое: сходимость не показана
        grid = WeylGrid(
            dims=[2], matrix_dims=[2], samples=1, sigma=math.pi / 4, tau=1.0, continuum_dims=[16, 32, 64, 128]
        )
        (record,) = run_weyl(grid, np.random.default_rng(0), {"continuum-monotone"})
        assert record.residual == 3.0
        assert not record.passed

    def test_zero_product_passes_continuum_check(self):
        grid = WeylGrid(dims=[2], matrix_dims=[2], samples=1, sigma=0.0, tau=0.0, continuum_dims=[16, 32, 64])
        (record,) = run_weyl(grid, np.random.default_rng(0), {"continuum-monotone"})
        assert record.residual == 0.0
        assert record.passed
