"""
@file: checks.py
@description: Проверки приёмки по наборам weyl, poly, oscillator, hydrogen, dirac
@dependencies: numpy, finite_weyl, discrete_poly, lattice_oscillator, lattice_hydrogen, lattice_dirac
@created: 2024-03-26
"""

import logging
import math
from typing import Callable, Collection, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import discrete_poly as poly
from . import finite_weyl as weyl
from . import lattice_dirac as dirac
from . import lattice_hydrogen as hydrogen
from . import lattice_oscillator as osc
from .errors import InvalidArgumentError
from .models import CheckRecord, DiracGrid, HydrogenGrid, OscillatorGrid, PolyGrid, WeylGrid
from .thresholds import checks_of, threshold_for

logger = logging.getLogger(__name__)

# Имена проверок командной строки -> проверки отчёта
CHECK_GROUPS: Dict[str, Dict[str, Tuple[str, ...]]] = {
    "weyl": {
        "commutation": ("commutation", "group-closure"),
        "fourier": ("fourier-unitarity", "parseval"),
        "intertwine": ("intertwine", "position-action", "momentum-action"),
        "continuum": ("continuum-monotone",),
    },
    "poly": {
        "gram": ("kravchuk-gram", "meixner-gram"),
        "diffeq": ("meixner-diffeq",),
        "wigner-consistency": ("wigner-consistency", "wigner-symmetry"),
    },
    "oscillator": {
        "ladder": ("ladder",),
        "commutator": ("commutator",),
        "anticommutator": ("anticommutator", "hamiltonian"),
        "spectrum": ("spectrum",),
        "converge": ("converge-monotone",),
    },
    "hydrogen": {
        "diffeq": ("diffeq", "eigenvalue"),
        "orthogonality": ("orthogonality",),
        "ladder": ("colinearity", "prefactor"),
        "laguerre": ("laguerre-monotone",),
    },
    "dirac": {
        "clifford": ("clifford",),
        "calculus": ("commutation", "summation-by-parts"),
        "kernel": ("kernel",),
        "dispersion": ("dispersion",),
        "planewave": ("planewave",),
        "kg-factorization": ("kg-factorization",),
    },
}


def expand_checks(suite: str, names: Optional[Collection[str]]) -> Optional[set]:
    """
    Переводит имена командной строки в имена проверок отчёта.

    Имена из таблицы порогов принимаются как есть. None означает все проверки.
    """
    if names is None:
        return None
    groups = CHECK_GROUPS[suite]
    known = set(checks_of(suite))
    selected = set()
    for name in names:
        if name in groups:
            selected.update(groups[name])
        elif name in known:
            selected.add(name)
        else:
            choices = sorted(set(groups) | known)
            raise InvalidArgumentError(f"unknown check '{name}' for suite '{suite}'. Known checks: {', '.join(choices)}")
    return selected


def monotone_defect(errors: Sequence[float], exact_zero: bool = False) -> float:
    """
    Число шагов, на которых ошибка не убыла строго (later >= earlier).

    Args:
        errors: Ошибки по возрастающему параметру сходимости
        exact_zero: Последовательность тождественно нулевая по построению
            (σ·τ = 0); тогда нули не считаются остановкой

    Returns:
        float: 0 для строго убывающей последовательности
    """
    if exact_zero and all(value == 0.0 for value in errors):
        return 0.0
    return float(sum(1 for earlier, later in zip(errors, errors[1:]) if later >= earlier))


class _Recorder:
    """Собирает записи одного набора с учётом выбора проверок."""

    def __init__(self, suite: str, selected: Optional[set]):
        self.suite = suite
        self.selected = selected
        self.records: List[CheckRecord] = []

    def wants(self, check: str) -> bool:
        return self.selected is None or check in self.selected

    def add(self, check: str, params: Dict[str, object], residual: float) -> None:
        record = CheckRecord.measure(self.suite, check, params, residual, threshold_for(self.suite, check))
        level = logging.DEBUG if record.passed else logging.WARNING
        logger.log(level, f"[RUNNER] {self.suite}/{check} {record.params_text()} residual={record.residual:.3e}")
        self.records.append(record)


def run_weyl(grid: WeylGrid, rng: np.random.Generator, selected: Optional[set] = None) -> List[CheckRecord]:
    """Алгебра Вейля: соотношение AB = ωBA, преобразование Фурье, действия U_a и V_b, предел."""
    out = _Recorder("weyl", selected)
    if out.wants("commutation"):
        for n in grid.dims:
            space = weyl.FiniteSpace(N=n)
            if grid.pair is not None:
                s, t = grid.pair
                out.add("commutation", {"N": n, "s": s, "t": t}, weyl.weyl_residual(space, s, t))
                continue
            pairs = rng.integers(-2 * n, 2 * n + 1, size=(grid.samples, 2))
            residual = max(weyl.weyl_residual(space, int(s), int(t)) for s, t in pairs)
            out.add("commutation", {"N": n, "samples": grid.samples}, residual)
    for n in grid.matrix_dims:
        space = weyl.FiniteSpace(N=n)
        if out.wants("group-closure"):
            out.add("group-closure", {"N": n}, weyl.group_closure_residual(space))
        if out.wants("fourier-unitarity"):
            out.add("fourier-unitarity", {"N": n}, weyl.unitarity_residual(space))
        if out.wants("parseval"):
            vector = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            out.add("parseval", {"N": n}, weyl.parseval_residual(space, vector))
        a, b = (int(v) for v in rng.integers(0, n, size=2))
        if out.wants("intertwine"):
            out.add("intertwine", {"N": n, "a": a, "b": b}, weyl.basis_intertwine_residual(space, a, b))
        vector = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        if out.wants("position-action"):
            out.add("position-action", {"N": n, "a": a, "b": b}, weyl.position_action_residual(space, a, b, vector))
        if out.wants("momentum-action"):
            out.add("momentum-action", {"N": n, "a": a, "b": b}, weyl.momentum_action_residual(space, a, b, vector))
    if out.wants("continuum-monotone"):
        probe = weyl.ContinuumProbe(sigma=grid.sigma, tau=grid.tau, scaling=grid.scaling)
        points = weyl.continuum_limit_probe(probe, grid.continuum_dims)
        params = {
            "sigma": f"{grid.sigma:.17g}",
            "tau": f"{grid.tau:.17g}",
            "scaling": grid.scaling,
            "N": ",".join(str(p.N) for p in points),
        }
        deviations = [p.deviation for p in points]
        out.add("continuum-monotone", params, monotone_defect(deviations, exact_zero=grid.sigma * grid.tau == 0.0))
    return out.records


def _js_up_to(j_max: float) -> List[float]:
    return [k / 2.0 for k in range(1, poly.to_doubled(j_max) + 1)]


def run_poly(grid: PolyGrid, rng: np.random.Generator, selected: Optional[set] = None) -> List[CheckRecord]:
    """Многочлены Кравчука и Мейкснера, d-функции Вигнера."""
    out = _Recorder("poly", selected)
    use_kravchuk = grid.family in (None, "kravchuk")
    use_meixner = grid.family in (None, "meixner")
    js = _js_up_to(grid.j_max)
    for beta in grid.betas:
        params = {"beta": f"{beta:.17g}", "j_max": grid.j_max}
        if use_kravchuk and out.wants("kravchuk-gram"):
            residual = max(
                poly.kravchuk_gram_residual(poly.KravchukFamily.from_angle(poly.to_doubled(j), beta)) for j in js
            )
            out.add("kravchuk-gram", params, residual)
        if use_kravchuk and out.wants("wigner-consistency"):
            out.add("wigner-consistency", params, max(poly.kravchuk_wigner_residual(j, beta) for j in js))
        if use_kravchuk and out.wants("wigner-symmetry"):
            out.add("wigner-symmetry", params, max(poly.wigner_symmetry_residual(j, beta) for j in js))
    if use_meixner:
        for gamma, mu in grid.meixner_points:
            family = poly.MeixnerFamily(gamma=gamma, mu=mu)
            params = {"gamma": gamma, "mu": mu, "n_max": grid.n_max}
            if out.wants("meixner-diffeq"):
                residual = poly.meixner_difference_residual(family, grid.n_max, grid.x_max)
                out.add("meixner-diffeq", {**params, "x_max": grid.x_max}, residual)
            if out.wants("meixner-gram"):
                out.add("meixner-gram", params, poly.meixner_gram_residual(family, grid.n_max))
    return out.records


def _spectral_defect(models: Sequence[osc.OscillatorModel], measure: Callable, expected: Callable) -> float:
    worst = 0.0
    for model in models:
        for n in range(model.N + 1):
            measurement = measure(model, n)
            worst = max(worst, abs(measurement.value - expected(model, n)), measurement.residual)
    return worst


def run_oscillator(grid: OscillatorGrid, rng: np.random.Generator, selected: Optional[set] = None) -> List[CheckRecord]:
    """Лестничные операторы, спектры и предел к функциям Эрмита."""
    out = _Recorder("oscillator", selected)
    j_max = max(grid.js) if grid.js else 0.0
    for beta in grid.betas:
        models = [osc.OscillatorModel(j=j, beta=beta) for j in grid.js]
        params = {"beta": f"{beta:.17g}", "j_max": j_max}
        if out.wants("ladder"):
            out.add("ladder", params, max(osc.ladder_residual(model) for model in models))
        if out.wants("commutator"):
            residual = _spectral_defect(models, osc.commutator_measurement, lambda m, n: 1.0 - n / m.j)
            out.add("commutator", params, residual)
        if out.wants("anticommutator"):
            residual = _spectral_defect(
                models, osc.anticommutator_measurement, lambda m, n: (2 * n + 1) - n * n / m.j
            )
            out.add("anticommutator", params, residual)
        if out.wants("hamiltonian"):
            residual = 0.0
            for model in models:
                expected = [0.5 * model.hbar_omega * ((2 * n + 1) - n * n / model.j) for n in range(model.N + 1)]
                residual = max(residual, float(np.max(np.abs(np.subtract(osc.hamiltonian_spectrum(model), expected)))))
            out.add("hamiltonian", params, residual)
        if out.wants("spectrum"):
            residual = max(
                float(np.max(np.abs(np.subtract(osc.position_spectrum(m), osc.position_eigenvalues_expected(m)))))
                for m in models
            )
            out.add("spectrum", params, residual)
    if out.wants("converge-monotone"):
        models = [osc.OscillatorModel(j=j, beta=math.pi / 2.0) for j in grid.hermite_js]
        for n in grid.hermite_levels:
            points = osc.hermite_convergence(models, n)
            params = {"n": n, "j": ",".join(f"{p.j:g}" for p in points)}
            out.add("converge-monotone", params, monotone_defect([p.sup_error for p in points]))
    return out.records


def run_hydrogen(grid: HydrogenGrid, rng: np.random.Generator, selected: Optional[set] = None) -> List[CheckRecord]:
    """Уравнение Штурма-Лиувилля, ортогональность, лестница L± и предел Лагерра."""
    out = _Recorder("hydrogen", selected)
    for gamma, mu in grid.points:
        model = hydrogen.HydrogenModel(gamma=gamma, mu=mu, n_max=grid.n_max)
        params = {"gamma": gamma, "mu": mu, "n_max": grid.n_max}
        if out.wants("diffeq"):
            out.add("diffeq", {**params, "x_cut": model.x_cut}, hydrogen.sl_residual_max(model))
        if out.wants("eigenvalue"):
            residual = max(
                abs(hydrogen.sl_eigenvalue(model, n) - (mu - 1.0) * n) for n in range(model.n_max + 1)
            )
            out.add("eigenvalue", params, residual)
        if out.wants("orthogonality"):
            gram = hydrogen.sl_gram(model)
            off_diagonal = gram - np.diag(np.diag(gram))
            out.add("orthogonality", params, float(np.max(np.abs(off_diagonal))))
        if out.wants("colinearity") or out.wants("prefactor"):
            ups = [hydrogen.ladder_prefactor(model, n, hydrogen.LadderDirection.UP) for n in range(model.n_max + 1)]
            downs = [
                hydrogen.ladder_prefactor(model, n, hydrogen.LadderDirection.DOWN) for n in range(1, model.n_max + 1)
            ]
            if out.wants("colinearity"):
                out.add("colinearity", params, max(abs(1.0 - fit.cosine) for fit in ups + downs))
            if out.wants("prefactor"):
                out.add("prefactor", params, max(abs(fit.prefactor - fit.expected) for fit in ups + downs))
    if out.wants("laguerre-monotone"):
        for n, l in grid.laguerre_levels:
            points = hydrogen.laguerre_limit_probe(grid.laguerre_mus, n, l)
            params = {"n": n, "l": l, "mu": ",".join(f"{p.mu:g}" for p in points)}
            out.add("laguerre-monotone", params, monotone_defect([p.sup_error for p in points]))
    return out.records


def _random_admissible_momentum(rng: np.random.Generator, epsilon: float, bound: float) -> Tuple[float, ...]:
    return tuple(float(v) / epsilon for v in rng.uniform(-bound, bound, size=dirac.DIMENSIONS))


def run_dirac(grid: DiracGrid, rng: np.random.Generator, selected: Optional[set] = None) -> List[CheckRecord]:
    """Разностное исчисление, ядро, дисперсия, плоские волны и факторизация Клейна-Гордона."""
    out = _Recorder("dirac", selected)
    gammas = dirac.dirac_gammas()
    params = dirac.LatticeParams(epsilon=grid.epsilon, extents=grid.extents, m0c=grid.m0c)
    base = {"eps": grid.epsilon, "m0c": grid.m0c}
    extents_text = ",".join(str(e) for e in grid.extents)
    if out.wants("clifford"):
        out.add("clifford", {"representation": "dirac"}, max(dirac.clifford_residual(gammas), dirac.hermiticity_residual(gammas)))
    if out.wants("commutation") or out.wants("summation-by-parts"):
        field = dirac.random_field(params, rng)
        if out.wants("commutation"):
            out.add("commutation", {**base, "extents": extents_text}, dirac.commutation_residual(field))
        if out.wants("summation-by-parts"):
            other = dirac.random_field(params, rng)
            residual = max(dirac.summation_by_parts_residual(field, other, mu) for mu in range(dirac.DIMENSIONS))
            out.add("summation-by-parts", {**base, "extents": extents_text}, residual)
    if out.wants("kernel"):
        if grid.k is not None:
            momenta = [grid.k]
        else:
            momenta = [_random_admissible_momentum(rng, grid.epsilon, 0.45) for _ in range(grid.kernel_samples)]
        residual = max(dirac.kernel_residual(params, dirac.FourMomentum(k=k, epsilon=grid.epsilon)) for k in momenta)
        out.add("kernel", {**base, "samples": len(momenta)}, residual)
    spatial_momenta: List[Tuple[float, float, float]]
    if grid.k is not None:
        spatial_momenta = [tuple(grid.k[1:])]  # type: ignore[list-item]
    else:
        spatial_momenta = [
            dirac.random_quantized_momentum(grid.epsilon, grid.momentum_extent, rng, grid.momentum_bound)
            for _ in range(grid.momenta)
        ]
    momentum_params = {**base, "samples": len(spatial_momenta), "quantization": grid.momentum_extent}
    if out.wants("dispersion"):
        residual = 0.0
        for spatial in spatial_momenta:
            k0 = dirac.dispersion_solve(params, spatial)
            momentum = dirac.FourMomentum(k=(k0, *spatial), epsilon=grid.epsilon)
            residual = max(residual, abs(dirac.dispersion_residual(params, momentum)))
        out.add("dispersion", momentum_params, residual)
    if out.wants("planewave"):
        residual = max(dirac.plane_wave_dirac_residual(params, gammas, spatial) for spatial in spatial_momenta)
        out.add("planewave", {**momentum_params, "extents": extents_text}, residual)
    if out.wants("kg-factorization"):
        per_size = max(1, math.ceil(grid.kg_fields / len(grid.kg_sizes)))
        for size in grid.kg_sizes:
            lattice = params.model_copy(update={"extents": (size,) * dirac.DIMENSIONS})
            residual = max(
                dirac.kg_factorization_residual(dirac.random_field(lattice, rng), gammas) for _ in range(per_size)
            )
            out.add("kg-factorization", {**base, "L": size, "fields": per_size}, residual)
    return out.records


SUITE_RUNNERS: Dict[str, Callable[..., List[CheckRecord]]] = {
    "weyl": run_weyl,
    "poly": run_poly,
    "oscillator": run_oscillator,
    "hydrogen": run_hydrogen,
    "dirac": run_dirac,
}


def polynomial_table(family: str, values: Dict[str, float]) -> List[Tuple[int, int, float]]:
    """
    Тройки (n, x, значение) нормированных многочленов.

    Args:
        family: kravchuk (N, p, n_max) или meixner (gamma, mu, n_max, x_max)
        values: Параметры семейства

    Returns:
        List[Tuple[int, int, float]]: Таблица по n, затем по x
    """
    try:
        if family == "kravchuk":
            kravchuk = poly.KravchukFamily(N=int(values["N"]), p=float(values["p"]))
            table = poly.kravchuk_table(kravchuk, int(values["n_max"]) if "n_max" in values else None)
        elif family == "meixner":
            meixner = poly.MeixnerFamily(gamma=float(values["gamma"]), mu=float(values["mu"]))
            table = poly.meixner_table(meixner, int(values.get("n_max", 5)), int(values.get("x_max", 30)))
        else:
            raise InvalidArgumentError(f"unknown polynomial family '{family}'")
    except KeyError as missing:
        raise InvalidArgumentError(f"missing parameter {missing} for family '{family}'") from None
    return [(n, x, float(table[n, x])) for n in range(table.shape[0]) for x in range(table.shape[1])]
