"""
@file: thresholds.py
@description: Единая таблица порогов приёмки (suite, check) -> threshold
@dependencies: -
@created: 2024-03-26
"""

from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .errors import InvalidArgumentError

# Монотонные проверки возвращают число шагов без строгого убывания ошибки:
# проходит только 0.
_TABLE: Dict[Tuple[str, str], float] = {
    ("weyl", "commutation"): 1e-12,
    ("weyl", "group-closure"): 1e-12,
    ("weyl", "fourier-unitarity"): 1e-12,
    ("weyl", "parseval"): 1e-12,
    ("weyl", "intertwine"): 1e-12,
    ("weyl", "position-action"): 1e-12,
    ("weyl", "momentum-action"): 1e-12,
    ("weyl", "continuum-monotone"): 0.5,
    ("poly", "kravchuk-gram"): 1e-10,
    ("poly", "meixner-gram"): 1e-10,
    ("poly", "meixner-diffeq"): 1e-10,
    ("poly", "wigner-consistency"): 1e-10,
    ("poly", "wigner-symmetry"): 1e-10,
    ("oscillator", "ladder"): 1e-10,
    ("oscillator", "commutator"): 1e-10,
    ("oscillator", "anticommutator"): 1e-10,
    ("oscillator", "hamiltonian"): 1e-10,
    ("oscillator", "spectrum"): 1e-10,
    ("oscillator", "converge-monotone"): 0.5,
    ("hydrogen", "diffeq"): 1e-10,
    ("hydrogen", "orthogonality"): 1e-10,
    ("hydrogen", "eigenvalue"): 1e-10,
    ("hydrogen", "colinearity"): 1e-10,
    ("hydrogen", "prefactor"): 1e-9,
    ("hydrogen", "laguerre-monotone"): 0.5,
    ("dirac", "clifford"): 1e-14,
    ("dirac", "kernel"): 1e-12,
    ("dirac", "commutation"): 1e-13,
    ("dirac", "summation-by-parts"): 1e-12,
    ("dirac", "dispersion"): 1e-13,
    ("dirac", "planewave"): 1e-11,
    ("dirac", "kg-factorization"): 1e-12,
}

THRESHOLDS: Mapping[Tuple[str, str], float] = MappingProxyType(_TABLE)


def threshold_for(suite: str, check: str) -> float:
    """
    Порог для проверки.

    Raises:
        InvalidArgumentError: Если пара (suite, check) неизвестна
    """
    try:
        return THRESHOLDS[(suite, check)]
    except KeyError:
        raise InvalidArgumentError(f"no threshold for check '{check}' in suite '{suite}'") from None


def checks_of(suite: str) -> Tuple[str, ...]:
    """Имена проверок набора в порядке таблицы."""
    return tuple(check for owner, check in THRESHOLDS if owner == suite)
