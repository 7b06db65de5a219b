"""
@file: conftest.py
@description: Конфигурация для тестов
@dependencies: pytest, numpy, logging
@created: 2024-03-21
"""

import logging
import sys
from pathlib import Path

import numpy as np
import pytest

# Добавляем корневую директорию проекта в PYTHONPATH
project_root = str(Path(__file__).parent.parent)
sys.path.insert(0, project_root)

TEST_SEED = 20240321


@pytest.fixture(autouse=True)
def setup_logging():
    """Настройка логирования для тестов."""
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(logging.DEBUG)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    root_logger.addHandler(console_handler)

    # Настраиваем логгеры модулей
    for name in ['src.core.lattice_hydrogen', 'src.core.suite_runner', 'tests']:
        logger = logging.getLogger(name)
        logger.setLevel(logging.DEBUG)
        logger.propagate = True


@pytest.fixture
def rng() -> np.random.Generator:
    """Генератор с фиксированным зерном."""
    return np.random.default_rng(TEST_SEED)


@pytest.fixture
def random_vector(rng):
    """Фабрика случайных комплексных векторов длины n."""

    def make(n: int) -> np.ndarray:
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    return make
