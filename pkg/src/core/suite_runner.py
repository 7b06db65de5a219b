"""
@file: suite_runner.py
@description: Запуск наборов проверок в пуле потоков с детерминированным порядком записей
@dependencies: numpy, tqdm, checks, models
@created: 2024-03-26
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List

import numpy as np
from tqdm import tqdm

from .checks import SUITE_RUNNERS, expand_checks
from .errors import InvalidArgumentError, UnknownSuiteError
from .models import KNOWN_SUITES, CheckRecord, RunConfig

logger = logging.getLogger(__name__)


def suite_rng(seed: int, suite: str) -> np.random.Generator:
    """Генератор набора: зависит только от зерна и имени набора, но не от порядка запуска."""
    return np.random.default_rng([seed, KNOWN_SUITES.index(suite)])


def validate_suites(config: RunConfig) -> None:
    """
    Raises:
        InvalidArgumentError: Если не выбран ни один набор
        UnknownSuiteError: Если набор неизвестен
    """
    if not config.suites:
        raise InvalidArgumentError(f"no suite selected. Known suites: {', '.join(KNOWN_SUITES)}")
    for suite in config.suites:
        if suite not in KNOWN_SUITES:
            raise UnknownSuiteError(suite, KNOWN_SUITES)


def _run_one(config: RunConfig, suite: str) -> List[CheckRecord]:
    selected = expand_checks(suite, (config.checks or {}).get(suite))
    grid = getattr(config.grids, suite)
    logger.info(f"[RUNNER] suite {suite} started")
    records = SUITE_RUNNERS[suite](grid, suite_rng(config.seed, suite), selected)
    failed = sum(1 for record in records if not record.passed)
    logger.info(f"[RUNNER] suite {suite} finished: {len(records)} records, {failed} failed")
    return records


def run_suite(config: RunConfig, progress: bool = True) -> List[CheckRecord]:
    """
    Выполняет выбранные наборы и возвращает записи.

    Наборы выполняются параллельно; записи сортируются по (suite, check, params).

    Args:
        config: Конфигурация прогона
        progress: Показывать индикатор tqdm

    Returns:
        List[CheckRecord]: Отсортированные записи

    Raises:
        InvalidArgumentError: Если выбор пуст или проверка неизвестна
        UnknownSuiteError: Если набор неизвестен
    """
    validate_suites(config)
    # имена проверок разбираются до запуска пула
    for suite in config.suites:
        expand_checks(suite, (config.checks or {}).get(suite))
    logger.info(f"[RUNNER] running {', '.join(config.suites)} with seed={config.seed} workers={config.workers}")
    records: List[CheckRecord] = []
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = [executor.submit(_run_one, config, suite) for suite in config.suites]
        for future in tqdm(futures, desc="suites", unit="suite", disable=not progress):
            records.extend(future.result())
    records.sort(key=CheckRecord.sort_key)
    return records


def all_passed(records: List[CheckRecord]) -> bool:
    return all(record.passed for record in records)
