#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Модуль настройки логирования.
"""

import logging
import os
from pathlib import Path
from typing import Optional, Union

DEFAULT_LOGGER = "src"

_FORMATTER = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S")


def _has_file_handler(logger: logging.Logger, log_file: Path) -> bool:
    target = os.path.abspath(log_file)
    return any(
        isinstance(handler, logging.FileHandler) and handler.baseFilename == target for handler in logger.handlers
    )


def setup_logger(
    name: Optional[str] = None,
    log_file: Optional[Union[str, Path]] = None,
    level: int = logging.INFO,
) -> logging.Logger:
    """
    Настройка логгера.

    Повторный вызов обновляет уровень и добавляет файловый обработчик,
    если такого файла ещё нет; консольный обработчик не дублируется.
    Имя по умолчанию - корневой логгер пакета src, чтобы сообщения
    модулей src.core.* попадали в его обработчики.

    Args:
        name: Имя логгера
        log_file: Путь к файлу лога (обработчик в UTF-8)
        level: Уровень логирования

    Returns:
        logging.Logger: Настроенный логгер
    """
    logger = logging.getLogger(name or DEFAULT_LOGGER)
    logger.setLevel(level)

    # Хендлер для вывода в консоль
    if not any(type(handler) is logging.StreamHandler for handler in logger.handlers):
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(_FORMATTER)
        logger.addHandler(console_handler)

    # Хендлер для записи в файл, если указан log_file
    if log_file:
        path = Path(log_file)
        if not _has_file_handler(logger, path):
            path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(path, encoding="utf-8")
            file_handler.setFormatter(_FORMATTER)
            logger.addHandler(file_handler)

    return logger
