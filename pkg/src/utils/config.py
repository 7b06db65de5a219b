#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Модуль конфигурации приложения.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv

ENV_PREFIX = "LATTICEQM_"
DEFAULT_SEED = 20240321


class Config:
    """Класс конфигурации приложения."""

    def __init__(self, config_path: Optional[str] = None):
        """
        Инициализация конфигурации.

        Args:
            config_path: Путь к файлу конфигурации
        """
        # Базовые настройки
        self.seed: int = DEFAULT_SEED
        self.workers: int = 4
        self.output_format: str = "csv"

        # Пути
        self._output_dir: Optional[Path] = Path("output")
        self._log_dir: Optional[Path] = None

        # Загрузка конфигурации из файла, если указан путь
        self.config_path = config_path
        if config_path:
            self.load(config_path)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "workers": self.workers,
            "output_format": self.output_format,
            "output_dir": str(self.output_dir) if self.output_dir else None,
            "log_dir": str(self.log_dir) if self.log_dir else None,
        }

    def save(self, path: str) -> None:
        """
        Сохраняет конфигурацию в файл.

        Args:
            path: Путь к файлу конфигурации
        """
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=4)

    def load(self, path: str) -> "Config":
        """
        Загружает конфигурацию из файла.

        Args:
            path: Путь к файлу конфигурации

        Returns:
            Config: Объект конфигурации
        """
        with open(path, encoding="utf-8") as f:
            config = json.load(f)

        self.seed = int(config.get("seed", DEFAULT_SEED))
        self.workers = int(config.get("workers", 4))
        self.output_format = config.get("output_format", "csv")
        self.output_dir = config.get("output_dir", "output")
        self.log_dir = config.get("log_dir")

        return self

    def apply_env(self, env_file: Optional[str] = None) -> "Config":
        """
        Переопределяет настройки переменными окружения LATTICEQM_*.

        Файл .env подхватывается через python-dotenv; уже заданные
        переменные окружения не перезаписываются.

        Args:
            env_file: Путь к файлу .env (по умолчанию поиск от текущей директории)
        """
        load_dotenv(env_file)
        if f"{ENV_PREFIX}OUTPUT_DIR" in os.environ:
            self.output_dir = os.environ[f"{ENV_PREFIX}OUTPUT_DIR"]
        if f"{ENV_PREFIX}SEED" in os.environ:
            self.seed = int(os.environ[f"{ENV_PREFIX}SEED"])
        if f"{ENV_PREFIX}FORMAT" in os.environ:
            self.output_format = os.environ[f"{ENV_PREFIX}FORMAT"]
        if f"{ENV_PREFIX}WORKERS" in os.environ:
            self.workers = int(os.environ[f"{ENV_PREFIX}WORKERS"])
        return self

    @classmethod
    def from_env(cls, config_path: Optional[str] = None, env_file: Optional[str] = None) -> "Config":
        """Конфигурация из файла (если указан) с переопределением из окружения."""
        return cls(config_path).apply_env(env_file)

    @property
    def output_dir(self) -> Optional[Path]:
        """Директория для отчётов."""
        return self._output_dir

    @output_dir.setter
    def output_dir(self, value: Optional[Union[str, Path]]) -> None:
        """
        Устанавливает директорию для отчётов.

        Args:
            value: Путь к директории или None
        """
        if value is None:
            self._output_dir = None
        else:
            self._output_dir = Path(value)

    @property
    def log_dir(self) -> Optional[Path]:
        """Директория для логов."""
        return self._log_dir

    @log_dir.setter
    def log_dir(self, value: Optional[Union[str, Path]]) -> None:
        if value is None:
            self._log_dir = None
        else:
            self._log_dir = Path(value)
