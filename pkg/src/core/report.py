"""
@file: report.py
@description: Запись отчёта о проверках в CSV или JSON с детерминированным форматом
@dependencies: csv, json, models
@created: 2024-03-26
"""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InvalidArgumentError, ReportIOError
from .models import CheckRecord

logger = logging.getLogger(__name__)

CSV_HEADER = ("suite", "check", "params", "residual", "threshold", "pass")


def format_float(value: float) -> str:
    """17 значащих цифр в формате %g; ноль печатается как "0"."""
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    return f"{value:.17g}"


def _csv_text(records: Sequence[CheckRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(
            (
                record.suite,
                record.check,
                record.params_text(),
                format_float(record.residual),
                format_float(record.threshold),
                "true" if record.passed else "false",
            )
        )
    return buffer.getvalue()


def _json_text(records: Sequence[CheckRecord]) -> str:
    # числа пишутся вручную, чтобы сохранить 17 значащих цифр
    items = []
    for record in records:
        params = json.dumps({key: record.params[key] for key in sorted(record.params)}, ensure_ascii=False)
        items.append(
            "  {"
            f'"suite": {json.dumps(record.suite)}, '
            f'"check": {json.dumps(record.check)}, '
            f'"params": {params}, '
            f'"residual": {format_float(record.residual)}, '
            f'"threshold": {format_float(record.threshold)}, '
            f'"pass": {"true" if record.passed else "false"}'
            "}"
        )
    return "[\n" + ",\n".join(items) + "\n]\n"


def render(records: Sequence[CheckRecord], output_format: str) -> str:
    """
    Текст отчёта.

    Raises:
        InvalidArgumentError: Если записей нет или формат неизвестен
    """
    if not records:
        raise InvalidArgumentError("no records to emit")
    if output_format == "csv":
        return _csv_text(records)
    if output_format == "json":
        return _json_text(records)
    raise InvalidArgumentError(f"unknown output format '{output_format}', expected csv or json")


def _write(text: str, path: Union[str, Path]) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        logger.error(f"[REPORT] cannot write {target}: {e}")
        raise ReportIOError(target, e.strerror or str(e)) from e
    return target


def emit(records: Sequence[CheckRecord], output_format: str, path: Optional[Union[str, Path]]) -> str:
    """
    Записывает отчёт в файл (или только возвращает текст при path=None).

    Args:
        records: Непустой список записей
        output_format: csv или json
        path: Путь к файлу отчёта

    Returns:
        str: Текст отчёта

    Raises:
        InvalidArgumentError: Если записей нет или формат неизвестен
        ReportIOError: Если файл не удалось записать
    """
    text = render(records, output_format)
    if path is not None:
        target = _write(text, path)
        logger.info(f"[REPORT] {len(records)} records written to {target}")
    return text


def load_records(path: Union[str, Path]) -> List[CheckRecord]:
    """Читает отчёт JSON или CSV обратно в записи."""
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as e:
        raise ReportIOError(source, e.strerror or str(e)) from e
    if source.suffix == ".json":
        return [CheckRecord.model_validate(item) for item in json.loads(text)]
    records = []
    for row in csv.DictReader(io.StringIO(text)):
        params = dict(pair.split("=", 1) for pair in row["params"].split(";") if pair)
        records.append(
            CheckRecord(
                suite=row["suite"],
                check=row["check"],
                params=params,
                residual=float(row["residual"]),
                threshold=float(row["threshold"]),
                passed=row["pass"] == "true",
            )
        )
    return records


def emit_table(rows: Iterable[Tuple[int, int, float]], path: Union[str, Path]) -> Path:
    """Таблица значений многочленов с заголовком n,x,value."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("n", "x", "value"))
    for n, x, value in rows:
        writer.writerow((n, x, format_float(value)))
    target = _write(buffer.getvalue(), path)
    logger.info(f"[REPORT] table written to {target}")
    return target
