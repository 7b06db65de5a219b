#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Основной модуль приложения latticeqm: командная строка для наборов проверок.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from src.core.checks import CHECK_GROUPS, polynomial_table
from src.core.errors import InvalidArgumentError, LatticeQMError, ReportIOError
from src.core.models import KNOWN_SUITES, RunConfig, SuiteGrids
from src.core.report import emit, emit_table
from src.core.suite_runner import all_passed, run_suite
from src.utils.config import Config
from src.utils.logger import setup_logger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _floats(text: str, count: Optional[int] = None) -> Tuple[float, ...]:
    values = tuple(float(part) for part in text.split(","))
    if count is not None and len(values) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got '{text}'")
    return values


def _extents(text: str) -> Tuple[int, ...]:
    values = tuple(int(part) for part in text.split(","))
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected L0,L1,L2,L3, got '{text}'")
    return values


def _key_values(text: str) -> Dict[str, float]:
    result = {}
    for pair in filter(None, text.split(",")):
        key, sep, value = pair.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected key=value, got '{pair}'")
        result[key.strip()] = float(value)
    return result


def _add_common(parser: argparse.ArgumentParser, suite: Optional[str]) -> None:
    parser.add_argument("--out", type=Path, default=None, help="Файл отчёта")
    parser.add_argument("--format", choices=("csv", "json"), default=None, help="Формат отчёта")
    parser.add_argument("--seed", type=int, default=None, help="Зерно генератора")
    parser.add_argument("--workers", type=int, default=None, help="Число потоков")
    parser.add_argument("--config", type=str, default=None, help="JSON-файл конфигурации")
    parser.add_argument("--log-file", type=str, default=None, help="Файл лога")
    parser.add_argument("--verbose", action="store_true", help="Подробный лог (DEBUG)")
    parser.add_argument("--no-progress", action="store_true", help="Без индикатора прогресса")
    if suite is not None:
        parser.add_argument(
            "--check",
            action="append",
            choices=sorted(CHECK_GROUPS[suite]),
            default=None,
            help="Проверка (можно повторять); по умолчанию все",
        )


def build_parser() -> argparse.ArgumentParser:
    """Парсер командной строки latticeqm."""
    parser = argparse.ArgumentParser(prog="latticeqm", description="Проверки дискретной квантовой механики на решётке")
    commands = parser.add_subparsers(dest="command", required=True)

    weyl = commands.add_parser("weyl", help="Конечная алгебра Вейля")
    weyl.add_argument("--dim", type=int, default=None, help="Размерность N")
    weyl.add_argument("--s", type=int, default=None, help="Степень сдвига s")
    weyl.add_argument("--t", type=int, default=None, help="Степень фазы t")
    weyl.add_argument("--sigma", type=float, default=None)
    weyl.add_argument("--tau", type=float, default=None)
    weyl.add_argument("--scaling", choices=("momentum", "symmetric"), default=None)
    _add_common(weyl, "weyl")

    poly = commands.add_parser("poly", help="Многочлены Кравчука и Мейкснера")
    poly.add_argument("--family", choices=("kravchuk", "meixner"), default=None)
    poly.add_argument("--params", type=_key_values, default=None, help="k=v,...: N,p | gamma,mu,n_max,x_max | beta,j_max")
    poly.add_argument("--table", type=Path, default=None, help="Записать тройки (n, x, value) в CSV")
    _add_common(poly, "poly")

    oscillator = commands.add_parser("oscillator", help="Дискретный осциллятор")
    oscillator.add_argument("--j", type=float, default=None)
    oscillator.add_argument("--beta", type=float, default=None)
    _add_common(oscillator, "oscillator")

    hydrogen = commands.add_parser("hydrogen", help="Радиальная задача на функциях Мейкснера")
    hydrogen.add_argument("--gamma", type=float, default=None)
    hydrogen.add_argument("--mu", type=float, default=None)
    hydrogen.add_argument("--n-max", type=int, default=None)
    _add_common(hydrogen, "hydrogen")

    dirac = commands.add_parser("dirac", help="Решёточное уравнение Дирака")
    dirac.add_argument("--eps", type=float, default=None)
    dirac.add_argument("--mass", type=float, default=None, help="m0c")
    dirac.add_argument("--extents", type=_extents, default=None, help="L0,L1,L2,L3")
    dirac.add_argument("--k", type=lambda text: _floats(text, 4), default=None, help="k0,k1,k2,k3")
    _add_common(dirac, "dirac")

    everything = commands.add_parser("all", help="Все наборы")
    _add_common(everything, None)
    return parser


def _weyl_grid(args: argparse.Namespace) -> Dict[str, object]:
    update: Dict[str, object] = {}
    if args.dim is not None:
        update.update(dims=[args.dim], matrix_dims=[args.dim])
    if args.s is not None or args.t is not None:
        update["pair"] = (args.s or 0, args.t or 0)
    for name in ("sigma", "tau", "scaling"):
        if getattr(args, name) is not None:
            update[name] = getattr(args, name)
    return update


def _poly_grid(args: argparse.Namespace) -> Dict[str, object]:
    update: Dict[str, object] = {"family": args.family}
    values = args.params or {}
    if "beta" in values:
        update["betas"] = [values["beta"]]
    if "j_max" in values:
        update["j_max"] = values["j_max"]
    if "gamma" in values and "mu" in values:
        update["meixner_points"] = [(values["gamma"], values["mu"])]
    for name in ("n_max", "x_max"):
        if name in values:
            update[name] = int(values[name])
    return update


def _oscillator_grid(args: argparse.Namespace) -> Dict[str, object]:
    update: Dict[str, object] = {}
    if args.j is not None:
        update["js"] = [args.j]
    if args.beta is not None:
        update["betas"] = [args.beta]
    return update


def _hydrogen_grid(args: argparse.Namespace) -> Dict[str, object]:
    update: Dict[str, object] = {}
    if args.gamma is not None or args.mu is not None:
        if args.gamma is None or args.mu is None:
            raise InvalidArgumentError("--gamma and --mu must be given together")
        update["points"] = [(args.gamma, args.mu)]
    if args.n_max is not None:
        update["n_max"] = args.n_max
    return update


def _dirac_grid(args: argparse.Namespace) -> Dict[str, object]:
    update: Dict[str, object] = {}
    if args.eps is not None:
        update["epsilon"] = args.eps
    if args.mass is not None:
        update["m0c"] = args.mass
    if args.extents is not None:
        update["extents"] = args.extents
    if args.k is not None:
        update["k"] = args.k
    return update


GRID_UPDATES: Dict[str, Callable[[argparse.Namespace], Dict[str, object]]] = {
    "weyl": _weyl_grid,
    "poly": _poly_grid,
    "oscillator": _oscillator_grid,
    "hydrogen": _hydrogen_grid,
    "dirac": _dirac_grid,
}


def build_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    """RunConfig из конфигурации и флагов (флаги важнее)."""
    suites: List[str] = list(KNOWN_SUITES) if args.command == "all" else [args.command]
    grids = SuiteGrids()
    checks = None
    if args.command != "all":
        grid_type = type(getattr(grids, args.command))
        merged = {**getattr(grids, args.command).model_dump(), **GRID_UPDATES[args.command](args)}
        grids = grids.model_copy(update={args.command: grid_type.model_validate(merged)})
        if args.check:
            checks = {args.command: list(args.check)}
    output_format = args.format or config.output_format
    output_path = args.out
    if output_path is None and config.output_dir is not None:
        output_path = config.output_dir / f"latticeqm-{args.command}.{output_format}"
    return RunConfig(
        suites=suites,
        checks=checks,
        grids=grids,
        output_path=output_path,
        output_format=output_format,
        seed=config.seed if args.seed is None else args.seed,
        workers=config.workers if args.workers is None else args.workers,
    )


def _write_table(args: argparse.Namespace) -> int:
    if args.family is None or not args.params:
        print("[latticeqm] --table needs --family and --params", file=sys.stderr)
        return EXIT_USAGE
    path = emit_table(polynomial_table(args.family, args.params), args.table)
    print(f"[latticeqm] table written to {path}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Основная функция; возвращает код завершения."""
    args = build_parser().parse_args(argv)
    try:
        config = Config.from_env(args.config)
    except (OSError, ValueError) as e:
        print(f"[latticeqm] cannot read configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    log_file = args.log_file
    if log_file is None and config.log_dir is not None:
        log_file = str(config.log_dir / "latticeqm.log")
    setup_logger(log_file=log_file, level=logging.DEBUG if args.verbose else logging.INFO)

    try:
        if args.command == "poly" and args.table is not None:
            return _write_table(args)
        run_config = build_run_config(args, config)
        records = run_suite(run_config, progress=not args.no_progress)
        emit(records, run_config.output_format, run_config.output_path)
    except ReportIOError as e:
        print(f"[latticeqm] {e}", file=sys.stderr)
        return EXIT_IO
    except (LatticeQMError, ValidationError) as e:
        print(f"[latticeqm] {e}", file=sys.stderr)
        return EXIT_USAGE

    failed = [record for record in records if not record.passed]
    target = f" -> {run_config.output_path}" if run_config.output_path else ""
    if not all_passed(records):
        print(f"[latticeqm] FAIL ({len(failed)} of {len(records)} checks, seed={run_config.seed}){target}")
        for record in failed:
            print(f"  - {record.suite}/{record.check} {record.params_text()} residual={record.residual:.3e}")
        return EXIT_FAILED
    print(f"[latticeqm] OK (checks={len(records)}, seed={run_config.seed}){target}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
