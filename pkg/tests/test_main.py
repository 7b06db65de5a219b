"""
@file: test_main.py
@description: Тесты командной строки latticeqm
@dependencies: pytest, src.main
@created: 2024-03-27
"""

import json
import logging

import pytest

from src.main import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE, build_parser, build_run_config, main
from src.utils.config import Config


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    """Рабочая директория и окружение теста; обработчики логгера src снимаются после теста."""
    for name in ("OUTPUT_DIR", "SEED", "FORMAT", "WORKERS"):
        monkeypatch.delenv(f"LATTICEQM_{name}", raising=False)
    monkeypatch.chdir(tmp_path)
    yield
    logger = logging.getLogger("src")
    for handler in logger.handlers[:]:
        handler.close()
        logger.removeHandler(handler)


def run(*argv: str) -> int:
    return main([*argv, "--no-progress"])


class TestParser:
    def test_unknown_check_is_usage_error(self):
        with pytest.raises(SystemExit) as error:
            build_parser().parse_args(["weyl", "--check", "ladder"])
        assert error.value.code == 2

    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_extents_need_four_values(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["dirac", "--extents", "4,4,4"])

    def test_flags_override_grid(self):
        args = build_parser().parse_args(["dirac", "--eps", "0.25", "--mass", "0", "--extents", "2,3,4,5"])
        config = build_run_config(args, Config())
        assert config.suites == ["dirac"]
        assert config.grids.dirac.epsilon == 0.25
        assert config.grids.dirac.m0c == 0.0
        assert config.grids.dirac.extents == (2, 3, 4, 5)

    def test_default_output_path(self, tmp_path):
        args = build_parser().parse_args(["oscillator", "--format", "json"])
        config = build_run_config(args, Config())
        assert str(config.output_path).endswith("latticeqm-oscillator.json")

    def test_all_selects_every_suite(self):
        config = build_run_config(build_parser().parse_args(["all"]), Config())
        assert config.suites == ["weyl", "poly", "oscillator", "hydrogen", "dirac"]


class TestMain:
    def test_weyl_dimension_eight(self, tmp_path, capsys):
        out = tmp_path / "weyl.csv"
        assert run("weyl", "--dim", "8", "--out", str(out)) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "suite,check,params,residual,threshold,pass"
        assert all(line.endswith(",true") for line in lines[1:])
        assert "[latticeqm] OK" in capsys.readouterr().out

    def test_all_on_default_grids(self, tmp_path, capsys):
        out = tmp_path / "all.csv"
        assert run("all", "--out", str(out)) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert {line.split(",")[0] for line in lines[1:]} == {"weyl", "poly", "oscillator", "hydrogen", "dirac"}
        assert all(line.endswith(",true") for line in lines[1:])
        assert "[latticeqm] OK" in capsys.readouterr().out

    def test_weyl_pair(self, tmp_path):
        out = tmp_path / "pair.json"
        code = run("weyl", "--dim", "16", "--s", "3", "--t", "-5", "--check", "commutation", "--out", str(out), "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out.read_text(encoding="utf-8"))
        commutation = [item for item in data if item["check"] == "commutation"]
        assert commutation[0]["params"] == {"N": "16", "s": "3", "t": "-5"}

    def test_same_seed_same_bytes(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["dirac", "--check", "kg-factorization", "--check", "kernel", "--seed", "3"]
        assert run(*argv, "--out", str(first)) == EXIT_OK
        assert run(*argv, "--out", str(second), "--workers", "1") == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_hydrogen_point(self, tmp_path):
        out = tmp_path / "h.csv"
        assert run("hydrogen", "--gamma", "2", "--mu", "0.5", "--n-max", "3", "--check", "ladder", "--out", str(out)) == EXIT_OK
        assert "gamma=2.0;mu=0.5;n_max=3" in out.read_text(encoding="utf-8")

    def test_hydrogen_needs_both_parameters(self, capsys):
        assert run("hydrogen", "--gamma", "2", "--out", "h.csv") == EXIT_USAGE
        assert "--gamma and --mu" in capsys.readouterr().err

    def test_invalid_grid_value(self):
        assert run("dirac", "--eps", "-1", "--out", "d.csv") == EXIT_USAGE

    def test_pole_momentum_is_usage_error(self, tmp_path, capsys):
        # k₀ε = 0.5 лежит на полюсе p̃
        code = run("dirac", "--k", "1,0,0,0", "--check", "kernel", "--out", str(tmp_path / "d.csv"))
        assert code == EXIT_USAGE
        assert "must be below 1/2" in capsys.readouterr().err

    def test_failing_check_exit_code(self, monkeypatch, tmp_path, capsys):
        monkeypatch.setattr("src.core.finite_weyl.weyl_residual", lambda space, s, t: 1.0)
        out = tmp_path / "fail.csv"
        assert run("weyl", "--dim", "4", "--check", "commutation", "--out", str(out)) == EXIT_FAILED
        assert "FAIL" in capsys.readouterr().out
        assert ",false" in out.read_text(encoding="utf-8")

    def test_unwritable_output(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        assert run("weyl", "--dim", "4", "--out", str(blocker / "r.csv")) == EXIT_IO

    def test_output_dir_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("LATTICEQM_OUTPUT_DIR", str(tmp_path / "reports"))
        monkeypatch.setenv("LATTICEQM_FORMAT", "json")
        assert run("weyl", "--dim", "4", "--check", "fourier") == EXIT_OK
        assert (tmp_path / "reports" / "latticeqm-weyl.json").exists()

    def test_log_file(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        assert run("weyl", "--dim", "4", "--check", "fourier", "--out", "w.csv", "--log-file", str(log_file)) == EXIT_OK
        logging.getLogger("src").handlers[-1].flush()
        assert "[RUNNER]" in log_file.read_text(encoding="utf-8")


class TestTable:
    def test_kravchuk_table(self, tmp_path):
        path = tmp_path / "k.csv"
        assert main(["poly", "--family", "kravchuk", "--params", "N=3,p=0.5", "--table", str(path)]) == EXIT_OK
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "n,x,value"
        assert len(lines) == 1 + 16

    def test_table_needs_family(self, tmp_path):
        assert main(["poly", "--table", str(tmp_path / "k.csv")]) == EXIT_USAGE
