"""End-to-end tests of the command-line surface."""

import json
import sys

import pytest

from app.cli import main
from app.config import settings
from app.logging_setup import configure_logging
from app.schemas.equilibria import EquilibriaReport
from app.services.equilibria import equilibria_report
from app.services.model import resolve_parameters
from app.schemas.parameters import ParameterBlock

from tests.conftest import CONFIG_DIR, TRANSCRITICAL, HOPF_A


@pytest.fixture(autouse=True)
def _restore_logging():
    yield
    configure_logging("WARNING", stream=sys.__stderr__)


def _config(name: str) -> str:
    return str(CONFIG_DIR / name)


def _write_config(tmp_path, payload: dict) -> str:
    path = tmp_path / "params.json"
    path.write_text(json.dumps(payload))
    return str(path)


class TestEquilibriaCommand:
    def test_coexistence_state(self, capsys):
        assert main(["equilibria", "--config", _config("transcritical.json")]) == 0
        report = json.loads(capsys.readouterr().out)
        f2 = report["equilibria"][2]
        assert f2["kind"] == "Coexistence" and f2["feasible"]
        assert (f2["state"]["X"], f2["state"]["Y"], f2["state"]["Z"]) == pytest.approx((0.5, 0.17625, 0.375))

    def test_round_trip(self, tmp_path):
        out = tmp_path / "eq.json"
        assert main(["equilibria", "--config", _config("transcritical.json"), "--out", str(out)]) == 0
        parsed = EquilibriaReport.model_validate_json(out.read_text())
        block = ParameterBlock.model_validate(json.loads((CONFIG_DIR / "transcritical.json").read_text()))
        assert parsed == equilibria_report(resolve_parameters(block))

    def test_raw_block_matches_scaled(self, capsys):
        main(["equilibria", "--config", _config("transcritical_raw.json")])
        raw = json.loads(capsys.readouterr().out)
        main(["equilibria", "--config", _config("transcritical.json")])
        scaled = json.loads(capsys.readouterr().out)
        for key in ("X", "Y", "Z"):
            assert raw["equilibria"][2]["state"][key] == pytest.approx(scaled["equilibria"][2]["state"][key])

    def test_no_consumption_is_infeasible(self, tmp_path, capsys):
        config = _write_config(tmp_path, {"scaled": {**TRANSCRITICAL, "B": 0.0, "A": 0.3}})
        assert main(["equilibria", "--config", config]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["equilibria"][2]["feasible"] is False
        assert report["transcritical_A"] is None

    def test_A_override(self, capsys):
        assert main(["equilibria", "--config", _config("example1.json"), "--A", "0.6"]) == 0
        assert json.loads(capsys.readouterr().out)["params"]["A"] == 0.6


class TestClassifyCommand:
    def test_example1(self, capsys):
        assert main(["classify", "--config", _config("example1.json")]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["case_label"] == "Case1/B/1+"
        (interval,) = report["candidate_intervals"]
        assert (interval["lo"], interval["hi"]) == pytest.approx((0.36, 4.81), abs=0.01)
        assert report["stability"] is None

    def test_with_A(self, capsys):
        assert main(["classify", "--config", _config("example2.json"), "--A", "0.85"]) == 0
        assert json.loads(capsys.readouterr().out)["stability"]["stable"] is True


class TestSimulateCommand:
    def test_trajectory_and_verdict_files(self, tmp_path):
        out = tmp_path / "traj.csv"
        code = main(["simulate", "--config", _config("example2.json"), "--A", "0.85", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,X,Y,Z"
        assert len(lines) == settings.output_intervals + 2
        verdict = json.loads((tmp_path / "traj.verdict.json").read_text())
        assert verdict["verdict"]["kind"] == "SteadyState"
        assert verdict["samples"] == []

    def test_verdict_on_stdout(self, capsys):
        code = main(
            ["simulate", "--config", _config("transcritical.json"), "--u0", "1", "0", "0", "--t-end", "10"]
        )
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["verdict"]["kind"] == "SteadyState"
        assert report["verdict"]["state"]["X"] == pytest.approx(1.0)
        assert report["t_end"] == 10.0

    def test_dimensional(self, tmp_path):
        out = tmp_path / "dim.csv"
        code = main(
            ["simulate", "--config", _config("transcritical_raw.json"), "--t-end", "1", "--dimensional", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "tau,x,y,z"
        assert float(lines[-1].split(",")[0]) == pytest.approx(2.0)

    def test_dimensional_needs_raw_block(self, tmp_path):
        out = tmp_path / "dim.csv"
        code = main(["simulate", "--config", _config("transcritical.json"), "--dimensional", "--out", str(out)])
        assert code == 2

    def test_integrator_failure(self, monkeypatch, tmp_path):
        monkeypatch.setattr(settings, "max_steps", 3)
        code = main(["simulate", "--config", _config("transcritical.json"), "--out", str(tmp_path / "t.csv")])
        assert code == 4


class TestSweepCommand:
    def test_B_through_threshold(self, capsys):
        code = main(
            ["sweep", "--config", _config("transcritical.json"), "--param", "B", "--lo", "0.3", "--hi", "0.5", "--n", "5"]
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "param,value,feasible,max_re_lambda,a1,a3,hurwitz_margin,f1_stable"
        first, last = lines[1].split(","), lines[-1].split(",")
        assert first[0] == "B" and float(first[1]) == 0.3
        assert first[2] == "false" and first[3] == "" and first[-1] == "true"
        assert last[2] == "true" and last[-1] == "false"

    def test_json_format(self, capsys):
        code = main(
            ["sweep", "--config", _config("example1.json"), "--lo", "0.36", "--hi", "4.81", "--n", "3",
             "--format", "json"]
        )
        assert code == 0
        points = json.loads(capsys.readouterr().out)
        assert [pt["param"] for pt in points] == ["A", "A", "A"]

    def test_missing_range(self):
        assert main(["sweep", "--config", _config("example1.json")]) == 2

    def test_deterministic(self, tmp_path):
        args = ["sweep", "--config", _config("example1.json"), "--lo", "0.36", "--hi", "4.81", "--n", "50"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main([*args, "--out", str(first)]) == 0
        assert main([*args, "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()


class TestHopfCommand:
    def test_example1_default_bracket(self, capsys):
        assert main(["hopf", "--config", _config("example1.json")]) == 0
        point = json.loads(capsys.readouterr().out)
        assert point["kind"] == "Hopf"
        assert point["value"] == pytest.approx(HOPF_A[1], abs=1e-4)

    def test_example3_explicit_bracket(self, capsys):
        code = main(["hopf", "--config", _config("example3.json"), "--lo", "0.355", "--hi", "4.05"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["value"] == pytest.approx(HOPF_A[3], abs=1e-4)

    def test_no_sign_change(self):
        code = main(["hopf", "--config", _config("example1.json"), "--lo", "0.6", "--hi", "0.7"])
        assert code == 5


class TestExitCodes:
    def test_missing_config(self, tmp_path):
        assert main(["equilibria", "--config", str(tmp_path / "missing.json")]) == 2

    def test_both_blocks(self, tmp_path):
        config = _write_config(
            tmp_path,
            {"scaled": {**TRANSCRITICAL, "A": 0.3}, "raw": json.loads((CONFIG_DIR / "transcritical_raw.json").read_text())["raw"]},
        )
        assert main(["equilibria", "--config", config]) == 2

    def test_negative_parameter(self, tmp_path):
        config = _write_config(tmp_path, {"scaled": {**TRANSCRITICAL, "r": -0.6, "A": 0.3}})
        assert main(["equilibria", "--config", config]) == 2

    def test_csv_for_json_only_command(self):
        assert main(["classify", "--config", _config("example1.json"), "--format", "csv"]) == 2

    def test_missing_A(self):
        assert main(["equilibria", "--config", _config("example1.json")]) == 3

    def test_unknown_command(self):
        assert main(["bogus", "--config", _config("transcritical.json")]) == 2

    def test_classifier_needs_invasion(self, tmp_path):
        config = _write_config(tmp_path, {"scaled": {**TRANSCRITICAL, "B": 0.1}})
        assert main(["classify", "--config", config]) == 3
