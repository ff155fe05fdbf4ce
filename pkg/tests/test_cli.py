import json

import pytest

from pyqglass.cli import EXIT_CERTIFICATION, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, build_parser, config_from_args, main
from pyqglass.session import load_manifest


def test_flags_map_onto_config_fields():
    args = build_parser().parse_args(["hopfield", "--n", "40", "--p", "2", "--samples", "12", "--out", "x.csv"])
    config = config_from_args(args)
    assert config.command.data == "hopfield"
    assert config.n_spins.data == 40
    assert config.patterns.data == 2
    assert config.n_samples.data == 12
    assert config.output.data == "x.csv"
    assert config.seed.data == 0


def test_ball_writes_data_and_manifest(tmp_path):
    target = tmp_path / "ball.csv"
    assert main(["ball", "--d", "6", "--out", str(target)]) == EXIT_OK
    header, row = target.read_text(encoding="utf-8").splitlines()
    assert header == "d,R,volume,e_d"
    assert float(row.split(",")[-1]) == pytest.approx(0.01786, abs=5e-6)
    assert load_manifest(target)["config"]["d"] == 6


def test_stdout_mode(capsys):
    assert main(["ball", "--d", "4", "--radius", "0.2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("d,R,volume,e_d\n4,0.20000000000000001,")


def test_ea_small_run(tmp_path):
    target = tmp_path / "ea.csv"
    code = main(["ea", "--geometry", "chain", "--samples", "200", "--t-max", "5", "--steps", "6", "--out", str(target)])
    assert code == EXIT_OK
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,mean_ln,std_ln,sem_ln"
    assert len(lines) == 7
    assert load_manifest(target)["summary"]["geometry"] == "chain_1d"


def test_json_format(capsys):
    assert main(["lro", "--n", "20", "--t-max", "10", "--steps", "11", "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["columns"] == ["t", "mean_ln", "std_ln", "sem_ln"]
    assert len(payload["records"]) == 11


def test_usage_errors(capsys):
    assert main(["ball", "--bogus"]) == EXIT_USAGE
    assert main(["anneal"]) == EXIT_USAGE
    assert main(["ea", "--steps", "0"]) == EXIT_USAGE
    assert "config: steps" in capsys.readouterr().err
    assert main(["gate", "--j-mean", "0", "--j-var", "0"]) == EXIT_USAGE


def test_unwritable_output_is_a_runtime_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    assert main(["ball", "--out", str(blocker / "sub" / "ball.csv")]) == EXIT_RUNTIME


def test_verify_detects_tampering(tmp_path, capsys):
    target = tmp_path / "ball.csv"
    main(["ball", "--out", str(target)])
    assert main(["verify", str(target)]) == EXIT_OK
    assert "manifest consistent" in capsys.readouterr().out
    target.write_text(target.read_text(encoding="utf-8") + "extra\n", encoding="utf-8")
    assert main(["verify", str(target)]) == EXIT_CERTIFICATION
    assert "checksum" in capsys.readouterr().err


def test_oracle_check_passes(tmp_path):
    target = tmp_path / "oracle.csv"
    assert main(["oracle-check", "--out", str(target)]) == EXIT_OK
    assert load_manifest(target)["summary"]["passed"] is True
