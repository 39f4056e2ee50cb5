import json
import subprocess
import sys

import pytest

from grassblow.cli import EXIT_OK, EXIT_PARAMETER, EXIT_UNSUPPORTED, EXIT_VERIFICATION, main, run
from grassblow.report import dumps, parse_rational


def emit(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def json_of(argv, capsys):
    code, out = emit(argv + ["--json"], capsys)
    return code, json.loads(out), out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["lattice", "--s", "5", "--p", "3", "--n", "9"], EXIT_OK),
        (["lattice", "--s", "2", "--p", "3", "--n", "8"], EXIT_OK),
        (["lattice", "--s", "0", "--p", "1", "--n", "2"], EXIT_PARAMETER),
        (["certify", "--s", "5", "--p", "3", "--n", "9"], EXIT_OK),
        (["certify", "--s", "5", "--p", "4", "--n", "8", "--side", "minus", "--j", "2"], EXIT_OK),
        (["certify", "--s", "2", "--p", "1", "--n", "3"], EXIT_UNSUPPORTED),
        (["identities", "--s", "3", "--p", "3", "--n", "6"], EXIT_OK),
        (["identities", "--s", "5", "--p", "3", "--n", "9", "--side", "plus"], EXIT_OK),
        (["identities", "--s", "5", "--p", "3", "--n", "9", "--j", "7"], EXIT_PARAMETER),
        (["identities", "--s", "2", "--p", "2", "--n", "4"], EXIT_UNSUPPORTED),
        (["atlas", "--s", "4", "--p", "3", "--n", "7", "--points", "2"], EXIT_OK),
        (["atlas", "--s", "4", "--p", "3", "--n", "7", "--l", "9"], EXIT_PARAMETER),
        (["atlas", "--s", "4", "--p", "3", "--n", "7", "--points", "0"], EXIT_PARAMETER),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert emit(argv, capsys)[0] == code
    assert json_of(argv, capsys)[0] == code


def test_report_shape_and_rationals(capsys):
    code, d, _ = json_of(["lattice", "--s", "5", "--p", "3", "--n", "9"], capsys)
    assert set(d) == {"header", "body", "findings"}
    assert d["header"]["tool"] == "grassblow"
    assert d["header"]["config"]["seed"] == 2024
    assert d["header"]["config"]["sign_convention"] == "listed"
    h = d["body"]["results"][0]["anticanonical_H"]
    assert h == {"num": "9", "den": "1"}
    assert parse_rational(h) == 9


def test_certify_slack_is_rational(capsys):
    _, d, _ = json_of(["certify", "--s", "5", "--p", "3", "--n", "9", "--side", "minus", "--j", "2"], capsys)
    (entry,) = d["body"]["results"]
    assert entry["lp"]["status"] == "Interior"
    assert parse_rational(entry["lp"]["slack"]) == parse_rational({"num": "1", "den": "2"})
    assert [parse_rational(x) for x in entry["delta"]["deltas"]] == [0.5, 0.5]


def test_parse_emit_parse_round_trip(capsys):
    argv = ["certify", "--s", "5", "--p", "4", "--n", "8", "--json"]
    report, _ = run(argv)
    first = json.loads(dumps(report))
    again = json.loads(json.dumps(first, sort_keys=True, indent=2))
    assert first == again
    assert json.dumps(first, sort_keys=True, indent=2) == dumps(report)


def test_identity_findings_carry_readings(capsys):
    code, d, _ = json_of(["identities", "--s", "5", "--p", "3", "--n", "9"], capsys)
    assert code == EXIT_OK
    assert len(d["findings"]) == 4
    for f in d["findings"]:
        assert f["expected"] and f["corrected_vanishes"] and f["reading"]
        assert set(f) == {"id", "triple", "residual", "expected", "corrected_vanishes", "reading"}


def test_json_is_deterministic(capsys):
    argv = ["atlas", "--s", "4", "--p", "3", "--n", "7", "--points", "3", "--seed", "5"]
    _, _, a = json_of(argv, capsys)
    _, _, b = json_of(argv, capsys)
    assert a == b


def test_seed_precedence(monkeypatch, capsys):
    argv = ["lattice", "--s", "5", "--p", "3", "--n", "9"]
    monkeypatch.setenv("GRASSBLOW_SEED", "77")
    assert json_of(argv, capsys)[1]["header"]["config"]["seed"] == 77
    assert json_of(argv + ["--seed", "3"], capsys)[1]["header"]["config"]["seed"] == 3
    monkeypatch.setenv("GRASSBLOW_SEED", "x")
    assert json_of(argv, capsys)[0] == EXIT_PARAMETER


def test_sign_convention_echoed_and_irrelevant_to_results(capsys):
    argv = ["atlas", "--s", "4", "--p", "3", "--n", "7", "--points", "2"]
    _, a, _ = json_of(argv + ["--sign", "ascending"], capsys)
    _, b, _ = json_of(argv, capsys)
    assert a["header"]["config"]["sign_convention"] == "ascending"
    assert a["body"] == b["body"]


def test_human_output(capsys):
    code, out = emit(["certify", "--s", "5", "--p", "3", "--n", "9"], capsys)
    assert code == EXIT_OK and "6/6 interior" in out
    code, out = emit(["lattice", "--s", "2", "--p", "3", "--n", "8"], capsys)
    assert "normalization" in out


def test_unknown_subcommand_is_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grassblow", "lattice", "--s", "5", "--p", "3", "--n", "9", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["body"]["results"][0]["r"] == 3


def test_exit_code_four_for_unexpected_finding(monkeypatch, capsys):
    import grassblow.cli as cli

    monkeypatch.setattr(cli, "expected_discrepancy", lambda *a: None)
    code, d, _ = json_of(["identities", "--s", "3", "--p", "3", "--n", "6"], capsys)
    assert code == EXIT_VERIFICATION
    assert d["findings"] and not d["findings"][0]["expected"]


def test_identity_sweep_aggregates_fixture_findings(capsys):
    code, d, _ = json_of(["identities", "--max-n", "12"], capsys)
    assert code == EXIT_OK
    assert d["body"]["triples"] == 44
    assert len(d["findings"]) == 94
    assert all(f["expected"] and f["corrected_vanishes"] for f in d["findings"])
