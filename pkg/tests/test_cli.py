"""Command-line interface: exit codes, payloads, and JSON stability."""

import json

import pytest

from knotpoly.cli import main


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr()


def run_json(capsys, *args):
    code, captured = run(capsys, *args, "--json")
    return code, json.loads(captured.out), captured.out


# -- exit codes ------------------------------------------------------------

def test_twobridge_passes(capsys):
    code, captured = run(capsys, "twobridge", "--p", "7", "--m", "3")
    assert code == 0
    assert "0 failing" in captured.out


def test_pretzel_honest_failure(capsys):
    # n = 7 has a repeated slice factor, so its distinctness report fails
    code, captured = run(capsys, "pretzel", "--n", "7")
    assert code == 1
    assert "1 failing" in captured.out


def test_invalid_bridge_parameters(capsys):
    code, captured = run(capsys, "twobridge", "--p", "6", "--m", "1")
    assert code == 2
    assert "error:" in captured.err


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_missing_required_flag(capsys):
    assert run(capsys, "pretzel")[0] == 2


def test_verify_qtorus_suite(capsys):
    code, captured = run(capsys, "verify", "--suite", "qtorus")
    assert code == 0
    assert "0 failing" in captured.out


def test_verify_pretzel_suite_small_window(capsys):
    code, captured = run(capsys, "verify", "--suite", "pretzel",
                         "--n-range", "-2", "2")
    assert code == 0


# -- payloads --------------------------------------------------------------

def test_trace_plain_output(capsys):
    code, captured = run(capsys, "trace", "--word", "a b^-1")
    assert code == 0
    assert captured.out.strip() == "x*y - z"


def test_trace_json_payload(capsys):
    code, doc, _ = run_json(capsys, "trace", "--word", "a b a^-1 b^-1")
    assert code == 0
    assert doc["trace"] == "-x*y*z + x^2 + y^2 + z^2 - 2"
    assert doc["word"] == "a b a^-1 b^-1"


def test_twobridge_json_payload(capsys):
    code, doc, _ = run_json(capsys, "twobridge", "--p", "7", "--m", "3")
    assert code == 0
    assert doc["subject"] == "b(7,3)"
    assert doc["z_degree"] == 3
    assert doc["irreducibility"] == "guaranteed-irreducible-over-C"
    assert set(doc) >= {"phi", "gamma", "reports", "tool_version"}


def test_qtorus_json_payload(capsys):
    code, doc, _ = run_json(capsys, "qtorus", "demo-unknot")
    assert code == 0
    assert doc["alpha"] == "(M^2 - 1)*L + (-t^2*M^2 + t^-2)"
    assert doc["aj_unknot"]["quotient_by_l_minus_1"] == "M^2 - 1"
    assert doc["sigma_factor"]["h"] == "t^2*M^2"
    assert doc["sigma_factor"]["ordering"] == "LdLeft"


def test_pretzel_json_payload(capsys):
    code, doc, _ = run_json(capsys, "pretzel", "--n", "2")
    assert code == 0
    assert doc["subject"] == "pretzel(-2,3,5)"
    assert set(doc["x0"]) == {"a_n", "b_n", "u_n"}
    assert {r["claim_id"] for r in doc["reports"]} >= {
        "closed-vs-traced", "x0-slice", "resultant-structure"}


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert "0.1.0" in capsys.readouterr().out


# -- JSON discipline -------------------------------------------------------

@pytest.mark.parametrize("args", [
    ("trace", "--word", "a b"),
    ("twobridge", "--p", "5", "--m", "3"),
    ("pretzel", "--n", "1"),
    ("qtorus", "demo-unknot"),
])
def test_json_round_trip_is_byte_identical(capsys, args):
    _, doc, raw = run_json(capsys, *args)
    assert raw == json.dumps(doc, indent=2, sort_keys=True) + "\n"


def test_reports_sorted_by_claim_then_subject(capsys):
    _, doc, _ = run_json(capsys, "verify", "--suite", "pretzel",
                         "--n-range", "-2", "2")
    keys = [(r["claim_id"], r["subject"]) for r in doc["reports"]]
    assert keys == sorted(keys)
    assert len(keys) > 10
