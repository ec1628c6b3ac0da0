"""CLI contract: output shapes, exit codes, JSON determinism."""

import json

import pytest

from ppialg import cli
from ppialg.cli import main
import ppialg.verify as verify_mod
from ppialg.verify import CheckResult, SuiteOptions, VerifyReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce_plain(capsys):
    code, out, _ = run(capsys, "reduce", "v* v^2 v*^3")
    assert code == 0
    assert out.splitlines()[0] == "v v*^3"


def test_reduce_irreducible_triple(capsys):
    code, out, _ = run(capsys, "reduce", "v^2 v*^3 v")
    assert code == 0
    assert out.splitlines()[0] == "v^2 v*^3 v"


def test_reduce_with_jordan_json(capsys):
    code, out, _ = run(capsys, "reduce", "v v* v", "--jordan", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["normal_form"] == "v"
    assert payload["jordan"]["3"]["entries"] == [["0", "0", "0"],
                                                 ["1", "0", "0"],
                                                 ["0", "1", "0"]]


def test_json_output_round_trips_byte_identical(capsys):
    code, out, _ = run(capsys, "reduce", "v^2 v*^3 v", "--json")
    assert code == 0
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"
    code, out, _ = run(capsys, "detect-nv", "--jordan", "5", "--json")
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "reduce", "v^2 w")
    assert code == 2
    assert "parse error" in err


def test_eval_jordan(capsys):
    code, out, _ = run(capsys, "eval", "p", "--jordan", "4", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["matrix"]["entries"][3][3] == "1"
    assert payload["zero_in_representation"] is False


def test_eval_pair(capsys):
    code, out, _ = run(capsys, "eval", "p", "--pair", "--window", "8", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["matrix"]["fwd"]["entries"][0][0] == "0"
    assert payload["matrix"]["bwd"]["entries"][0][0] == "1"


def test_eval_expression_error(capsys):
    code, _, err = run(capsys, "eval", "pi[bad", "--jordan", "3")
    assert code == 2
    assert "parse error" in err


def test_detect_nv_text(capsys):
    code, out, _ = run(capsys, "detect-nv", "--jordan", "5")
    assert code == 0
    assert out.strip() == "jordan:5: {4}"
    code, out, _ = run(capsys, "detect-nv", "--pair", "--nmax", "6")
    assert out.strip() == "pair:32: {}"
    code, out, _ = run(capsys, "detect-nv", "--jordan", "1")
    assert out.strip() == "jordan:1: {}"


def test_decompose_examples(capsys):
    code, out, _ = run(capsys, "decompose", "v v*", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["symbol"] == {"0": [1.0, 0.0]}
    assert payload["K"] == [[[-1.0, 0.0]]]
    assert payload["L"] == []
    assert all(item["frobenius"] == 0.0 for item in payload["residuals"])

    code, out, _ = run(capsys, "decompose", "v* v", "--json")
    payload = json.loads(out)
    assert payload["K"] == [] and payload["L"] == [[[-1.0, 0.0]]]

    code, out, _ = run(capsys, "decompose", "v + v*", "--json")
    payload = json.loads(out)
    assert sorted(payload["symbol"]) == ["-1", "1"]
    assert payload["K"] == [] and payload["L"] == []


def test_verify_suite_runs(capsys):
    code, out, _ = run(capsys, "verify", "central", "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert {c["claim"] for c in payload["checks"]} == {
        "block-identity-central",
        "block-identity-selfadjoint",
        "block-identity-idempotent",
    }


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "no-such-suite"])
    assert err.value.code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    def doomed(opts):
        return [("always-fails", "1 = 0", {}, lambda: (False, {"why": "by design"}))]

    monkeypatch.setitem(verify_mod.SUITES, "doomed", doomed)
    code, out, _ = run(capsys, "verify", "doomed")
    assert code == 1
    assert "FAIL always-fails" in out


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "bench.cfg"
    cfg.write_text("# suite bounds\nn = 2\nworkers = 1\n")
    code, out, _ = run(capsys, "verify", "central", "--config", str(cfg), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["config"]["n"] == 2
    assert payload["config"]["workers"] == 1


def test_config_value_parsing(tmp_path):
    cfg = tmp_path / "x.cfg"
    cfg.write_text("a = 3\nb = 1.5\nc = true\nd = hello\n")
    parsed = cli.load_config(str(cfg))
    assert parsed == {"a": 3, "b": 1.5, "c": True, "d": "hello"}
    bad = tmp_path / "bad.cfg"
    bad.write_text("just nonsense\n")
    with pytest.raises(ValueError):
        cli.load_config(str(bad))


def test_report_json_shape():
    report = VerifyReport(suite="s", config={}, checks=[
        CheckResult("c", "x = x", {}, "pass"),
        CheckResult("d", "y = y", {}, "fail", {"bad": 1}),
    ])
    payload = report.to_json_dict()
    assert payload["passed"] == 1 and payload["failed"] == 1
    assert payload["checks"][1]["witness"] == {"bad": 1}
    assert not report.ok


def test_suite_options_pick():
    opts = SuiteOptions(n=7)
    assert opts.pick(opts.n, 3) == 7
    assert opts.pick(opts.m, 3) == 3
