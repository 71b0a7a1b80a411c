import json
import os

import pytest

from alphafrac.cli import main

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

SECT4_INPUT = {
    "A": ["-6", "1"],
    "B": ["7/2", "-3/2"],
    "C": ["-2", "4", "-1"],
    "alpha": ["1", "3", "4"],
}

SECT4_EXPANSION = {
    "b0": "1",
    "block": ["-3", "1", "3"],
    "alpha": ["1", "3", "4"],
}


def run(capsys, args, payload=None, monkeypatch=None, stdin_text=None):
    """Run the CLI in-process; returns (exit_code, stdout_obj, stderr_text)."""
    if payload is not None:
        stdin_text = json.dumps(payload)
    if stdin_text is not None:
        import io
        import sys
        real_stdin = sys.stdin
        sys.stdin = io.StringIO(stdin_text)
        try:
            code = main(args)
        finally:
            sys.stdin = real_stdin
    else:
        code = main(args)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out else None
    return code, out, captured.err


class TestExpandCommand:
    def test_sect4(self, capsys):
        code, out, _ = run(capsys, ["expand"], SECT4_INPUT)
        assert code == 0
        assert out == [
            SECT4_EXPANSION,
            {"b0": "-1/5", "block": ["-5/2", "6/5", "3/10"],
             "alpha": ["1", "3", "4"]},
        ]

    def test_file_io(self, capsys, tmp_path):
        inp = tmp_path / "in.json"
        outp = tmp_path / "out.json"
        inp.write_text(json.dumps(SECT4_INPUT))
        code = main(["expand", "--input", str(inp), "--output", str(outp)])
        assert code == 0
        assert json.loads(outp.read_text())[0] == SECT4_EXPANSION

    def test_domain_error(self, capsys):
        bad = dict(SECT4_INPUT, alpha=["1", "2", "5"])
        code, out, err = run(capsys, ["expand"], bad)
        assert code == 1
        assert out is None
        assert json.loads(err)["error"] == "NotAdmissible"

    def test_malformed_json(self, capsys):
        code, out, err = run(capsys, ["expand"], stdin_text="{nope")
        assert code == 2
        assert json.loads(err)["error"] == "MalformedInput"

    def test_missing_key(self, capsys):
        code, _, err = run(capsys, ["expand"], {"A": ["1"]})
        assert code == 2
        assert json.loads(err)["error"] == "MalformedInput"


class TestTriplePipeline:
    def test_triple_then_expand_round_trips(self, capsys):
        code, triple_out, _ = run(capsys, ["triple"], SECT4_EXPANSION)
        assert code == 0
        assert triple_out["A"] == ["-6", "1"]
        assert triple_out["T"] == ["-7/2", "1/2"]
        code, expansions, _ = run(capsys, ["expand"], triple_out)
        assert code == 0
        assert SECT4_EXPANSION in expansions


class TestOtherCommands:
    def test_admissible(self, capsys):
        payload = {"R": ["1/4", "31/2", "-31/4", "1"],
                   "alpha": ["1", "3", "4"]}
        code, out, _ = run(capsys, ["admissible"], payload)
        assert code == 0
        assert out == {"S": ["-7/2", "1/2"]}

    def test_act(self, capsys):
        code, out, _ = run(
            capsys, ["act", "--word", '["sigma:2"]'], SECT4_EXPANSION)
        assert code == 0
        assert out == {"b0": "1", "block": ["-2", "1", "2"],
                       "alpha": ["1", "4", "3"]}

    def test_act_bad_word(self, capsys):
        code, _, err = run(
            capsys, ["act", "--word", '["sigma:9"]'], SECT4_EXPANSION)
        assert code == 2
        assert json.loads(err)["error"] == "MalformedInput"

    def test_orbit(self, capsys):
        code, out, _ = run(capsys, ["orbit"], SECT4_EXPANSION)
        assert code == 0
        assert len(out["expansions"]) == 12
        assert out["complete"] is True

    def test_orbit_pure_rejects_non_pure(self, capsys):
        code, _, err = run(capsys, ["orbit", "--pure"], SECT4_EXPANSION)
        assert code == 1
        assert json.loads(err)["error"] == "NotPure"

    def test_pure_expand(self, capsys):
        payload = {"A": ["0", "1"], "B": ["-1", "-1/2"],
                   "C": ["2", "1", "-1"], "alpha": ["0", "1", "2"]}
        code, out, _ = run(capsys, ["pure-expand"], payload)
        assert code == 0
        assert out == {"b0": "1", "block": ["1", "1", "1"],
                       "alpha": ["0", "1", "2"]}

    def test_jacobi_round_trip(self, capsys):
        triple = {k: SECT4_INPUT[k] for k in ("A", "B", "C")}
        code, jac, _ = run(capsys, ["triple-to-jacobi"], triple)
        assert code == 0
        assert jac["beta"] == "-3/2"
        assert jac["U"] == ["-6", "1"]
        code, back, _ = run(capsys, ["jacobi-to-triple"], jac)
        assert code == 0
        assert back == triple

    def test_divisor_round_trip(self, capsys):
        divisor = {
            "points": [{"lambda": "6", "mu": "-11/2"}],
            "R": ["1/4", "31/2", "-31/4", "1"],
        }
        code, jac, _ = run(capsys, ["divisor-to-jacobi"], divisor)
        assert code == 0
        assert jac["V"] == ["-11/2"]
        code, back, _ = run(capsys, ["jacobi-to-divisor"], jac)
        assert code == 0
        assert back == divisor

    def test_pure_beta(self, capsys):
        payload = {
            "U": ["-6", "1"], "V": ["-11/2"], "W": ["5", "-7/4", "1"],
            "R": ["1/4", "31/2", "-31/4", "1"], "alpha_n": "4",
        }
        code, out, _ = run(capsys, ["pure-beta"], payload)
        assert code == 0
        assert out == {"betas": ["-2", "-7/2"]}

    def test_verify(self, capsys):
        payload = {
            "expansion": SECT4_EXPANSION,
            "triple": {k: SECT4_INPUT[k] for k in ("A", "B", "C")},
        }
        code, out, _ = run(capsys, ["verify"], payload)
        assert code == 0
        assert out["pass"] is True

    def test_residual(self, capsys):
        triple = {k: SECT4_INPUT[k] for k in ("A", "B", "C")}
        for branch in ("+", "-"):
            code, out, _ = run(
                capsys,
                ["residual", "--lambda", "0", "--branch", branch],
                triple)
            assert code == 0
            assert out["residual"] <= 1e-9

    def test_residual_pole(self, capsys):
        triple = {k: SECT4_INPUT[k] for k in ("A", "B", "C")}
        code, _, err = run(capsys, ["residual", "--lambda", "6"], triple)
        assert code == 1
        assert json.loads(err)["error"] == "PoleAtLambda"


class TestExampleCommand:
    def test_unknown_example(self, capsys):
        code, _, err = run(capsys, ["example", "--name", "nope"])
        assert code == 1
        assert json.loads(err)["error"] == "UnknownExample"

    def test_sect4_matches_golden_bytes(self, capsys):
        code = main(["example", "--name", "sect4"])
        assert code == 0
        captured = capsys.readouterr()
        with open(os.path.join(GOLDEN_DIR, "sect4.json"),
                  encoding="utf-8") as fh:
            assert captured.out == fh.read()

    def test_n1_pure(self, capsys):
        code, out, _ = run(capsys, ["example", "--name", "n1-pure"])
        assert code == 0
        assert out["expansion"] == {"b0": "-2", "block": ["-2"],
                                    "alpha": ["0"]}

    def test_pure_n3(self, capsys):
        code, out, _ = run(capsys, ["example", "--name", "pure-n3"])
        assert code == 0
        assert out["expansion"] == {"b0": "1", "block": ["1", "1", "1"],
                                    "alpha": ["0", "1", "2"]}

    def test_n1_periodic(self, capsys):
        code, out, _ = run(capsys, ["example", "--name", "n1-periodic"])
        assert code == 0
        assert out["expansions"] == [
            {"b0": "2", "block": ["4"], "alpha": ["1"]},
            {"b0": "-2", "block": ["-4"], "alpha": ["1"]},
        ]

    def test_every_example_parses(self, capsys):
        from alphafrac.datasets import EXAMPLE_NAMES
        for name in EXAMPLE_NAMES:
            code, out, _ = run(capsys, ["example", "--name", name])
            assert code == 0
            assert out["name"] == name
