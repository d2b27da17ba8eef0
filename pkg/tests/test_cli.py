"""Command-line surface: grammar, JSON schema, exit codes, determinism."""

import json

import pytest

from cyclozeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "n=3; e={1:-1,3:1}")
        assert code == 0
        assert "m: [0, 1, 1]" in out
        assert "p: [2, -1, -1]" in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "analyze", "n=3; e={1:-1,3:1}")
        assert code == 0
        doc = json.loads(out)
        assert "analyze" in doc["command"] and doc["status"] == "pass"
        payload = doc["payload"]
        for key in ("n", "e", "mu_e", "m", "p", "mstar", "pstar", "ramanujan_m", "zeta",
                    "m_line", "p_line", "cyclotomic_exponents"):
            assert key in payload, key
        assert payload["m"] == [0, 1, 1]
        assert payload["pstar"] == [-2, 1, 1]
        assert payload["e"] == {"1": -1, "3": 1}

    def test_json_input_mirror(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "analyze", '{"n": 3, "e": {"1": -1, "3": 1}}')
        assert code == 0
        assert json.loads(out)["payload"]["m"] == [0, 1, 1]

    def test_format_flag_after_subcommand(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--format", "json", "n=3; e={1:-1,3:1}")
        assert code == 0
        assert json.loads(out)["payload"]["p"] == [2, -1, -1]

    def test_zero_product(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "n=1; e={1:0}")
        assert code == 0
        assert "mu_e: 0" in out

    def test_parse_error_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "n=3; e={1:-1}")
        assert code == 2 and "divisors" in err
        code, _, err = run_cli(capsys, "analyze", "x=3")
        assert code == 2 and "parse error" in err


class TestDualAndSeries:
    def test_dual(self, capsys):
        code, out, _ = run_cli(capsys, "dual", "n=3; e={1:-1,3:1}")
        assert code == 0
        assert "transform: n=3; e={1:1,3:-1}" in out

    def test_series(self, capsys):
        code, out, _ = run_cli(
            capsys, "--format", "json", "series", "--G", "zeta", "--order", "20", "--which", "m",
            "n=3; e={1:-1,3:1}",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]["m"][:6] == [1, 1, 0, 1, 1, 0]


class TestCatalogCommand:
    def test_get(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "catalog", "get", "E8")
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"]["n"] == 30

    def test_unknown_entry(self, capsys):
        code, _, err = run_cli(capsys, "catalog", "get", "B_2")
        assert code == 2

    def test_list(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "list")
        assert code == 0 and "E_8" in out and "families" in out

    def test_verify_flags_two_entries(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "verify")
        assert code == 0
        assert out.count("flag:") == 2
        assert "status: flagged  flags: 2  failures: 0" in out

    def test_verify_single(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "verify", "X_9")
        assert code == 0 and "FLAGGED" in out


class TestVerifyCommand:
    def test_example_scope(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "example", "--index", "1", "--n", "12", "--trials", "3",
            "--order", "80",
        )
        assert code == 0
        assert "[PASS   ] convolution-examples" in out

    def test_eta_scope_flags_once(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "eta")
        assert code == 0
        assert out.count("flag:") == 1

    def test_prop_scope_index(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "prop", "--index", "1")
        assert code == 0 and "tensor-powers" in out

    def test_deterministic_output(self, capsys):
        args = ("verify", "example", "--index", "11", "--n", "6", "--trials", "2",
                "--order", "60", "--seed", "7")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_json_report_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "--format", "json", "verify", "example", "--index", "2", "--n", "6",
            "--trials", "2", "--order", "60",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["failures"] == 0
        assert doc["examples"][0]["example"] == 2
        assert doc["examples"][0]["first_mismatch"] is None

    def test_bad_scope_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "everything"])
        assert exc.value.code == 2
