import json
from fractions import Fraction

import pytest

import derivpoly.cli as cli
import derivpoly.verify as verify_mod
from derivpoly.special_numbers import parse_table_json_obj


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_cli_error(capsys, *argv):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(list(argv))
    capsys.readouterr()
    return excinfo.value.code


class TestTable:
    def test_eulerian_plain(self, capsys):
        code, out = run_cli(capsys, "table", "eulerian", "--n", "3")
        assert code == 0
        assert out.splitlines() == ["1", "1 1", "1 4 1"]

    def test_macmahon_plain(self, capsys):
        code, out = run_cli(capsys, "table", "macmahon", "--n", "4")
        assert code == 0
        assert out.splitlines()[-1] == "1 23 23 1"

    def test_bernoulli_plain(self, capsys):
        code, out = run_cli(capsys, "table", "bernoulli", "--n", "4")
        assert code == 0
        assert out.splitlines() == ["1", "-1/2", "1/6", "0", "-1/30"]

    def test_json_round_trip(self, capsys):
        code, out = run_cli(capsys, "table", "eulerian", "--n", "5",
                            "--format", "json")
        assert code == 0
        kind, rows = parse_table_json_obj(json.loads(out))
        assert kind == "eulerian"
        assert rows[4] == ["1", "26", "66", "26", "1"]

    def test_csv(self, capsys):
        code, out = run_cli(capsys, "table", "macmahon", "--n", "3",
                            "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["1", "1,1", "1,6,1"]

    def test_usage_errors(self, capsys):
        assert run_cli_error(capsys, "table", "eulerian", "--n", "0") == 2
        assert run_cli_error(capsys, "table", "fibonacci", "--n", "3") == 2
        assert run_cli_error(capsys, "table", "eulerian") == 2


class TestPoly:
    def test_p_family(self, capsys):
        code, out = run_cli(capsys, "poly", "P", "--n", "2", "--a", "0",
                            "--b", "1")
        assert code == 0
        assert out.strip() == "0 -1 1"

    def test_q_family_json(self, capsys):
        code, out = run_cli(capsys, "poly", "Q", "--n", "2", "--a", "0",
                            "--b", "1", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["coefficients"] == ["1", "-8", "8"]
        assert obj["params"]["a"] == "0"

    def test_json_round_trip(self, capsys):
        from derivpoly.derivative_polys import family_poly
        from derivpoly.polyseries import Poly

        code, out = run_cli(capsys, "poly", "S", "--n", "3", "--a", "0",
                            "--b", "1", "--d", "1/3", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        parsed = Poly.from_coeff_strings(obj["coefficients"])
        assert parsed == family_poly("S", 3, a=Fraction(0), b=Fraction(1),
                                     d=Fraction(1, 3))

    def test_e_family(self, capsys):
        code, out = run_cli(capsys, "poly", "E", "--n", "3")
        assert code == 0
        assert out.strip() == "0 1 4 1"

    def test_s_family_negative_shift(self, capsys):
        code, out = run_cli(capsys, "poly", "S", "--n", "1", "--a", "0",
                            "--b", "1", "--d", "-1/2")
        assert code == 0
        assert out.strip() == "-2 2"

    def test_usage_errors(self, capsys):
        assert run_cli_error(capsys, "poly", "P", "--n", "2", "--a", "1",
                             "--b", "1") == 2
        assert run_cli_error(capsys, "poly", "P", "--n", "2", "--a", "0") == 2
        assert run_cli_error(capsys, "poly", "S", "--n", "1", "--a", "0",
                             "--b", "1") == 2
        assert run_cli_error(capsys, "poly", "Z", "--n", "1") == 2
        assert run_cli_error(capsys, "poly", "P", "--n", "0", "--a", "0",
                             "--b", "1") == 2


class TestSeries:
    def test_fixed_point(self, capsys):
        code, out = run_cli(capsys, "series", "riccati", "--r", "1", "--a", "0",
                            "--b", "1", "--u0", "0", "--order", "5")
        assert code == 0
        assert out.strip() == "0 0 0 0 0 0"

    def test_midpoint(self, capsys):
        code, out = run_cli(capsys, "series", "riccati", "--r", "1", "--a", "0",
                            "--b", "1", "--u0", "1/2", "--order", "2")
        assert code == 0
        assert out.strip() == "1/2 -1/4 0"

    def test_logistic_mapping_matches_direct_form(self, capsys):
        code, logistic = run_cli(capsys, "series", "riccati", "--q", "2",
                                 "--p", "3", "--s", "1", "--order", "8")
        assert code == 0
        code, direct = run_cli(capsys, "series", "riccati", "--r", "-1/2",
                               "--a", "2", "--b", "0", "--u0", "1/2",
                               "--order", "8")
        assert code == 0
        assert logistic == direct

    def test_v_series_json(self, capsys):
        code, out = run_cli(capsys, "series", "v", "--r", "1", "--a", "0",
                            "--b", "1", "--u0", "1/3", "--order", "3",
                            "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["order"] == 3
        assert obj["coefficients"][0] == "1"
        assert obj["coefficients"][1] == "-1/6"

    def test_usage_errors(self, capsys):
        assert run_cli_error(capsys, "series", "riccati", "--r", "1", "--a",
                             "0", "--b", "1", "--u0", "0", "--order", "0") == 2
        assert run_cli_error(capsys, "series", "riccati", "--r", "0", "--a",
                             "0", "--b", "1", "--u0", "0", "--order", "3") == 2
        assert run_cli_error(capsys, "series", "riccati", "--order", "3") == 2
        assert run_cli_error(capsys, "series", "riccati", "--q", "2", "--p",
                             "3", "--order", "3") == 2
        assert run_cli_error(capsys, "series", "riccati", "--q", "2", "--p",
                             "3", "--s", "1", "--r", "1", "--order", "3") == 2
        assert run_cli_error(capsys, "series", "riccati", "--q", "-2", "--p",
                             "3", "--s", "1", "--order", "3") == 2
        assert run_cli_error(capsys, "series", "riccati", "--r", "1", "--a",
                             "0", "--b", "1", "--u0", "0", "--v0", "0",
                             "--order", "3") == 2

    def test_decimal_input_rejected(self, capsys):
        assert run_cli_error(capsys, "series", "riccati", "--r", "0.5", "--a",
                             "0", "--b", "1", "--u0", "0", "--order", "3") == 2


class TestVerify:
    def test_small_suite_passes(self, capsys):
        code, out = run_cli(capsys, "verify", "lemma1", "--n-max", "4")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4
        assert all(line.startswith("PASS lemma1") for line in lines)

    def test_integral_suite_verdict_count(self, capsys):
        code, out = run_cli(capsys, "verify", "integrals", "--n-max", "12",
                            "--a", "0", "--b", "1")
        assert code == 0
        assert len(out.splitlines()) == 37

    def test_json_lines_schema(self, capsys):
        code, out = run_cli(capsys, "verify", "egf", "--format", "json")
        assert code == 0
        for line in out.splitlines():
            obj = json.loads(line)
            assert obj["pass"] is True
            assert set(obj) == {"identity", "params", "pass", "first_failure",
                                "witness"}

    def test_csv_output(self, capsys):
        code, out = run_cli(capsys, "verify", "lemma1", "--n-max", "2",
                            "--format", "csv")
        assert code == 0
        rows = out.splitlines()
        assert len(rows) == 2
        assert rows[0].startswith("lemma1,")

    def test_deterministic_output(self, capsys):
        _, first = run_cli(capsys, "verify", "egf")
        _, second = run_cli(capsys, "verify", "egf")
        assert first == second

    def test_failure_exit_code(self, capsys, monkeypatch):
        failing = verify_mod.Verdict("demo", {"n": 1}, False, 1,
                                     {"lhs": "0", "rhs": "1"})
        monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [failing])
        code, out = run_cli(capsys, "verify", "lemma1")
        assert code == 1
        assert out.startswith("FAIL demo")
        assert "lhs=0" in out

    def test_usage_errors(self, capsys):
        assert run_cli_error(capsys, "verify", "everything") == 2
        assert run_cli_error(capsys, "verify", "lemma1", "--n-max", "0") == 2
        assert run_cli_error(capsys, "verify", "integrals", "--a", "0") == 2
        assert run_cli_error(capsys, "verify", "integrals", "--a", "1",
                             "--b", "1") == 2
        assert run_cli_error(capsys, "verify", "grosset-veselov", "--tol",
                             "0") == 2

    def test_unknown_flag_rejected(self, capsys):
        assert run_cli_error(capsys, "verify", "lemma1", "--frobnicate") == 2

    def test_missing_subcommand_rejected(self, capsys):
        assert run_cli_error(capsys) == 2
