"""Command-line interface: formats, exit codes, and round-tripping."""

import json
from fractions import Fraction

import pytest

from ramasym.cli import main
from ramasym.coefficients import gamma_coeff, rho
from ramasym.numcore import parse_rational
from ramasym.oracle import oracle_T
from ramasym.polys import PolyV


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCoeff:
    def test_rho_value_plain(self, capsys):
        code, out, _ = run(capsys, "coeff", "rho", "--r", "4", "--v", "0",
                           "--format", "plain")
        assert code == 0 and out == "8992/12629925\n"

    def test_rho_value_json(self, capsys):
        code, out, _ = run(capsys, "coeff", "rho", "--r", "4", "--v", "0")
        assert code == 0 and json.loads(out) == "8992/12629925"

    def test_u_symbolic(self, capsys):
        code, out, _ = run(capsys, "coeff", "U", "--r", "0", "--symbolic",
                           "--format", "plain")
        assert code == 0 and out == "1/(1-w)\n"

    def test_psi_at_zero(self, capsys):
        code, out, _ = run(capsys, "coeff", "psi", "--r", "0", "--v", "0",
                           "--format", "plain")
        assert code == 0 and out == "-1/3\n"

    def test_symbolic_default_when_no_point_given(self, capsys):
        code, out, _ = run(capsys, "coeff", "rho", "--r", "0",
                           "--format", "plain")
        assert code == 0 and out == "1/3 - v\n"

    def test_u_tilde_mode(self, capsys):
        code, out, _ = run(capsys, "coeff", "U", "--r", "1", "--mode",
                           "tilde", "--format", "plain")
        assert code == 0 and "1/(1-w)^2" in out

    def test_u_evaluated_at_gaussian_point(self, capsys):
        code, out, _ = run(capsys, "coeff", "U", "--r", "1", "--w", "1/2",
                           "--v", "2", "--format", "plain")
        assert code == 0 and out == "-8\n"

    def test_upto_round_trips(self, capsys):
        code, out, _ = run(capsys, "coeff", "gamma", "--upto", "3")
        records = json.loads(out)
        assert code == 0 and [rec["r"] for rec in records] == [0, 1, 2, 3]
        for rec in records:
            poly = PolyV([parse_rational(c) for c in rec["polyV"]])
            assert poly == gamma_coeff(rec["r"])

    def test_beta_carries_sqrt2_tag(self, capsys):
        code, out, _ = run(capsys, "coeff", "beta", "--r", "2",
                           "--format", "plain")
        assert code == 0 and out.startswith("sqrt2^1 * (")

    def test_negative_rational_v(self, capsys):
        code, out, _ = run(capsys, "coeff", "rho", "--r", "0", "--v", "-1/2",
                           "--format", "plain")
        assert code == 0 and parse_rational(out.strip()) \
            == rho(0)(Fraction(-1, 2))

    def test_invalid_r_exits_one(self, capsys):
        code, _, err = run(capsys, "coeff", "rho", "--r", "-2")
        assert code == 1 and "error:" in err


class TestEval:
    def test_theta_payload(self, capsys):
        code, out, _ = run(capsys, "eval", "theta", "--n", "50",
                           "--terms", "3", "--digits", "25")
        data = json.loads(out)
        assert code == 0
        assert data["target"] == "theta" and data["n"] == 50
        assert data["terms"] == 3 and len(data["perTerm"]) == 3
        assert data["errorOrder"] == "O(n^(-3))"
        assert data["regime"] == "One"
        assert data["value"].startswith("0.333")

    def test_s_regime_and_value(self, capsys):
        code, out, _ = run(capsys, "eval", "S", "--n", "40", "--w", "1/2",
                           "--digits", "20")
        data = json.loads(out)
        assert code == 0 and data["regime"] == "Y" and data["w"] == "1/2"

    def test_s_needs_w(self, capsys):
        code, _, err = run(capsys, "eval", "S", "--n", "40")
        assert code == 1 and "needs --w" in err

    def test_t_at_zero_reports_domain_error(self, capsys):
        code, _, err = run(capsys, "eval", "T", "--n", "10", "--w", "0")
        assert code == 1 and "undefined" in err

    def test_plain_prints_bare_value(self, capsys):
        code, out, _ = run(capsys, "eval", "gamma", "--n", "30",
                           "--terms", "2", "--format", "plain",
                           "--digits", "15")
        assert code == 0
        assert float(out.strip()) == pytest.approx(2.6525286e32, rel=1e-5)


class TestOracleCommand:
    def test_theta_payload(self, capsys):
        code, out, _ = run(capsys, "oracle", "theta", "--n", "100",
                           "--digits", "30")
        data = json.loads(out)
        assert code == 0 and data["digits"] == 30
        assert data["value"].startswith("0.3336293455")

    def test_t_is_exact(self, capsys):
        code, out, _ = run(capsys, "oracle", "T", "--n", "5", "--w", "1/2",
                           "--format", "plain")
        assert code == 0
        assert parse_rational(out.strip()) == oracle_T(5, Fraction(1, 2), 0)

    def test_factorial(self, capsys):
        code, out, _ = run(capsys, "oracle", "factorial", "--n", "6",
                           "--v", "1", "--format", "plain")
        assert code == 0 and out == "5040\n"

    def test_ei(self, capsys):
        code, out, _ = run(capsys, "oracle", "Ei", "--n", "10",
                           "--digits", "20", "--format", "plain")
        assert code == 0 and out.startswith("2492.228976")


class TestClassifyCommand:
    def test_real_point_right_of_curve(self, capsys):
        code, out, _ = run(capsys, "classify", "--w", "2", "--format",
                           "plain")
        assert code == 0 and out == "Z\n"

    def test_json_is_quoted(self, capsys):
        code, out, _ = run(capsys, "classify", "--w", "2")
        assert code == 0 and json.loads(out) == "Z"

    def test_negative_gaussian_point(self, capsys):
        code, out, _ = run(capsys, "classify", "--w", "-1/2-1/3i",
                           "--format", "plain")
        assert code == 0 and out == "X\n"

    def test_custom_epsilon(self, capsys):
        code, out, _ = run(capsys, "classify", "--w", "10000000001/10000000000",
                           "--epsilon", "1/1000000", "--format", "plain")
        assert code == 0 and out == "One\n"


class TestSzegoCommand:
    def test_csv_default(self, capsys):
        code, out, _ = run(capsys, "szego", "--t-min", "0", "--t-max",
                           "1/10", "--step", "1/20", "--digits", "20")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "t,re,im,residual"
        assert len(lines) == 4
        first = lines[1].split(",")
        assert first[0].startswith("0.0")

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "szego", "--t-min", "1/2", "--t-max",
                           "1/2", "--step", "1", "--format", "json",
                           "--digits", "20")
        data = json.loads(out)
        assert code == 0 and len(data) == 1
        assert set(data[0]) == {"t", "re", "im", "residual"}

    def test_negative_t_min(self, capsys):
        code, out, _ = run(capsys, "szego", "--t-min", "-27/100", "--t-max",
                           "-1/4", "--step", "1/100", "--digits", "20")
        assert code == 0 and len(out.strip().splitlines()) == 4

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "szego", "--t-min", "-1/2", "--t-max",
                           "0", "--step", "1/10")
        assert code == 1 and "below the curve domain" in err


class TestVerifyCommand:
    def test_conjecture_plain(self, capsys):
        code, out, _ = run(capsys, "verify", "conjecture", "--max-r", "8")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0].startswith("PASS conjecture-psi-rho-sign-r8")
        assert lines[-1] == "1/1 pass"

    def test_conjecture_json(self, capsys):
        code, out, _ = run(capsys, "verify", "conjecture", "--max-r", "5",
                           "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["passed"] == data["total"] == 1
        assert data["results"][0]["ok"] is True

    def test_identities_sorted_by_item(self, capsys):
        code, out, _ = run(capsys, "verify", "identities", "--max-r", "6")
        lines = out.strip().splitlines()
        assert code == 0
        items = [ln.split()[1].rstrip(":") for ln in lines[:-1]]
        assert items == sorted(items)
        assert all(ln.startswith("PASS") for ln in lines[:-1])
        assert lines[-1].endswith("pass")


class TestParsingAndEnvironment:
    def test_usage_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["coeff", "nosuchfamily"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_missing_subcommand_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_env_precision_sets_default_digits(self, capsys, monkeypatch):
        monkeypatch.setenv("RAMA_PRECISION", "8")
        code, out, _ = run(capsys, "oracle", "theta", "--n", "10",
                           "--format", "plain")
        assert code == 0
        mantissa = out.strip().replace("0.", "")
        assert len(mantissa) <= 10

    def test_env_precision_ignored_when_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("RAMA_PRECISION", "banana")
        code, out, _ = run(capsys, "oracle", "theta", "--n", "10",
                           "--format", "plain")
        assert code == 0
        assert len(out.strip()) > 40      # fell back to 50 digits
