"""
Tests for the command-line interface.
"""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from pi_forge import __version__
from pi_forge.cli import EXIT_FALSIFIED, EXIT_OK, EXIT_PRECISION, EXIT_USAGE, main
from pi_forge.models import IdentityId, IdentityReport, SweepResult


def records(result) -> list[dict]:
    """Parse JSON Lines from a CliRunner result."""
    return [json.loads(line) for line in result.stdout.splitlines()]


class TestGroup:
    """Tests for the top-level group."""

    def test_help(self, cli_runner):
        """--help lists the commands."""
        result = cli_runner.invoke(main, ["--help"])

        assert result.exit_code == EXIT_OK
        for command in ("pi", "combine", "identity", "gamma-quotient", "wronskian", "leibniz"):
            assert command in result.stdout

    def test_version(self, cli_runner):
        """--version prints the package version."""
        result = cli_runner.invoke(main, ["--version"])

        assert result.exit_code == EXIT_OK
        assert __version__ in result.stdout

    def test_unknown_option(self, cli_runner):
        """Usage errors exit with 1."""
        result = cli_runner.invoke(main, ["pi", "--bogus"])

        assert result.exit_code == EXIT_USAGE
        assert "No such option" in result.stderr

    def test_config_file(self, cli_runner, tmp_path):
        """--config supplies defaults for the commands."""
        path = tmp_path / "small.toml"
        path.write_text("[sweep]\nm_max = 0\nk_max = 1\n")

        result = cli_runner.invoke(main, ["--config", str(path), "identity", "--id", "iv2"])

        assert result.exit_code == EXIT_OK
        assert len(records(result)) == 2

    def test_schema(self, cli_runner):
        """schema prints the OutputRecord JSON schema."""
        result = cli_runner.invoke(main, ["schema"])

        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout)["title"] == "OutputRecord"


class TestPiCommand:
    """Tests for the pi command."""

    def test_default_series(self, cli_runner):
        """One JSON record with the certified value."""
        result = cli_runner.invoke(
            main, ["pi", "--target-rel-err", "1e-20", "--prec-bits", "128"]
        )

        assert result.exit_code == EXIT_OK
        [record] = records(result)
        assert record["command"] == "pi"
        assert record["parameters"] == {
            "m": "0",
            "k": "2",
            "target_rel_err": "1e-20",
            "prec_bits": "128",
        }
        assert record["results"]["value"].startswith("0.3183098861")
        assert record["results"]["converged"] is True

    def test_other_indices(self, cli_runner):
        """--m and --k select the series."""
        result = cli_runner.invoke(
            main, ["pi", "--m", "2", "--k", "5", "--target-rel-err", "1e-15", "--prec-bits", "96"]
        )

        assert result.exit_code == EXIT_OK
        assert records(result)[0]["results"]["value"].startswith("0.31830988618")

    def test_prec_bits_from_env(self, cli_runner):
        """PI_FORGE_PREC_BITS sets the default precision."""
        result = cli_runner.invoke(
            main, ["pi", "--target-rel-err", "1e-12"], env={"PI_FORGE_PREC_BITS": "96"}
        )

        assert result.exit_code == EXIT_OK
        assert records(result)[0]["parameters"]["prec_bits"] == "96"

    @pytest.mark.parametrize("args", [["--m", "-1"], ["--k", "1"], ["--target-rel-err", "abc"]])
    def test_domain_errors(self, cli_runner, args):
        """Bad indices or targets exit with 1."""
        result = cli_runner.invoke(main, ["pi", *args])

        assert result.exit_code == EXIT_USAGE
        assert result.stdout == ""
        assert "Error" in result.stderr

    def test_precision_floor(self, cli_runner):
        """A target below the precision floor exits with 2."""
        result = cli_runner.invoke(
            main, ["pi", "--target-rel-err", "1e-20", "--prec-bits", "64"]
        )

        assert result.exit_code == EXIT_PRECISION
        assert "prec-bits" in result.stderr

    def test_term_cap(self, cli_runner):
        """Running out of terms exits with 2."""
        result = cli_runner.invoke(
            main,
            ["pi", "--target-rel-err", "1e-20", "--prec-bits", "128", "--max-terms", "10"],
        )

        assert result.exit_code == EXIT_PRECISION
        assert "within 10 terms" in result.stderr


class TestOutputOptions:
    """Tests for --format and --out."""

    def test_csv(self, cli_runner):
        """CSV has a flat header."""
        result = cli_runner.invoke(
            main, ["pi", "--target-rel-err", "1e-12", "--prec-bits", "96", "--format", "csv"]
        )

        assert result.exit_code == EXIT_OK
        lines = result.stdout.splitlines()
        assert len(lines) == 2
        assert lines[0].startswith(
            "command,param_m,param_k,param_target_rel_err,param_prec_bits,value"
        )

    def test_table(self, cli_runner):
        """The table carries the command as its title."""
        result = cli_runner.invoke(
            main, ["leibniz", "--n-max", "20", "--format", "table"]
        )

        assert result.exit_code == EXIT_OK
        assert "leibniz" in result.stdout
        assert "True" in result.stdout

    def test_format_from_env(self, cli_runner):
        """PI_FORGE_OUTPUT_FORMAT changes the default format."""
        result = cli_runner.invoke(
            main,
            ["identity", "--id", "iv2", "--m-max", "0", "--k-max", "2"],
            env={"PI_FORGE_OUTPUT_FORMAT": "csv"},
        )

        assert result.exit_code == EXIT_OK
        assert result.stdout.startswith("command,param_id")

    def test_out_file(self, cli_runner, tmp_path):
        """--out writes the file and reports on stderr only."""
        output_path = tmp_path / "runs" / "iv1.jsonl"
        result = cli_runner.invoke(
            main,
            ["identity", "--id", "iv1", "--m-max", "1", "--k-max", "1", "--out", str(output_path)],
        )

        assert result.exit_code == EXIT_OK
        assert result.stdout == ""
        assert "Wrote" in result.stderr
        lines = output_path.read_text().splitlines()
        assert len(lines) == 4
        assert all(json.loads(line)["results"]["holds"] for line in lines)


class TestCombineCommand:
    """Tests for the combine command."""

    def test_combination(self, cli_runner):
        """Real and imaginary parts are reported."""
        result = cli_runner.invoke(
            main,
            ["combine", "--weights", "2:1,3:1", "--target-rel-err", "1e-12", "--prec-bits", "128"],
        )

        assert result.exit_code == EXIT_OK
        [record] = records(result)
        assert record["parameters"]["weights"] == "2:1,3:1"
        assert record["results"]["value_re"].startswith("0.318309886")
        assert "value_im" in record["results"]

    @pytest.mark.parametrize("weights", ["2:1,3:-1", "x:1", "1:1"])
    def test_bad_weights(self, cli_runner, weights):
        """Zero-sum or malformed weights exit with 1."""
        result = cli_runner.invoke(main, ["combine", "--weights", weights])

        assert result.exit_code == EXIT_USAGE

    def test_weights_required(self, cli_runner):
        """--weights is mandatory."""
        result = cli_runner.invoke(main, ["combine"])

        assert result.exit_code == EXIT_USAGE


class TestIdentityCommand:
    """Tests for the identity command."""

    def test_sweep(self, cli_runner):
        """One record per cell, ordered by (m, k)."""
        result = cli_runner.invoke(
            main, ["identity", "--id", "IV2", "--m-max", "1", "--k-max", "2"]
        )

        assert result.exit_code == EXIT_OK
        rows = records(result)
        assert [(r["results"]["m"], r["results"]["k"]) for r in rows] == [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
        ]
        assert rows[0]["parameters"] == {"id": "IV2", "m_max": "1", "k_max": "2"}
        assert all(r["results"]["holds"] for r in rows)

    def test_iv3_exploratory(self, cli_runner):
        """Failing exploratory cells are reported but do not fail the run."""
        result = cli_runner.invoke(
            main, ["identity", "--id", "iv3", "--m-max", "1", "--k-max", "1", "--exploratory"]
        )

        assert result.exit_code == EXIT_OK
        rows = {(r["results"]["m"], r["results"]["k"]): r["results"] for r in records(result)}
        assert rows[(1, 0)]["normative"] is False
        assert rows[(1, 0)]["lhs"] == "3/2"
        assert rows[(1, 0)]["holds"] is False

    def test_falsified(self, cli_runner, monkeypatch):
        """A failing normative cell exits with 3 and prints the counterexample."""

        def fake_sweep(identity_id, m_max, k_max, *, workers=None, exploratory=False):
            run = SweepResult(identity_id=IdentityId.IV3, m_max=1, k_max=1)
            run.reports.append(
                IdentityReport(identity_id=IdentityId.IV3, m=1, k=1, lhs=Fraction(2))
            )
            run.complete()
            return run

        monkeypatch.setattr("pi_forge.cli.sweep", fake_sweep)
        result = cli_runner.invoke(
            main, ["identity", "--id", "iv3", "--m-max", "1", "--k-max", "1"]
        )

        assert result.exit_code == EXIT_FALSIFIED
        assert len(records(result)) == 1
        assert "Falsified:" in result.stderr
        assert '"lhs":"2"' in result.stderr

    def test_unknown_identity(self, cli_runner):
        """Only iv1, iv2 and iv3 are accepted."""
        result = cli_runner.invoke(main, ["identity", "--id", "iv4"])

        assert result.exit_code == EXIT_USAGE


class TestGammaQuotientCommand:
    """Tests for the gamma-quotient command."""

    def test_single_k(self, cli_runner):
        """--k gives one diagnostics record."""
        result = cli_runner.invoke(
            main,
            ["gamma-quotient", "--nu", "1/4", "--k", "5", "--prec-bits", "128"],
        )

        assert result.exit_code == EXIT_OK
        [record] = records(result)
        assert record["parameters"]["nu"] == "1/4"
        assert record["parameters"]["k"] == "5"
        assert record["results"]["terminating"] is False
        assert float(record["results"]["best_relative_error"]) < 1e-6

    def test_k_range(self, cli_runner):
        """--k-range A:B is inclusive."""
        result = cli_runner.invoke(
            main,
            ["gamma-quotient", "--nu", "1/2", "--k-range", "2:4", "--max-terms", "20"],
        )

        assert result.exit_code == EXIT_OK
        rows = records(result)
        assert [r["parameters"]["k"] for r in rows] == ["2", "3", "4"]
        assert all(r["results"]["terminating"] for r in rows)

    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["--k", "3", "--k-range", "1:2"],
            ["--k-range", "5:2"],
            ["--k-range", "5"],
        ],
    )
    def test_k_selection_errors(self, cli_runner, args):
        """Exactly one of --k and a well-formed --k-range is required."""
        result = cli_runner.invoke(main, ["gamma-quotient", "--nu", "1/4", *args])

        assert result.exit_code == EXIT_USAGE

    @pytest.mark.parametrize("nu", ["-1/2", "-1", "-3/2"])
    def test_excluded_order(self, cli_runner, nu):
        """Excluded orders exit with 1."""
        result = cli_runner.invoke(main, ["gamma-quotient", "--nu", nu, "--k", "3"])

        assert result.exit_code == EXIT_USAGE
        assert result.stdout == ""


class TestWronskianCommand:
    """Tests for the wronskian command."""

    def test_half_integer(self, cli_runner):
        """The deviation stays within the reported bound."""
        result = cli_runner.invoke(
            main, ["wronskian", "--nu", "1/2", "--z", "5", "--prec-bits", "128"]
        )

        assert result.exit_code == EXIT_OK
        [record] = records(result)
        assert record["parameters"] == {"nu": "1/2", "z": "5", "prec_bits": "128"}
        assert record["results"]["within_bound"] is True

    @pytest.mark.parametrize("z", ["0", "-3", "abc"])
    def test_bad_argument(self, cli_runner, z):
        """z must be a positive rational."""
        result = cli_runner.invoke(main, ["wronskian", "--nu", "1/3", "--z", z])

        assert result.exit_code == EXIT_USAGE


class TestLeibnizCommand:
    """Tests for the leibniz command."""

    def test_holds(self, cli_runner):
        """The default series passes from n = m + 1 on."""
        result = cli_runner.invoke(main, ["leibniz", "--m", "1", "--k", "3", "--n-max", "41"])

        assert result.exit_code == EXIT_OK
        [record] = records(result)
        assert record["results"] == {
            "indices_checked": 40,
            "violations": 0,
            "first_violation": None,
            "holds": True,
        }

    def test_default_range(self, cli_runner):
        """Without --n-max, 200 indices are checked."""
        result = cli_runner.invoke(main, ["leibniz"])

        assert records(result)[0]["parameters"]["n_max"] == "200"

    def test_violation(self, cli_runner, monkeypatch):
        """Any violation exits with 3."""
        monkeypatch.setattr("pi_forge.cli.leibniz_check", lambda params, n_max: [7, 9])
        result = cli_runner.invoke(main, ["leibniz", "--n-max", "10"])

        assert result.exit_code == EXIT_FALSIFIED
        assert records(result)[0]["results"]["first_violation"] == 7

    def test_bad_params(self, cli_runner):
        """k < 2 exits with 1."""
        result = cli_runner.invoke(main, ["leibniz", "--k", "1"])

        assert result.exit_code == EXIT_USAGE
