"""Tests for the command-line surface and exit codes."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from lspac import cli as cli_module
from lspac.cli import Command, ExitStatus, cli, parse_moduli, run
from lspac.errors import InputError
from lspac.exact_core import parse_rational
from lspac.models import Certificate, ModuliSpec, Witness

F = Fraction


def invoke(runner, *args):
    result = runner.invoke(cli, list(args))
    return result, result.stdout


class TestParseModuli:
    """The "pre:<digits> per:<digits>" grammar."""

    def test_period_only(self):
        """A bare period parses with an empty preperiod."""
        assert parse_moduli("per:2") == ModuliSpec((), (2,))

    def test_with_preperiod(self):
        """Preperiod and period parse together."""
        assert parse_moduli("pre:6 per:2,3") == ModuliSpec((6,), (2, 3))

    @pytest.mark.parametrize("text", ["per:1,2", "pre:6", "per:", "per:2,x", "foo:2 per:3", "2,3"])
    def test_rejects(self, text):
        """Digits below 2, missing periods and stray tokens are rejected."""
        with pytest.raises(InputError):
            parse_moduli(text)


class TestRun:
    """Dispatch without click."""

    def test_unknown_command(self):
        """Unknown command names fail validation."""
        with pytest.raises(ValueError):
            Command(name="nope")

    def test_run_liminf(self):
        """run returns the rendered document with status OK."""
        result = run(Command(name="liminf", arguments={"moduli": parse_moduli("per:2,5")}))
        assert result.status == ExitStatus.OK
        assert json.loads(result.output)["liminf"] == "1/9"

    def test_budget_maps_to_exit_three(self):
        """Budget overruns map to exit 3."""
        result = run(Command(name="markov-word", arguments={"n": 10**3}))
        assert result.status == ExitStatus.BUDGET_EXCEEDED
        assert "budget" in result.error

    def test_input_error_maps_to_exit_two(self):
        """Input errors map to exit 2 with no output."""
        result = run(Command(name="coverage", arguments={"x": F(1, 2)}))
        assert result.status == ExitStatus.INPUT_ERROR
        assert result.output == ""

    def test_deterministic_output(self):
        """Identical commands render identical output."""
        command = Command(name="lambda-table", arguments={"n_max": 6})
        assert run(command).output == run(command).output

    def test_unexpected_error_maps_to_exit_four(self, mocker):
        """Exceptions outside the library hierarchy map to exit 4."""
        failing = mocker.Mock(side_effect=RuntimeError("boom"))
        mocker.patch.dict(cli_module.HANDLERS, {"lambda": failing})
        result = run(Command(name="lambda", arguments={"n": 3}))
        assert result.status == ExitStatus.INTERNAL_ERROR
        assert result.error == "RuntimeError: boom"
        assert result.output == ""

    def test_arithmetic_error_maps_to_exit_two(self, mocker):
        """Arithmetic errors are treated as bad input."""
        failing = mocker.Mock(side_effect=ZeroDivisionError("division by zero"))
        mocker.patch.dict(cli_module.HANDLERS, {"lambda": failing})
        result = run(Command(name="lambda", arguments={"n": 3}))
        assert result.status == ExitStatus.INPUT_ERROR


class TestCommands:
    """End-to-end through click."""

    def test_liminf_json(self, runner):
        """liminf JSON carries the limit points and the period used."""
        result, out = invoke(runner, "liminf", "--moduli", "per:2,5", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(out)
        assert data["liminf"] == "1/9"
        assert data["limit_points"] == {"points": ["1/9", "4/9"], "period_used": [2, 5]}

    def test_lspac_matches_liminf(self, runner):
        """lspac equals 2/(1 + liminf)."""
        for moduli in ("per:2", "pre:6 per:2,3", "per:3,4,2"):
            _, out_inf = invoke(runner, "liminf", "--moduli", moduli)
            _, out_lspac = invoke(runner, "lspac", "--moduli", moduli)
            liminf = parse_rational(json.loads(out_inf)["liminf"])
            assert parse_rational(json.loads(out_lspac)["lspac"]) == 2 / (1 + liminf)

    def test_measure_zero(self, runner):
        """The 55 admissible maps sum to 19759/20736."""
        result, out = invoke(runner, "measure-zero")
        assert result.exit_code == 0
        data = json.loads(out)
        assert data["count"] == 55
        assert data["sum"] == "19759/20736"
        assert data["verified"] is True

    @pytest.mark.timeout(60)
    def test_gaps(self, runner):
        """The gaps command verifies for small bounds."""
        result, out = invoke(runner, "gaps", "--n-max", "5", "--period-bound", "5")
        assert result.exit_code == 0
        assert json.loads(out)["verified"] is True

    def test_bad_moduli_is_exit_two(self, runner):
        """Malformed moduli exit with 2."""
        result, _ = invoke(runner, "liminf", "--moduli", "per:1,2")
        assert result.exit_code == 2

    def test_rep_count_out_of_range_is_exit_two(self, runner):
        """rep-count rejects n at or beyond the pair bound."""
        result, _ = invoke(runner, "rep-count", "--moduli", "per:2", "--levels", "4", "--n", "16")
        assert result.exit_code == 2
        result, out = invoke(runner, "rep-count", "--moduli", "per:2", "--levels", "4", "--n", "15")
        assert result.exit_code == 0
        assert json.loads(out)["count"] == 1

    def test_lambda0_midpoint(self, runner):
        """lambda0 reports the enclosure with its midpoint."""
        result, out = invoke(runner, "lambda0", "--terms", "2")
        assert result.exit_code == 0
        data = json.loads(out)
        assert data["enclosure"] == {"lo": "1/6", "hi": "1/4"}
        assert data["midpoint"] == "5/24"

    def test_lambda0_needs_two_terms(self, runner):
        """--terms below 2 is a usage error."""
        result, _ = invoke(runner, "lambda0", "--terms", "1")
        assert result.exit_code == 2

    def test_decimals_display(self, runner):
        """--decimals adds a truncated display section."""
        _, out = invoke(runner, "lambda", "--n", "3", "--decimals", "4")
        data = json.loads(out)
        assert data["lambda"] == "3/13"
        assert data["display"]["lambda"] == "0.2307"

    def test_text_format(self, runner):
        """Text output leads with the verification mark."""
        result, out = invoke(runner, "separation", "--format", "text")
        assert result.exit_code == 0
        assert out.startswith("✓ separation: verified")
        assert "delta: 1/90" in out

    def test_csv_census(self, runner):
        """The census renders as CSV rows."""
        result, out = invoke(runner, "theorem1-scan", "--period-bound", "4", "--format", "csv")
        assert result.exit_code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "period,liminf,classification"
        assert "2,1/3,lambda_1" in lines

    def test_ratio_csv(self, runner):
        """The ratio table renders as CSV rows."""
        _, out = invoke(
            runner, "ratio", "--moduli", "per:2", "--levels", "4", "--x-max", "5", "--format", "csv"
        )
        lines = out.strip().splitlines()
        assert lines[0] == "x,A(x),B(x),ratio_num,ratio_den"
        assert lines[1] == "1,2,1,2,1"

    def test_splice_command(self, runner):
        """Repeated --moduli/--epsilon pairs splice in order."""
        result, out = invoke(
            runner,
            "splice",
            "--moduli", "per:2,2,3", "--epsilon", "1/8",
            "--moduli", "per:3", "--epsilon", "1/16",
            "--moduli", "per:2", "--epsilon", "1/32",
        )
        assert result.exit_code == 0
        data = json.loads(out)
        assert data["boundaries"] == [2, 6, 10]
        assert data["verified"] is True

    def test_splice_budget_exit_three(self, runner):
        """A tiny splice budget exits with 3."""
        result, _ = invoke(
            runner,
            "splice",
            "--moduli", "per:2,2,3", "--epsilon", "1/8",
            "--moduli", "per:3", "--epsilon", "1/16",
            "--budget", "3",
        )
        assert result.exit_code == 3

    def test_coverage_commands(self, runner):
        """coverage and verify-coverage agree."""
        _, out = invoke(runner, "coverage", "--x", "1/10")
        assert json.loads(out)["K_period"] == [2, 3]
        result, out = invoke(runner, "verify-coverage", "--x", "1/8", "--n-max", "8")
        assert result.exit_code == 0
        assert json.loads(out)["verified"] is True

    def test_refine_and_ghat(self, runner):
        """refine counts cylinders and ghat is conjugate to g."""
        _, out = invoke(runner, "refine", "--digits", "2,3", "--base", "1/5,2/5", "--depth", "2")
        assert json.loads(out)["count"] == 4
        _, out = invoke(runner, "ghat", "--m", "3", "--x", "8/5")
        data = json.loads(out)
        assert data["value"] == "8/5"
        assert data["conjugate"] == "8/5"

    def test_refine_contains(self, runner):
        """--contains reports membership in the merged level."""
        args = ["refine", "--digits", "2,3", "--base", "1/5,2/5", "--depth", "2"]
        _, out = invoke(runner, *args, "--contains", "1/3")
        assert json.loads(out)["contains"] is True
        _, out = invoke(runner, *args, "--contains", "9/25")
        assert json.loads(out)["contains"] is False

    def test_falsified_certificate_exits_one(self, runner, mocker):
        """A failed certificate exits with 1 and still prints."""
        broken = Certificate("separation", False, (Witness("T_3(J)", F(1, 2)),))
        mocker.patch.object(cli_module.markov, "separation_certificate", return_value=broken)
        result, out = invoke(runner, "separation")
        assert result.exit_code == 1
        assert json.loads(out)["verified"] is False

    def test_round_trip_of_rational_strings(self, runner):
        """Rational strings parse back to consistent values."""
        _, out = invoke(runner, "lambda-table", "--n-max", "5")
        for row in json.loads(out)["rows"]:
            value = parse_rational(row["lambda"])
            assert parse_rational(row["gamma"]) == 2 / (1 + value)


@pytest.mark.integration
class TestModuleEntryPoint:
    """``python -m lspac`` runs the same CLI."""

    def test_python_m_lspac(self):
        """The module entry point prints the liminf."""
        project_root = Path(__file__).parent.parent
        result = subprocess.run(
            [sys.executable, "-m", "lspac", "liminf", "--moduli", "per:2,5"],
            capture_output=True,
            text=True,
            cwd=project_root,
            env={"PYTHONPATH": str(project_root / "src"), "LSPAC_LOG_LEVEL": "WARNING"},
        )
        assert result.returncode == 0, result.stderr
        assert json.loads(result.stdout)["liminf"] == "1/9"


class TestServerTools:
    """The MCP tools share the CLI dispatcher."""

    def test_call_returns_document(self):
        """Successful tool calls carry status ok."""
        pytest.importorskip("fastmcp")
        from lspac.server import _call

        data = _call("lspac", moduli=parse_moduli("per:2"))
        assert data["lspac"] == "3/2"
        assert data["status"] == "ok"

    def test_call_reports_input_errors(self):
        """Out-of-range input comes back as input_error."""
        pytest.importorskip("fastmcp")
        from lspac.server import _call

        data = _call("coverage", x=F(1, 2))
        assert data["status"] == "input_error"
        assert "1/7" in data["error"]

    def test_tool_reports_parse_errors(self):
        """Malformed tool arguments come back as input_error instead of raising."""
        pytest.importorskip("fastmcp")
        from lspac.server import _tool

        data = _tool("liminf", lambda: {"moduli": parse_moduli("per:1")})
        assert data["status"] == "input_error"
        assert "error" in data

    def test_splice_budget_follows_config(self, mocker):
        """The splice tool takes its default budget from the configuration."""
        pytest.importorskip("fastmcp")
        from lspac import server as server_module

        mocker.patch.object(server_module.config, "splice_budget", 7)
        arguments = server_module._splice_arguments(["per:2"], ["1/8"], None)
        assert arguments["budget"] == 7
        assert server_module._splice_arguments(["per:2"], ["1/8"], 3)["budget"] == 3
        assert arguments["epsilons"] == [F(1, 8)]
