"""Command-line interface for lspac."""

import asyncio
import logging
import sys
from enum import IntEnum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Literal, NamedTuple, Optional, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field, field_validator

from . import complements, coverage, gaps, markov, spectrum
from .config import config
from .errors import BudgetExceededError, DomainError, InputError
from .exact_core import Interval, as_rational, digit_map, parse_rational
from .models import ModuliSpec
from .report import Report, render
from .splice import splice
from .utils import setup_logging

logger = logging.getLogger(__name__)


class ExitStatus(IntEnum):
    OK = 0
    CERTIFICATE_FAILED = 1
    INPUT_ERROR = 2
    BUDGET_EXCEEDED = 3
    INTERNAL_ERROR = 4


def _parse_digits(text: str, what: str) -> Tuple[int, ...]:
    try:
        digits = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from e
    for m in digits:
        if m < 2:
            raise InputError(f"{what} digit {m} < 2")
    return digits


def parse_moduli(text: str) -> ModuliSpec:
    """Parse ``"pre:<digits> per:<digits>"``; the ``pre:`` part is optional.

    Raises:
        InputError: On unknown sections, digits below 2 or an empty period.
    """
    preperiod: Tuple[int, ...] = ()
    period: Optional[Tuple[int, ...]] = None
    for token in text.split():
        key, sep, value = token.partition(":")
        if not sep or key not in ("pre", "per"):
            raise InputError(f"Expected 'pre:<digits>' or 'per:<digits>', got {token!r}")
        digits = _parse_digits(value, "Preperiod" if key == "pre" else "Period")
        if key == "pre":
            preperiod = digits
        else:
            period = digits
    if not period:
        raise InputError(f"Moduli {text!r} has an empty period")
    return ModuliSpec(preperiod, period)


Handler = Callable[..., Report]
HANDLERS: Dict[str, Handler] = {}


def handler(name: str) -> Callable[[Handler], Handler]:
    def register(func: Handler) -> Handler:
        HANDLERS[name] = func
        return func

    return register


class Command(BaseModel):
    """One invocation: a registered command name, typed arguments and an output format."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    output_format: Literal["json", "csv", "text"] = "json"
    decimals: Optional[int] = Field(default=None, ge=0)

    @field_validator("name")
    @classmethod
    def known_command(cls, value: str) -> str:
        if value not in HANDLERS:
            raise ValueError(f"Unknown command {value!r}")
        return value


class RunResult(NamedTuple):
    status: ExitStatus
    output: str
    error: str = ""


def run(command: Command) -> RunResult:
    """Dispatch a command and render its report."""
    try:
        report = HANDLERS[command.name](**command.arguments)
        output = render(report, command.output_format, command.decimals)
    except BudgetExceededError as e:
        logger.error(f"{command.name}: {e}")
        return RunResult(ExitStatus.BUDGET_EXCEEDED, "", str(e))
    except (ValueError, ArithmeticError) as e:
        return RunResult(ExitStatus.INPUT_ERROR, "", str(e))
    except Exception as e:
        logger.exception(f"{command.name} failed unexpectedly")
        return RunResult(ExitStatus.INTERNAL_ERROR, "", f"{type(e).__name__}: {e}")
    status = ExitStatus.OK if report.verified else ExitStatus.CERTIFICATE_FAILED
    return RunResult(status, output)


# -- handlers ---------------------------------------------------------------


@handler("liminf")
def _liminf(moduli: ModuliSpec) -> Report:
    points = spectrum.limit_points(moduli)
    payload = {"moduli": str(moduli), "liminf": points.liminf, "limit_points": points.to_dict()}
    return Report(payload)


@handler("limsup")
def _limsup(moduli: ModuliSpec) -> Report:
    points = spectrum.limit_points(moduli)
    payload = {"moduli": str(moduli), "limsup": points.limsup, "limit_points": points.to_dict()}
    return Report(payload)


@handler("lspac")
def _lspac(moduli: ModuliSpec) -> Report:
    return Report(
        {
            "moduli": str(moduli),
            "lspac": spectrum.lspac_value(moduli),
            "liminf": spectrum.liminf(moduli),
        }
    )


@handler("projection")
def _projection(moduli: ModuliSpec) -> Report:
    return Report({"moduli": str(moduli), "projection": spectrum.projection(moduli)})


@handler("prefix")
def _prefix(moduli: ModuliSpec, k: int) -> Report:
    return Report({"moduli": str(moduli), "k": k, "value": spectrum.evaluate_prefix(moduli, k)})


@handler("dk")
def _dk(moduli: ModuliSpec, k: int) -> Report:
    return Report({"moduli": str(moduli), "k": k, "d_k": complements.d_k(moduli, k)})


@handler("pair")
def _pair(moduli: ModuliSpec, levels: int) -> Report:
    pair = complements.build_pair(moduli, levels)
    return Report({"moduli": str(moduli), **pair.to_dict()})


@handler("rep-count")
def _rep_count(moduli: ModuliSpec, levels: int, n: int) -> Report:
    pair = complements.build_pair(moduli, levels)
    return Report({"moduli": str(moduli), "n": n, "count": complements.rep_count(pair, n)})


@handler("verify-pair")
def _verify_pair(moduli: ModuliSpec, levels: int) -> Report:
    pair = complements.build_pair(moduli, levels)
    return Report({"moduli": str(moduli)}, certificate=complements.verify_pair(pair, moduli))


@handler("ratio")
def _ratio(moduli: ModuliSpec, levels: int, x_max: Optional[int] = None) -> Report:
    pair = complements.build_pair(moduli, levels)
    rows = complements.counting_profile(pair, x_max or pair.bound - 1)
    return Report(
        {"moduli": str(moduli), "levels": levels},
        header=["x", "A(x)", "B(x)", "ratio_num", "ratio_den"],
        rows=[(r.x, r.a_count, r.b_count, r.ratio.numerator, r.ratio.denominator) for r in rows],
    )


@handler("theorem-b")
def _theorem_b(moduli: ModuliSpec, levels: int, tolerance: Fraction) -> Report:
    return Report(
        {"moduli": str(moduli)},
        certificate=complements.theoremB_check(moduli, levels, tolerance),
    )


@handler("ghat")
def _ghat(m: int, x: Fraction) -> Report:
    payload: Dict[str, Any] = {"m": m, "x": x, "value": spectrum.ghat_apply(m, x)}
    try:
        payload["conjugate"] = spectrum.g(digit_map(m)(spectrum.g_inverse(x)))
    except DomainError:
        logger.debug(f"g o T_{m} o g^-1 undefined at {x}")
    return Report(payload)


@handler("alphabet-bounds")
def _alphabet_bounds(K: int) -> Report:
    return Report(certificate=spectrum.alphabet_bounds_check(K))


@handler("tail-bound")
def _tail_bound(moduli: ModuliSpec, K: int) -> Report:
    return Report({"moduli": str(moduli)}, certificate=spectrum.tail_bound_check(moduli, K))


@handler("pattern-bound")
def _pattern_bound(moduli: ModuliSpec, word: Tuple[int, ...]) -> Report:
    return Report(
        {"moduli": str(moduli)}, certificate=spectrum.pattern_bounds_check(moduli, word)
    )


@handler("lemma-v")
def _lemma_v(moduli: ModuliSpec) -> Report:
    return Report({"moduli": str(moduli)}, certificate=spectrum.lemma_v_check(moduli))


@handler("refine")
def _refine(
    digits: Tuple[int, ...], base: Interval, depth: int, contains: Optional[Fraction] = None
) -> Report:
    intervals = spectrum.attractor_refine(digits, base, depth)
    payload = {"digits": list(digits), "base": base, "depth": depth, "count": len(intervals)}
    if contains is not None:
        payload["contains"] = spectrum.refinement_contains(intervals, contains)
    return Report(
        payload,
        header=["lo", "hi"],
        rows=[(iv.lo, iv.hi) for iv in intervals],
    )


@handler("coverage")
def _coverage(x: Fraction) -> Report:
    return Report(coverage.coverage_witness(x).to_dict())


@handler("verify-coverage")
def _verify_coverage(x: Fraction, n_max: int) -> Report:
    witness = coverage.coverage_witness(x)
    return Report(witness.to_dict(), certificate=coverage.verify_witness(witness, n_max))


@handler("gaps")
def _gaps(n_max: int, period_bound: int, workers: int) -> Report:
    return Report(certificate=gaps.gap_checks(n_max, period_bound, workers))


@handler("measure-zero")
def _measure_zero() -> Report:
    cert = gaps.measure_zero_certificate()
    extras = {}
    if cert.verified:
        extras = {"count": int(cert.witness("count")), "sum": cert.witness("sum")}
    return Report(extras, certificate=cert)


@handler("splice")
def _splice(moduli: List[ModuliSpec], epsilons: List[Fraction], budget: int) -> Report:
    targets = [(spec, spectrum.liminf(spec)) for spec in moduli]
    result = splice(targets, epsilons, budget)
    return Report(result.plan.to_dict(), certificate=result.certificate)


@handler("markov-word")
def _markov_word(n: int) -> Report:
    return Report(markov.markov_word(n).to_dict())


@handler("lambda")
def _lambda(n: int) -> Report:
    value = markov.lambda_n(n)
    return Report({"n": n, "lambda": value.value, "gamma": value.gamma})


@handler("lambda-table")
def _lambda_table(n_max: int) -> Report:
    rows = [
        (v.n, markov.markov_length(v.n), v.value, v.gamma) for v in markov.lambda_table(n_max)
    ]
    return Report({"n_max": n_max}, header=["n", "length", "lambda", "gamma"], rows=rows)


@handler("lambda0")
def _lambda0(terms: int) -> Report:
    value = markov.lambda0_value(terms)
    enclosure = value.value
    return Report(
        {
            "terms": terms,
            "enclosure": enclosure,
            "midpoint": enclosure.midpoint,
            "gamma": value.gamma,
            "width": enclosure.width,
        }
    )


@handler("gamma")
def _gamma(n: int, terms: int) -> Report:
    if n == 0:
        return Report({"n": 0, "gamma": markov.lambda0_value(terms).gamma})
    return Report({"n": n, "gamma": markov.lambda_n(n).gamma})


@handler("lambda-witness")
def _lambda_witness(n: int) -> Report:
    return Report({"n": n}, certificate=markov.lambda_witness_check(n))


@handler("separation")
def _separation() -> Report:
    delta, J = markov.delta_and_J()
    return Report({"delta": delta, "J": J}, certificate=markov.separation_certificate())


@handler("shift-order")
def _shift_order(n: int) -> Report:
    return Report({"n": n}, certificate=markov.verify_shift_order(n))


@handler("adjacent-gap")
def _adjacent_gap(n: int, depth: Optional[int], period_bound: int, workers: int) -> Report:
    return Report(
        {"n": n},
        certificate=markov.verify_adjacent_gap(n, depth, period_bound, workers),
    )


@handler("theorem1-scan")
def _theorem1_scan(period_bound: int, terms: int, workers: int) -> Report:
    result = markov.theorem1_scan(period_bound, terms, workers)
    return Report(
        {"period_bound": period_bound},
        header=["period", "liminf", "classification"],
        rows=[(row.word, row.liminf, row.classification) for row in result.census],
        certificate=result.certificate,
    )


# -- click surface ----------------------------------------------------------


class ModuliParamType(click.ParamType):
    name = "moduli"

    def convert(self, value, param, ctx):
        if isinstance(value, ModuliSpec):
            return value
        try:
            return parse_moduli(value)
        except InputError as e:
            self.fail(str(e), param, ctx)


class RationalParamType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return as_rational(value)
        except InputError as e:
            self.fail(str(e), param, ctx)


class WordParamType(click.ParamType):
    name = "word"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return _parse_digits(value, "Word")
        except InputError as e:
            self.fail(str(e), param, ctx)


class IntervalParamType(click.ParamType):
    name = "interval"

    def convert(self, value, param, ctx):
        if isinstance(value, Interval):
            return value
        lo, sep, hi = value.partition(",")
        try:
            if not sep:
                raise InputError(f"Expected 'lo,hi', got {value!r}")
            return Interval(parse_rational(lo), parse_rational(hi))
        except InputError as e:
            self.fail(str(e), param, ctx)


MODULI = ModuliParamType()
RATIONAL = RationalParamType()
WORD = WordParamType()
INTERVAL = IntervalParamType()


def output_options(func):
    func = click.option(
        "--decimals", type=click.IntRange(min=0), default=None, help="Add truncated decimals"
    )(func)
    func = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv", "text"]),
        default="json",
        help="Report format",
    )(func)
    return func


def moduli_option(func):
    return click.option("--moduli", type=MODULI, required=True, help='e.g. "pre:6 per:2,3"')(func)


def workers_option(func):
    return click.option(
        "--workers", type=click.IntRange(min=0), default=config.workers, help="Worker processes"
    )(func)


def _execute(name: str, fmt: str, decimals: Optional[int], **arguments: Any) -> None:
    command = Command(name=name, arguments=arguments, output_format=fmt, decimals=decimals)
    result = run(command)
    if result.output:
        click.echo(result.output)
    if result.error:
        click.echo(f"Error: {result.error}", err=True)
    sys.exit(int(result.status))


@click.group()
@click.option("--log-level", default=None, help="Logging level (default from LSPAC_LOG_LEVEL)")
def cli(log_level):
    """lspac - exact spectra of perfect additive complements."""
    log_file = config.log_file_path
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
    setup_logging(log_level or config.log_level, str(log_file) if log_file else None)


def _moduli_command(name: str, help_text: str):
    @cli.command(name, help=help_text)
    @moduli_option
    @output_options
    def command(moduli, fmt, decimals):
        _execute(name, fmt, decimals, moduli=moduli)

    return command


for _name, _help in (
    ("liminf", "Liminf of the prefix values for eventually periodic moduli."),
    ("limsup", "Limsup of the prefix values."),
    ("lspac", "Spectrum value 2/(1+liminf)."),
    ("projection", "Natural projection of the moduli sequence."),
    ("lemma-v", "Check limsup <= 13/31 for admissible {2,3,4} periods."),
):
    _moduli_command(_name, _help)


@cli.command("prefix")
@moduli_option
@click.option("--k", "k", type=click.IntRange(min=1), required=True)
@output_options
def prefix_cmd(moduli, k, fmt, decimals):
    """Exact T_{m_k} o ... o T_{m_1}(0)."""
    _execute("prefix", fmt, decimals, moduli=moduli, k=k)


@cli.command("dk")
@moduli_option
@click.option("--k", "k", type=click.IntRange(min=1), required=True)
@output_options
def dk_cmd(moduli, k, fmt, decimals):
    """Alternating sum D_k."""
    _execute("dk", fmt, decimals, moduli=moduli, k=k)


@cli.command("pair")
@moduli_option
@click.option("--levels", type=click.IntRange(min=2), required=True)
@output_options
def pair_cmd(moduli, levels, fmt, decimals):
    """Truncated perfect complement pair."""
    _execute("pair", fmt, decimals, moduli=moduli, levels=levels)


@cli.command("rep-count")
@moduli_option
@click.option("--levels", type=click.IntRange(min=2), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@output_options
def rep_count_cmd(moduli, levels, n, fmt, decimals):
    """Number of representations n = a + b."""
    _execute("rep-count", fmt, decimals, moduli=moduli, levels=levels, n=n)


@cli.command("verify-pair")
@moduli_option
@click.option("--levels", type=click.IntRange(min=2), required=True)
@output_options
def verify_pair_cmd(moduli, levels, fmt, decimals):
    """Check every n below the bound has exactly one representation."""
    _execute("verify-pair", fmt, decimals, moduli=moduli, levels=levels)


@cli.command("ratio")
@moduli_option
@click.option("--levels", type=click.IntRange(min=2), required=True)
@click.option("--x-max", type=click.IntRange(min=1), default=None)
@output_options
def ratio_cmd(moduli, levels, x_max, fmt, decimals):
    """Counting profile A(x), B(x), A(x)B(x)/x."""
    _execute("ratio", fmt, decimals, moduli=moduli, levels=levels, x_max=x_max)


@cli.command("theorem-b")
@moduli_option
@click.option("--levels", type=click.IntRange(min=2), required=True)
@click.option("--tolerance", type=RATIONAL, default="1/20", show_default=True)
@output_options
def theorem_b_cmd(moduli, levels, tolerance, fmt, decimals):
    """Compare max A(x)B(x)/x with 2/(1+liminf D_k)."""
    _execute("theorem-b", fmt, decimals, moduli=moduli, levels=levels, tolerance=tolerance)


@cli.command("ghat")
@click.option("--m", "m", type=click.IntRange(min=2), required=True)
@click.option("--x", "x", type=RATIONAL, required=True)
@output_options
def ghat_cmd(m, x, fmt, decimals):
    """Evaluate 2mx/((m+2)x-2)."""
    _execute("ghat", fmt, decimals, m=m, x=x)


@cli.command("alphabet-bounds")
@click.option("--k", "K", type=click.IntRange(min=2), required=True)
@output_options
def alphabet_bounds_cmd(K, fmt, decimals):
    """Invariance of [1/(2K-1), (K-1)/(2K-1)]."""
    _execute("alphabet-bounds", fmt, decimals, K=K)


@cli.command("tail-bound")
@moduli_option
@click.option("--k", "K", type=click.IntRange(min=2), required=True)
@output_options
def tail_bound_cmd(moduli, K, fmt, decimals):
    """liminf <= 1/(K+1) when a digit >= K recurs."""
    _execute("tail-bound", fmt, decimals, moduli=moduli, K=K)


@cli.command("pattern-bound")
@moduli_option
@click.option("--word", type=WORD, required=True)
@output_options
def pattern_bound_cmd(moduli, word, fmt, decimals):
    """Bound liminf by the fixed point of a recurring word."""
    _execute("pattern-bound", fmt, decimals, moduli=moduli, word=word)


@cli.command("refine")
@click.option("--digits", type=WORD, required=True)
@click.option("--base", type=INTERVAL, required=True, help='e.g. "1/5,2/5"')
@click.option("--depth", type=click.IntRange(min=1), required=True)
@click.option("--contains", type=RATIONAL, default=None, help="Report whether x lies in the level")
@output_options
def refine_cmd(digits, base, depth, contains, fmt, decimals):
    """Merged cylinder images of the base interval."""
    _execute("refine", fmt, decimals, digits=digits, base=base, depth=depth, contains=contains)


@cli.command("coverage")
@click.option("--x", "x", type=RATIONAL, required=True)
@output_options
def coverage_cmd(x, fmt, decimals):
    """Witness moduli for x in (0, 1/7)."""
    _execute("coverage", fmt, decimals, x=x)


@cli.command("verify-coverage")
@click.option("--x", "x", type=RATIONAL, required=True)
@click.option("--n-max", type=click.IntRange(min=1), default=20, show_default=True)
@output_options
def verify_coverage_cmd(x, n_max, fmt, decimals):
    """Build and verify the coverage witness for x."""
    _execute("verify-coverage", fmt, decimals, x=x, n_max=n_max)


@cli.command("gaps")
@click.option("--n-max", type=click.IntRange(min=0), default=5, show_default=True)
@click.option("--period-bound", type=click.IntRange(min=1), default=config.period_bound)
@workers_option
@output_options
def gaps_cmd(n_max, period_bound, workers, fmt, decimals):
    """Gap checks near 1/6."""
    _execute("gaps", fmt, decimals, n_max=n_max, period_bound=period_bound, workers=workers)


@cli.command("measure-zero")
@output_options
def measure_zero_cmd(fmt, decimals):
    """The 55 admissible four-digit contractions sum below 1."""
    _execute("measure-zero", fmt, decimals)


@cli.command("splice")
@click.option("--moduli", "moduli", type=MODULI, multiple=True, required=True)
@click.option("--epsilon", "epsilons", type=RATIONAL, multiple=True, required=True)
@click.option("--budget", type=click.IntRange(min=1), default=config.splice_budget)
@output_options
def splice_cmd(moduli, epsilons, budget, fmt, decimals):
    """Splice targets (the liminf of each --moduli) into one sequence."""
    _execute(
        "splice", fmt, decimals, moduli=list(moduli), epsilons=list(epsilons), budget=budget
    )


@cli.command("markov-word")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@output_options
def markov_word_cmd(n, fmt, decimals):
    """The word M(n)."""
    _execute("markov-word", fmt, decimals, n=n)


@cli.command("lambda")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@output_options
def lambda_cmd(n, fmt, decimals):
    """lambda_n = Fix(T_M(n)) and gamma_n."""
    _execute("lambda", fmt, decimals, n=n)


@cli.command("lambda-table")
@click.option("--n-max", type=click.IntRange(min=1), default=10, show_default=True)
@output_options
def lambda_table_cmd(n_max, fmt, decimals):
    """Table of lambda_n and gamma_n."""
    _execute("lambda-table", fmt, decimals, n_max=n_max)


@cli.command("lambda0")
@click.option("--terms", type=click.IntRange(min=2), default=20, show_default=True)
@output_options
def lambda0_cmd(terms, fmt, decimals):
    """Enclosure of lambda_0."""
    _execute("lambda0", fmt, decimals, terms=terms)


@cli.command("gamma")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--terms", type=click.IntRange(min=2), default=20, show_default=True)
@output_options
def gamma_cmd(n, terms, fmt, decimals):
    """gamma_n = 2/(1+lambda_n); n = 0 gives an enclosure."""
    _execute("gamma", fmt, decimals, n=n, terms=terms)


@cli.command("lambda-witness")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@output_options
def lambda_witness_cmd(n, fmt, decimals):
    """Periodic witness attaining lambda_n."""
    _execute("lambda-witness", fmt, decimals, n=n)


@cli.command("separation")
@output_options
def separation_cmd(fmt, decimals):
    """delta and J with T_2(J), T_3(J) disjoint."""
    _execute("separation", fmt, decimals)


@cli.command("shift-order")
@click.option("--n", "n", type=click.IntRange(min=3), required=True)
@output_options
def shift_order_cmd(n, fmt, decimals):
    """T_M(n)(J) precedes every shifted image."""
    _execute("shift-order", fmt, decimals, n=n)


@cli.command("adjacent-gap")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--depth", type=click.IntRange(min=1), default=None)
@click.option("--period-bound", type=click.IntRange(min=1), default=config.period_bound)
@workers_option
@output_options
def adjacent_gap_cmd(n, depth, period_bound, workers, fmt, decimals):
    """Nothing lies between lambda_{n+1} and lambda_n."""
    _execute(
        "adjacent-gap",
        fmt,
        decimals,
        n=n,
        depth=depth,
        period_bound=period_bound,
        workers=workers,
    )


@cli.command("theorem1-scan")
@click.option("--period-bound", type=click.IntRange(min=1), default=config.period_bound)
@click.option("--terms", type=click.IntRange(min=2), default=20, show_default=True)
@workers_option
@output_options
def theorem1_scan_cmd(period_bound, terms, workers, fmt, decimals):
    """Census of periodic {2,3} liminfs against lambda_n."""
    _execute(
        "theorem1-scan", fmt, decimals, period_bound=period_bound, terms=terms, workers=workers
    )


@cli.group()
def serve():
    """Run the MCP tool server."""


@serve.command("stdio")
def serve_stdio():
    """Serve tools over stdio."""
    try:
        from .server import run_stdio

        asyncio.run(run_stdio())
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


@serve.command("http")
@click.option("--host", default="127.0.0.1", help="Host to bind to")
@click.option("--port", type=int, default=8000, help="Port to bind to")
def serve_http(host, port):
    """Serve tools over streamable HTTP."""
    try:
        from .server import run_http

        click.echo(f"Serving lspac tools on http://{host}:{port}")
        asyncio.run(run_http(host, port))
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    cli()
