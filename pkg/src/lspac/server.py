"""MCP tool server exposing lspac computations via FastMCP."""

import json
import logging
from typing import Any, Callable, Dict, List, Optional

from fastmcp import FastMCP

from .cli import Command, ExitStatus, parse_moduli, run
from .config import config
from .errors import InputError
from .exact_core import as_rational

logger = logging.getLogger(__name__)

server = FastMCP("LSPAC Spectrum Server")

_FAILURES = (ExitStatus.INPUT_ERROR, ExitStatus.BUDGET_EXCEEDED, ExitStatus.INTERNAL_ERROR)


def _call(name: str, **arguments: Any) -> Dict[str, Any]:
    result = run(Command(name=name, arguments=arguments))
    if result.status in _FAILURES:
        logger.info(f"Tool {name} rejected: {result.error}")
        return {"status": result.status.name.lower(), "error": result.error}
    document = json.loads(result.output)
    document["status"] = result.status.name.lower()
    return document


def _tool(name: str, parse: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    """Parse raw tool arguments, then dispatch; parse failures become ``input_error``."""
    try:
        arguments = parse()
    except InputError as e:
        logger.info(f"Tool {name} rejected: {e}")
        return {"status": ExitStatus.INPUT_ERROR.name.lower(), "error": str(e)}
    return _call(name, **arguments)


@server.tool()
def liminf(moduli: str) -> dict:
    """Exact liminf of the prefix values for moduli like "pre:6 per:2,3"."""
    return _tool("liminf", lambda: {"moduli": parse_moduli(moduli)})


@server.tool()
def lspac(moduli: str) -> dict:
    """Spectrum value 2/(1+liminf) for eventually periodic moduli."""
    return _tool("lspac", lambda: {"moduli": parse_moduli(moduli)})


@server.tool()
def markov_lambda(n: int) -> dict:
    """lambda_n = Fix(T_M(n)) and gamma_n = 2/(1+lambda_n)."""
    return _call("lambda", n=n)


@server.tool()
def measure_zero() -> dict:
    """Certificate that the 55 admissible four-digit maps contract total length below 1."""
    return _call("measure-zero")


@server.tool()
def gaps(n_max: int = 3, period_bound: int = 6) -> dict:
    """Exact checks for the gaps accumulating at 1/6."""
    return _call("gaps", n_max=n_max, period_bound=period_bound, workers=0)


@server.tool()
def coverage(x: str) -> dict:
    """Witness moduli whose liminf is x, for 0 < x < 1/7."""
    return _tool("coverage", lambda: {"x": as_rational(x)})


@server.tool()
def splice(moduli: List[str], epsilons: List[str], budget: Optional[int] = None) -> dict:
    """Splice the liminfs of several moduli into one sequence."""
    return _tool("splice", lambda: _splice_arguments(moduli, epsilons, budget))


def _splice_arguments(
    moduli: List[str], epsilons: List[str], budget: Optional[int]
) -> Dict[str, Any]:
    return {
        "moduli": [parse_moduli(m) for m in moduli],
        "epsilons": [as_rational(e) for e in epsilons],
        "budget": config.splice_budget if budget is None else budget,
    }


async def run_stdio():
    """Run the server in stdio mode."""
    await server.run_stdio_async()


async def run_http(host: str = "127.0.0.1", port: int = 8000):
    """Run the server in streamable HTTP mode."""
    await server.run_streamable_http_async(host=host, port=port)
