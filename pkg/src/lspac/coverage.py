"""Witness sequences showing every x in (0, 1/7) is a liminf value.

For ``x`` pick ``m`` with ``y = 1 - m x`` in ``I = [1/7, 3/7]``, then expand
``y`` greedily as ``T_{K_1} o T_{K_2} o ...`` with digits in {2,3,4}. The
sequence made of blocks ``(3, K_n, ..., K_1, m)`` visits values near ``x`` at
the end of every block and stays inside ``I`` elsewhere.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List

from .errors import InputError
from .exact_core import RationalLike, as_rational
from .models import Certificate, CertificateBuilder, CoverageWitness, ModuliSpec, coverage_block_end
from .spectrum import invariant_interval, prefix_values, projection

logger = logging.getLogger(__name__)

COVERAGE_BASE = invariant_interval(4)
GREEDY_DIGITS = (2, 3, 4)


def coverage_modulus(x: Fraction) -> int:
    """``max(6, ceil(4 / (7x)))``, the smallest usable block-closing digit."""
    return max(6, math.ceil(Fraction(4) / (7 * x)))


def coverage_witness(x: RationalLike) -> CoverageWitness:
    """Build the witness sequence for ``x``.

    Raises:
        InputError: If ``x`` is not in ``(0, 1/7)``.
    """
    x = as_rational(x)
    if not Fraction(0) < x < Fraction(1, 7):
        raise InputError(f"Coverage target {x} is not in (0, 1/7)")
    m = coverage_modulus(x)
    y = 1 - m * x
    if not COVERAGE_BASE.contains(y):
        raise InputError(f"Start value {y} left {COVERAGE_BASE}")

    # z_{i+1} = 1 - K z_i keeps denominators dividing denom(y), so the orbit cycles
    seen: Dict[Fraction, int] = {y: 0}
    digits: List[int] = []
    orbit: List[Fraction] = []
    z = y
    while True:
        for K in GREEDY_DIGITS:
            nxt = 1 - K * z
            if COVERAGE_BASE.contains(nxt):
                break
        else:
            raise InputError(f"No digit in {GREEDY_DIGITS} keeps {z} inside {COVERAGE_BASE}")
        digits.append(K)
        z = nxt
        orbit.append(z)
        if z in seen:
            start = seen[z]
            break
        seen[z] = len(digits)

    spec = ModuliSpec(tuple(digits[:start]), tuple(digits[start:]))
    if projection(spec) != y:
        raise InputError(f"Greedy digits for {y} do not project back onto it")
    logger.debug(f"Coverage witness for {x}: m={m}, K={spec}")
    return CoverageWitness(x=x, m=m, y=y, digits=spec, z_orbit=tuple(orbit))


def verify_witness(witness: CoverageWitness, n_max: int) -> Certificate:
    """Check designated indices come within ``2^-n`` of x and all others stay in I.

    Raises:
        InputError: If ``n_max < 1``.
    """
    if n_max < 1:
        raise InputError(f"Depth must be >= 1, got {n_max}")
    k_max = coverage_block_end(n_max)
    word = witness.moduli(k_max)
    spec = ModuliSpec((), word)
    builder = CertificateBuilder(f"coverage x={witness.x}")

    worst = Fraction(0)
    for k, value in prefix_values(spec):
        if k > k_max:
            break
        n = witness.is_designated(k)
        if n is not None:
            error = abs(value - witness.x)
            builder.check(error <= Fraction(1, 2**n), f"k={k} |value - x|", error, keep=False)
            worst = max(worst, error * 2**n)
        else:
            builder.check(COVERAGE_BASE.contains(value), f"k={k} value", value, keep=False)
    builder.record("x", witness.x)
    builder.record("m", witness.m)
    builder.record("max 2^n |value - x|", worst)
    builder.record("checked indices", k_max)
    return builder.build()
