"""Splice several eventually periodic sequences into one whose prefix values
follow a chosen list of targets.

Segment ``n`` copies digits ``l_n + 1 .. k_n`` of the sequence for target
``alpha_n``. Because every digit is at least 2, a segment of length ``d``
contracts the distance to the source sequence's own values by ``2^-d`` or
more, so long enough segments land within ``2 eps_n`` of ``alpha_n``.
"""

import logging
from fractions import Fraction
from itertools import islice
from typing import List, NamedTuple, Sequence, Tuple

from .errors import BudgetExceededError, InputError
from .exact_core import format_rational
from .models import Certificate, CertificateBuilder, ModuliSpec, SplicePlan
from .spectrum import liminf, prefix_values, residue_limit_points

logger = logging.getLogger(__name__)


class SpliceResult(NamedTuple):
    plan: SplicePlan
    certificate: Certificate


class _PrefixCache:
    """Prefix values ``v(1), v(2), ...`` of one spec, computed on demand up to a budget."""

    def __init__(self, spec: ModuliSpec, budget: int):
        self.spec = spec
        self.budget = budget
        self._values: List[Fraction] = []
        self._source = prefix_values(spec)

    def __call__(self, k: int) -> Fraction:
        if k > self.budget:
            raise BudgetExceededError(
                f"Splice search for {self.spec} passed {self.budget} prefix evaluations",
                self.budget,
            )
        while len(self._values) < k:
            self._values.append(next(self._source)[1])
        return self._values[k - 1]


def _min_exponent(ratio: Fraction) -> int:
    """Smallest ``d >= 1`` with ``2^d > ratio``."""
    d = 1
    while 2**d <= ratio:
        d += 1
    return d


def tail_start(values: _PrefixCache, alpha: Fraction, eps: Fraction) -> int:
    """Smallest index ``T`` with ``v(l) > alpha - eps`` for every ``l >= T``.

    Within a residue class mod the period, ``|v(l) - point|`` shrinks by the
    period's contraction factor every period, so once ``point - |v(l) - point|``
    clears ``alpha - eps`` across one whole period window, no later value dips.
    """
    spec = values.spec
    u, p = len(spec.preperiod), len(spec.period)
    points = residue_limit_points(spec)
    floor = alpha - eps
    last_bad = 0
    run = 0
    l = max(u, 1)
    for early in range(1, l):
        if values(early) <= floor:
            last_bad = early
    while run < p:
        v = values(l)
        point = points[(l - u) % p]
        if v <= floor:
            last_bad = l
        run = run + 1 if point - abs(v - point) > floor else 0
        l += 1
    return last_bad + 1


def splice(
    targets: Sequence[Tuple[ModuliSpec, Fraction]],
    epsilons: Sequence[Fraction],
    budget: int = 10_000,
) -> SpliceResult:
    """Choose cut indices, emit the spliced word, and verify it exactly.

    Raises:
        InputError: On mismatched lengths, non-positive or increasing epsilons,
            or a target that is not the liminf of its spec.
        BudgetExceededError: When a search passes ``budget`` indices.
    """
    if not targets:
        raise InputError("At least one target is required")
    if len(targets) != len(epsilons):
        raise InputError("Each target needs exactly one epsilon")
    eps = [Fraction(e) for e in epsilons]
    if any(e <= 0 for e in eps):
        raise InputError("Epsilons must be positive")
    if any(b > a for a, b in zip(eps, eps[1:])):
        raise InputError("Epsilons must be non-increasing")
    alphas: List[Fraction] = []
    for spec, alpha in targets:
        alpha = Fraction(alpha)
        if liminf(spec) != alpha:
            raise InputError(
                f"Target {format_rational(alpha)} is not the liminf of {spec} "
                f"({format_rational(liminf(spec))})"
            )
        alphas.append(alpha)

    l_cuts: List[int] = []
    k_cuts: List[int] = []
    word: List[int] = []
    for n, (spec, _) in enumerate(targets):
        values = _PrefixCache(spec, budget)
        alpha, e = alphas[n], eps[n]
        if n == 0:
            l, min_len = 0, 1
        else:
            l = tail_start(values, alpha, e)
            while not abs(values(l) - alpha) < e:
                l += 1
            ratio = max(
                5 * eps[n - 1] / e,
                (2 * eps[n - 1] + abs(alphas[n - 1] - alpha) + e) / e,
            )
            min_len = _min_exponent(ratio)
        k = l + min_len
        while not abs(values(k) - alpha) < e:
            k += 1
        l_cuts.append(l)
        k_cuts.append(k)
        word.extend(spec.prefix(k)[l:])
        logger.debug(f"Segment {n + 1}: l={l}, k={k}")

    plan = SplicePlan(tuple(alphas), tuple(eps), tuple(l_cuts), tuple(k_cuts), tuple(word))
    return SpliceResult(plan, verify_plan(plan))


def verify_plan(plan: SplicePlan) -> Certificate:
    """Check the splice bounds on every segment.

    ``|v(a_N) - alpha_N| < 2 eps_N`` and ``v(l) > alpha_N - 3 eps_N`` on ``(a_N, a_{N+1}]``.
    """
    builder = CertificateBuilder(f"splice targets={len(plan.alphas)}")
    values = [v for _, v in islice(prefix_values(ModuliSpec((), plan.word)), len(plan.word))]
    bounds = plan.boundaries
    for N, a in enumerate(bounds):
        error = abs(values[a - 1] - plan.alphas[N])
        builder.check(error < 2 * plan.epsilons[N], f"a_{N + 1}={a} |value - alpha|", error)
    for N in range(len(bounds) - 1):
        floor = plan.alphas[N] - 3 * plan.epsilons[N]
        segment_min = min(values[bounds[N] : bounds[N + 1]])
        builder.check(segment_min > floor, f"min value on (a_{N + 1}, a_{N + 2}]", segment_min)
    builder.record("word length", len(plan.word))
    return builder.build()
