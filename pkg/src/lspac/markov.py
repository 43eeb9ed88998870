"""The word family M(n), the constants lambda_n and gamma_n, and their ordering checks.

``M(1) = (2)``, ``M(2) = (3)`` and ``M(n) = M(n-1) M(n-2) M(n-2)``.
``lambda_n = Fix(T_{M(n)})`` decreases to ``lambda_0``, the alternating sum
over the limiting word ``M = (3, 2, 2, 3, 3, 3, 2, 2, 3, 2, 2, ...)``.
The ordering verified here is ``lambda_{n+1} < lambda_n``, equivalently
``gamma_n`` increasing.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

from .config import config
from .errors import BudgetExceededError, InputError
from .exact_core import Interval, format_rational, interval_order, word_fixed_point, word_image
from .gaps import periodic_liminfs
from .models import (
    Certificate,
    CertificateBuilder,
    LambdaValue,
    MarkovWord,
    ModuliSpec,
    format_word,
)
from .spectrum import BINARY_BASE, g, limit_points, refinement_hits
from .utils import rotations

logger = logging.getLogger(__name__)

BINARY_ALPHABET = (2, 3)
CENSUS_GAPS = 5

# increasing order of the six three-digit cylinder images of J
FIRST_ORDER_CHAIN: Tuple[Tuple[int, ...], ...] = (
    (3, 2, 2),
    (3, 3, 3),
    (3, 3, 2),
    (2, 2, 3),
    (2, 3, 3),
    (2, 3, 2),
)


def markov_length(n: int) -> int:
    """``l_n = (2^n - (-1)^n) / 3``."""
    return (2**n - (-1) ** n) // 3


@lru_cache(maxsize=8)
def _markov_tuple(n: int) -> Tuple[int, ...]:
    previous, current = (2,), (3,)
    if n == 1:
        return previous
    for _ in range(n - 2):
        previous, current = current, current + previous + previous
    return current


def markov_word(n: int, max_n: Optional[int] = None) -> MarkovWord:
    """Return ``M(n)``.

    Raises:
        InputError: If ``n < 1``.
        BudgetExceededError: If ``n`` passes the configured maximum.
    """
    max_n = config.markov_max_n if max_n is None else max_n
    if n < 1:
        raise InputError(f"Markov word index must be >= 1, got {n}")
    if n > max_n:
        raise BudgetExceededError(f"Markov word index {n} exceeds budget {max_n}", max_n)
    return MarkovWord(n, _markov_tuple(n))


def limiting_digits(count: int) -> Tuple[int, ...]:
    """First ``count`` digits of the limiting word M."""
    if count < 1:
        raise InputError(f"Digit count must be >= 1, got {count}")
    n = 2
    while markov_length(n) < count:
        n += 1
    return markov_word(n).word[:count]


def lambda_n(n: int, max_n: Optional[int] = None) -> LambdaValue:
    max_n = config.lambda_max_n if max_n is None else max_n
    if n > max_n:
        raise BudgetExceededError(f"lambda index {n} exceeds budget {max_n}", max_n)
    value = word_fixed_point(markov_word(n).word)
    return LambdaValue(n, value, g(value))


def lambda0_enclosure(terms: int) -> Interval:
    """``[S_t, S_{t+1}]`` (ordered) for partial sums of the alternating series.

    Terms decrease, so consecutive partial sums bracket the limit and each
    enclosure nests inside the previous one.
    """
    if terms < 2:
        raise InputError(f"Enclosure needs at least two terms, got {terms}")
    digits = limiting_digits(terms + 1)
    partial = Fraction(0)
    product = 1
    sums: List[Fraction] = []
    for l, m in enumerate(digits):
        product *= m
        partial += Fraction((-1) ** l, product)
        sums.append(partial)
    lo, hi = sorted(sums[-2:])
    return Interval(lo, hi)


def lambda0_value(terms: int) -> LambdaValue:
    enclosure = lambda0_enclosure(terms)
    return LambdaValue(0, enclosure, Interval(g(enclosure.hi), g(enclosure.lo)))


def lambda_table(n_max: int) -> List[LambdaValue]:
    return [lambda_n(n) for n in range(1, n_max + 1)]


def lambda_witness_check(n: int) -> Certificate:
    """The periodic sequence repeating reversed ``M(n)`` has liminf ``lambda_n``."""
    word = markov_word(n).word
    spec = ModuliSpec((), tuple(reversed(word)))
    value = lambda_n(n).value
    points = limit_points(spec)
    builder = CertificateBuilder(f"lambda-witness n={n}")
    builder.check(points.liminf == value, "liminf", points.liminf)
    builder.record("lambda_n", value)
    for shift, rotated in enumerate(rotations(word)[1:], start=1):
        fix = word_fixed_point(rotated)
        builder.check(fix > value, f"Fix(T_sigma^{shift} M)", fix, keep=False)
    builder.record("distinct limit points", len(points.points))
    return builder.build()


class Separation(NamedTuple):
    delta: Fraction
    J: Interval


def delta_and_J() -> Separation:
    """``delta`` is a third of the distance between T_2 and T_3 images of [1/5, 2/5]."""
    left = word_image((3,), BINARY_BASE)
    right = word_image((2,), BINARY_BASE)
    delta = interval_order(left, right).distance / 3
    return Separation(delta, Interval(BINARY_BASE.lo - delta, BINARY_BASE.hi + delta))


def separation_certificate() -> Certificate:
    delta, J = delta_and_J()
    builder = CertificateBuilder("separation")
    builder.record("delta", delta)
    builder.record("J", J)
    image3, image2 = word_image((3,), J), word_image((2,), J)
    builder.check(interval_order(image3, image2).precedes, "T_3(J)", image3)
    builder.check(image2.issubset(J), "T_2(J)", image2)
    builder.check(image3.issubset(J), "T_3(J) inside J", image3)
    return builder.build()


def verify_shift_order(n: int) -> Certificate:
    """``T_{M(n)}(J)`` precedes ``T_{sigma^l M(n)}(J)`` for every proper shift."""
    if n < 3:
        raise InputError(f"Shift order starts at n = 3, got {n}")
    _, J = delta_and_J()
    word = markov_word(n).word
    head = word_image(word, J)
    builder = CertificateBuilder(f"shift-order n={n}")
    for shift, rotated in enumerate(rotations(word)[1:], start=1):
        image = word_image(rotated, J)
        builder.check(interval_order(head, image).precedes, f"sigma^{shift}", image, keep=False)
    if n == 3:
        images = [word_image(w, J) for w in FIRST_ORDER_CHAIN]
        for i in range(len(images) - 1):
            label = f"T_{format_word(FIRST_ORDER_CHAIN[i])}(J) before next"
            builder.check(interval_order(images[i], images[i + 1]).precedes, label, images[i])
    builder.record("T_M(J)", head)
    builder.record("comparisons", len(word) - 1)
    return builder.build()


def verify_adjacent_gap(
    n: int,
    depth: Optional[int] = None,
    period_bound: Optional[int] = None,
    workers: int = 0,
) -> Certificate:
    """No {2,3} attractor point or scanned liminf lies between lambda_{n+1} and lambda_n.

    ``depth`` defaults to ``l_n + 1``, deep enough to resolve the middle gap.
    """
    if n < 2:
        raise InputError(f"Adjacent gap check starts at n = 2, got {n}")
    depth = markov_length(n) + 1 if depth is None else depth
    if depth < 1:
        raise InputError(f"Depth must be >= 1, got {depth}")
    period_bound = config.period_bound if period_bound is None else period_bound
    _, J = delta_and_J()
    word = markov_word(n).word
    parent = markov_word(n - 1).word
    image = word_image(word, J)
    doubled = word_image(parent + parent, J)
    upper, lower = lambda_n(n).value, lambda_n(n + 1).value

    builder = CertificateBuilder(f"adjacent-gap n={n}")
    builder.check(lower < upper, "lambda_{n+1}", lower)
    builder.record("lambda_n", upper)
    if n >= 3:
        builder.check(image.issubset(word_image(parent, J)), "T_M(n)(J) inside T_M(n-1)(J)", image)
    order = interval_order(image, doubled)
    builder.check(order.precedes, "T_M(n)(J) before T_M(n-1)M(n-1)(J)", image)
    if order.gap is not None:
        hits = refinement_hits(BINARY_ALPHABET, BINARY_BASE, depth, order.gap)
        for hit_word, hit in hits:
            overlap = hit.intersection(order.gap)
            builder.check(False, f"cylinder {format_word(hit_word)} meets mid", overlap)
        builder.record("mid", order.gap)

    open_gap = Interval(lower, upper)
    scanned = periodic_liminfs(BINARY_ALPHABET, period_bound, workers)
    for w, value in scanned:
        if open_gap.contains_open(value):
            builder.check(False, f"liminf per:{format_word(w)}", value)
    builder.record("periodic words scanned", len(scanned))
    builder.record("depth", depth)
    return builder.build()


class CensusRow(NamedTuple):
    word: Tuple[int, ...]
    liminf: Fraction
    classification: str


class ScanResult(NamedTuple):
    certificate: Certificate
    census: List[CensusRow]


def census_cut(enclosure_terms: int = 20) -> Tuple[Fraction, int]:
    """Upper end of a lambda_0 enclosure lying strictly below lambda_{CENSUS_GAPS + 1}.

    Starts from at least ``l_{CENSUS_GAPS + 2}`` terms and doubles until the
    enclosure separates from that lambda value. Returns the cut and the terms used.
    """
    floor = lambda_n(CENSUS_GAPS + 1).value
    terms = max(enclosure_terms, markov_length(CENSUS_GAPS + 2))
    cut = lambda0_enclosure(terms).hi
    while cut >= floor:
        terms *= 2
        cut = lambda0_enclosure(terms).hi
    logger.debug(f"lambda_0 cut settled at {terms} terms")
    return cut, terms


def theorem1_scan(period_bound: int, enclosure_terms: int = 20, workers: int = 0) -> ScanResult:
    """Every periodic {2,3} liminf above the lambda_0 enclosure must be some lambda_n.

    The gaps ``(lambda_{n+1}, lambda_n)`` for ``n <= 5`` must hold no scanned liminf.

    Raises:
        InputError: If ``period_bound < 1`` or ``enclosure_terms < 2``.
    """
    if period_bound < 1:
        raise InputError(f"Period bound must be >= 1, got {period_bound}")
    if enclosure_terms < 2:
        raise InputError(f"Enclosure needs at least two terms, got {enclosure_terms}")
    cut, terms = census_cut(enclosure_terms)
    lambdas: List[Fraction] = []
    n = 1
    while True:
        value = lambda_n(n).value
        if value <= cut:
            break
        lambdas.append(value)
        n += 1
    bound = len(lambdas)
    index = {value: i + 1 for i, value in enumerate(lambdas)}
    logger.info(f"{bound} lambda values lie above the cut {format_rational(cut)}")

    builder = CertificateBuilder(f"theorem1-scan P={period_bound}")
    census: List[CensusRow] = []
    found = set()
    for word, value in periodic_liminfs(BINARY_ALPHABET, period_bound, workers):
        if value > cut:
            if value in index:
                label = f"lambda_{index[value]}"
                found.add(index[value])
            else:
                label = "unexplained"
                builder.check(False, f"per:{format_word(word)}", value)
        else:
            label = "below_cut"
        census.append(CensusRow(word, value, label))

    for k in range(1, CENSUS_GAPS + 1):
        gap = Interval(lambdas[k], lambdas[k - 1])
        for row in census:
            if gap.contains_open(row.liminf):
                builder.check(False, f"per:{format_word(row.word)} in gap {k}", row.liminf)

    builder.record("cut", cut)
    builder.record("enclosure terms", terms)
    builder.record("lambda values above cut", bound)
    builder.record("gaps checked", CENSUS_GAPS)
    builder.record("lambda values attained", len(found))
    builder.note(f"Attained: {', '.join(f'lambda_{i}' for i in sorted(found))}.")
    return ScanResult(builder.build(), census)
