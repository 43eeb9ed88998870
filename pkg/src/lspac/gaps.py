"""Finite checks behind the gaps near 1/6 and the null set on [3/17, 1/3]."""

import itertools
import logging
import time
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InputError
from .exact_core import Interval, word_fixed_point, word_image, word_map
from .models import Certificate, CertificateBuilder, ModuliSpec, format_word
from .spectrum import invariant_interval, liminf
from .utils import format_duration, lyndon_words, parallel_map

logger = logging.getLogger(__name__)

SIXTH = Fraction(1, 6)
THIRD_ALPHABET = (2, 3, 4)

# Admissible (m_i, m_{i-1}, m_{i-2}, m_{i-3}) with no (4, 2) step.
ADMISSIBLE_QUADRUPLES: Tuple[Tuple[int, int, int, int], ...] = (
    (2, 2, 2, 2), (2, 2, 2, 3), (2, 2, 2, 4), (2, 2, 3, 2), (2, 2, 3, 3), (2, 2, 3, 4),
    (2, 2, 4, 3), (2, 2, 4, 4), (2, 3, 2, 2), (2, 3, 2, 3), (2, 3, 2, 4), (2, 3, 3, 2),
    (2, 3, 3, 3), (2, 3, 3, 4), (2, 3, 4, 3), (2, 3, 4, 4), (2, 4, 3, 2), (2, 4, 3, 3),
    (2, 4, 3, 4), (2, 4, 4, 3), (2, 4, 4, 4), (3, 2, 2, 2), (3, 2, 2, 3), (3, 2, 2, 4),
    (3, 2, 3, 2), (3, 2, 3, 3), (3, 2, 3, 4), (3, 2, 4, 3), (3, 2, 4, 4), (3, 3, 2, 2),
    (3, 3, 2, 3), (3, 3, 2, 4), (3, 3, 3, 2), (3, 3, 3, 3), (3, 3, 3, 4), (3, 3, 4, 3),
    (3, 3, 4, 4), (3, 4, 3, 2), (3, 4, 3, 3), (3, 4, 3, 4), (3, 4, 4, 3), (3, 4, 4, 4),
    (4, 3, 2, 2), (4, 3, 2, 3), (4, 3, 2, 4), (4, 3, 3, 2), (4, 3, 3, 3), (4, 3, 3, 4),
    (4, 3, 4, 3), (4, 3, 4, 4), (4, 4, 3, 2), (4, 4, 3, 3), (4, 4, 3, 4), (4, 4, 4, 3),
    (4, 4, 4, 4),
)

NULL_INTERVAL = Interval(Fraction(3, 17), Fraction(1, 3))


def gap_interval(n: int) -> Interval:
    """Closure of the n-th gap ``(1/6 + 1/(93*4^n), 1/6 + 1/(84*4^n))``."""
    if n < 0:
        raise InputError(f"Gap index must be >= 0, got {n}")
    return Interval(SIXTH + Fraction(1, 93 * 4**n), SIXTH + Fraction(1, 84 * 4**n))


def _word_liminf(word: Tuple[int, ...]) -> Fraction:
    return liminf(ModuliSpec((), word))


def _first_gap_hit(value: Fraction, n_max: int) -> Optional[int]:
    for n in range(n_max + 1):
        if gap_interval(n).contains_open(value):
            return n
    return None


def periodic_liminfs(
    alphabet: Tuple[int, ...], period_bound: int, workers: int = 0
) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """``(word, liminf)`` for every Lyndon word up to ``period_bound``, in word order."""
    started = time.monotonic()
    words = list(lyndon_words(alphabet, period_bound))
    values = parallel_map(_word_liminf, words, workers)
    logger.info(
        f"Computed {len(words)} periodic liminfs over {alphabet} "
        f"in {format_duration(time.monotonic() - started)}"
    )
    return list(zip(words, values))


def gap_checks(n_max: int, period_bound: int = 10, workers: int = 0) -> Certificate:
    """Exact checks for the gaps ``(1/6 + 1/(93*4^n), 1/6 + 1/(84*4^n))``.

    Covers the two-digit cylinders of [1/7, 3/7] other than (4,2), the
    closed forms of the gap endpoints for ``N <= n_max``, and a scan of
    periodic words over {2,3,4} up to ``period_bound``.
    """
    if n_max < 0:
        raise InputError(f"n_max must be >= 0, got {n_max}")
    base = invariant_interval(4)
    outer = Interval(SIXTH, SIXTH + Fraction(1, 84))
    builder = CertificateBuilder(f"gaps n_max={n_max}")

    for k, l in itertools.product(THIRD_ALPHABET, repeat=2):
        if (k, l) == (4, 2):
            continue
        image = word_image((k, l), base)
        builder.check(not image.intersects_open(outer), f"T_{k}T_{l}(I)", image)

    for n0 in range(n_max + 1):
        lower = word_map((4,) + (2,) * (2 * n0 + 1))(Fraction(13, 31))
        builder.check(
            lower == SIXTH + Fraction(1, 93 * 4**n0), f"T_4 T_2^{2 * n0 + 1}(13/31)", lower
        )
        upper = word_map((4,) + (2,) * (2 * n0 + 2))(Fraction(2, 7))
        builder.check(
            upper == SIXTH + Fraction(1, 84 * 4 ** (n0 + 1)), f"T_4 T_2^{2 * n0 + 2}(2/7)", upper
        )

    scanned = periodic_liminfs(THIRD_ALPHABET, period_bound, workers)
    for word, value in scanned:
        n = _first_gap_hit(value, n_max)
        if n is not None:
            builder.check(False, f"liminf per:{format_word(word)} in gap {n}", value)
    builder.record("periodic words scanned", len(scanned))
    builder.record("gap 0", gap_interval(0))
    return builder.build()


def has_four_two_step(word: Tuple[int, ...]) -> bool:
    return any(a == 4 and b == 2 for a, b in zip(word, word[1:]))


def measure_zero_certificate() -> Certificate:
    """The 55 admissible four-digit maps contract total length below 1."""
    enumerated = tuple(
        t for t in itertools.product(THIRD_ALPHABET, repeat=4) if not has_four_two_step(t)
    )
    total = sum((Fraction(1, a * b * c * d) for a, b, c, d in enumerated), Fraction(0))
    builder = CertificateBuilder("measure-zero")
    builder.check(len(enumerated) == 55, "count", len(enumerated))
    builder.check(
        set(enumerated) == set(ADMISSIBLE_QUADRUPLES)
        and len(ADMISSIBLE_QUADRUPLES) == len(set(ADMISSIBLE_QUADRUPLES)),
        "matches admissible table",
        len(set(enumerated) ^ set(ADMISSIBLE_QUADRUPLES)),
    )
    builder.check(total < 1, "sum", total)

    # a (4,2) step recurring pushes the liminf down to at most max_a Fix(T_4 T_2 T_a)
    fixes = [word_fixed_point((4, 2, a)) for a in THIRD_ALPHABET]
    reduction = max(fixes)
    builder.check(reduction == NULL_INTERVAL.lo, "max Fix(T_4 T_2 T_a)", reduction)
    builder.record("interval", NULL_INTERVAL)
    builder.note("Left endpoint 3/17 coincides with max Fix(T_4 T_2 T_a).")
    return builder.build()
