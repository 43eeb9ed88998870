"""Exact values of T_{m_k} o ... o T_{m_1}(0), their limit points, and bound checks.

For an eventually periodic sequence with preperiod length ``u`` and period
``w = (w_1, ..., w_p)``, the prefix value at index ``u + jp + r`` equals
``T_{(w_r, ..., w_1)} o (T_{(w_p, ..., w_1)})^j`` applied to the value at
``u``. The inner power converges to ``Fix(T_{(w_p, ..., w_1)})``, so the
subsequence with residue ``r`` converges to the fixed point of the rotation
``(w_r, ..., w_1, w_p, ..., w_{r+1})`` of the reversed period. The preperiod
only fixes the seed and drops out in the limit.
"""

import bisect
import logging
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import DomainError, InputError
from .exact_core import (
    Interval,
    digit_map,
    format_rational,
    map_interval,
    word_fixed_point,
    word_image,
    word_map,
)
from .models import CertificateBuilder, Certificate, LimitPointSet, ModuliSpec, format_word
from .utils import occurs_cyclically

logger = logging.getLogger(__name__)

LEMMA_V_BOUND = Fraction(13, 31)
LEMMA_V_ALPHABET = frozenset({2, 3, 4})
BINARY_BASE = Interval(Fraction(1, 5), Fraction(2, 5))


def prefix_values(spec: ModuliSpec) -> Iterator[Tuple[int, Fraction]]:
    """Yield ``(k, T_{m_k} o ... o T_{m_1}(0))`` for k = 1, 2, ..."""
    # value a/q with q = m_1...m_k; T_m(a/q) = (q - a) / (m q)
    a, q, k = 0, 1, 0
    while True:
        k += 1
        m = spec.digit(k)
        a, q = q - a, m * q
        yield k, Fraction(a, q)


def evaluate_prefix(spec: ModuliSpec, k: int) -> Fraction:
    """Exact ``T_{m_k} o ... o T_{m_1}(0)``.

    Raises:
        InputError: If ``k < 1``.
    """
    if k < 1:
        raise InputError(f"Prefix length must be >= 1, got {k}")
    return word_map(tuple(reversed(spec.prefix(k))))(0)


def projection(spec: ModuliSpec) -> Fraction:
    """Natural projection ``sum (-1)^{k-1} / (m_1...m_k)`` of the sequence."""
    value = word_fixed_point(spec.period)
    if spec.preperiod:
        value = word_map(spec.preperiod)(value)
    return value


def rotation_word(period: Sequence[int], r: int) -> Tuple[int, ...]:
    """Reversed-period rotation ``(w_r, ..., w_1, w_p, ..., w_{r+1})``."""
    rev = tuple(reversed(period))
    p = len(rev)
    return rev[p - r :] + rev[: p - r]


def residue_limit_points(spec: ModuliSpec) -> Tuple[Fraction, ...]:
    """Limit point of the prefix values with index ``k = u + jp + r``, indexed by r."""
    return tuple(word_fixed_point(rotation_word(spec.period, r)) for r in range(len(spec.period)))


def limit_points(spec: ModuliSpec) -> LimitPointSet:
    points = tuple(sorted(set(residue_limit_points(spec))))
    return LimitPointSet(points, spec.period)


def liminf(spec: ModuliSpec) -> Fraction:
    return limit_points(spec).liminf


def limsup(spec: ModuliSpec) -> Fraction:
    return limit_points(spec).limsup


def g(x: Fraction) -> Fraction:
    """``g(x) = 2 / (1 + x)``, mapping the prefix spectrum onto LSPAC."""
    if x == -1:
        raise DomainError("g is undefined at -1")
    return 2 / (1 + Fraction(x))


def g_inverse(y: Fraction) -> Fraction:
    if y == 0:
        raise DomainError("g^-1 is undefined at 0")
    return 2 / Fraction(y) - 1


def lspac_value(spec: ModuliSpec) -> Fraction:
    """``limsup 2/(1+D_k) = 2/(1+liminf D_k)`` since g is decreasing."""
    return g(liminf(spec))


def ghat_apply(m: int, x: Fraction) -> Fraction:
    """``G_m(x) = 2mx / ((m+2)x - 2)``, the conjugate ``g o T_m o g^-1``.

    Raises:
        DomainError: At the pole ``(m+2)x = 2``.
    """
    digit_map(m)
    x = Fraction(x)
    denominator = (m + 2) * x - 2
    if denominator == 0:
        raise DomainError(f"G_{m} has a pole at {format_rational(x)}")
    return 2 * m * x / denominator


def invariant_interval(K: int) -> Interval:
    """``[1/(2K-1), (K-1)/(2K-1)]``, mapped into itself by T_2..T_K."""
    if K < 2:
        raise InputError(f"Alphabet bound must be >= 2, got {K}")
    return Interval(Fraction(1, 2 * K - 1), Fraction(K - 1, 2 * K - 1))


def alphabet_bounds_check(K: int) -> Certificate:
    base = invariant_interval(K)
    builder = CertificateBuilder(f"alphabet-bounds K={K}")
    builder.record("interval", base)
    for m in range(2, K + 1):
        image = map_interval(digit_map(m), base)
        builder.check(image.issubset(base), f"T_{m} image", image)
    return builder.build()


def tail_bound_check(spec: ModuliSpec, K: int) -> Certificate:
    """liminf <= 1/(K+1) when a digit >= K recurs.

    Raises:
        InputError: If no period digit reaches K.
    """
    if K < 2:
        raise InputError(f"Digit bound must be >= 2, got {K}")
    if max(spec.period) < K:
        raise InputError(f"Period {format_word(spec.period)} has no digit >= {K}")
    value = liminf(spec)
    bound = Fraction(1, K + 1)
    builder = CertificateBuilder(f"tail-bound K={K}")
    builder.check(value <= bound, "liminf", value)
    builder.record("bound", bound)
    return builder.build()


def pattern_bounds_check(spec: ModuliSpec, word: Sequence[int]) -> Certificate:
    """Bound liminf by ``Fix(T_word)``.

    Odd-length words recurring (reversed) in the sequence give an upper bound.
    Even-length words over {2,3} whose cylinder image of [1/5,2/5] holds the
    liminf give a lower bound.

    Raises:
        InputError: If the precondition for the word's parity does not hold.
    """
    word = tuple(word)
    fix = word_fixed_point(word)
    value = liminf(spec)
    builder = CertificateBuilder(f"pattern-bound {format_word(word)}")
    if len(word) % 2 == 1:
        if not occurs_cyclically(tuple(reversed(word)), spec.period):
            raise InputError(
                f"Reversed word {format_word(word[::-1])} does not recur in period "
                f"{format_word(spec.period)}"
            )
        builder.check(value <= fix, "liminf", value)
        builder.record("fixed point", fix)
        builder.note("Odd word recurring infinitely often bounds the liminf above.")
    else:
        digits = set(word) | set(spec.preperiod) | set(spec.period)
        if not digits <= {2, 3}:
            raise InputError("Even-word bound needs spec and word digits in {2,3}")
        cylinder = word_image(word, BINARY_BASE)
        if not cylinder.contains(value):
            raise InputError(f"liminf {format_rational(value)} is outside cylinder {cylinder}")
        builder.check(value >= fix, "liminf", value)
        builder.record("fixed point", fix)
        builder.record("cylinder", cylinder)
        builder.note("Even word cylinder containing the liminf bounds it below.")
    return builder.build()


def is_lemma_v_admissible(period: Sequence[int]) -> bool:
    """Cyclically, every ``(m_{i-1}, m_i) = (2, 4)`` is preceded by ``m_{i-2} = 2``."""
    p = len(period)
    for i in range(p):
        if period[i] == 4 and period[i - 1] == 2 and period[(i - 2) % p] != 2:
            return False
    return True


def lemma_v_check(spec: ModuliSpec) -> Certificate:
    """limsup <= 13/31 for admissible periods over {2,3,4}.

    Raises:
        InputError: If the period uses other digits or is not admissible.
    """
    if not set(spec.period) <= LEMMA_V_ALPHABET:
        raise InputError("Period digits must lie in {2,3,4}")
    if not is_lemma_v_admissible(spec.period):
        raise InputError(f"Period {format_word(spec.period)} has a 2,4 not preceded by 2")
    base = invariant_interval(4)
    builder = CertificateBuilder("lemma-v")
    value = limsup(spec)
    builder.check(value <= LEMMA_V_BOUND, "limsup", value)
    builder.record("bound", LEMMA_V_BOUND)

    # the only three-digit cylinder reaching above the others is (2,4,2)
    top = word_image((2, 4, 2), base).lo
    others = max(
        word_image((i, j, k), base).hi
        for i in (2, 3, 4)
        for j in (2, 3, 4)
        for k in (2, 3, 4)
        if (i, j, k) != (2, 4, 2)
    )
    builder.check(top >= others, "min T_(2,4,2)(I)", top)
    builder.record("max other cylinders", others)
    # the low end 23/56 is the image of 1/7 under T_(2,4,2,2)
    attained = word_map((2, 4, 2, 2))(Fraction(1, 7))
    builder.check(attained == top, "T_(2,4,2,2)(1/7)", attained)
    return builder.build()


def merge_intervals(intervals: Iterable[Interval]) -> List[Interval]:
    """Sorted union of closed intervals; touching intervals merge."""
    merged: List[Interval] = []
    for iv in sorted(intervals, key=lambda i: (i.lo, i.hi)):
        if merged and iv.lo <= merged[-1].hi:
            if iv.hi > merged[-1].hi:
                merged[-1] = Interval(merged[-1].lo, iv.hi)
        else:
            merged.append(iv)
    return merged


def _check_invariant(digits: Sequence[int], base: Interval) -> Tuple[int, ...]:
    digits = tuple(sorted(set(digits)))
    if not digits:
        raise InputError("Digit set must be non-empty")
    for m in digits:
        if not map_interval(digit_map(m), base).issubset(base):
            raise InputError(f"T_{m} does not map {base} into itself")
    return digits


def attractor_refine(digits: Iterable[int], base: Interval, depth: int) -> List[Interval]:
    """Union of all depth-``depth`` cylinder images of ``base``, merged.

    Applying each ``T_m`` to the merged union of the previous level gives the
    same set as enumerating every word, so each level is merged before the
    next.

    Raises:
        InputError: If ``depth < 1`` or some map leaves ``base``.
    """
    if depth < 1:
        raise InputError(f"Depth must be >= 1, got {depth}")
    maps = [digit_map(m) for m in _check_invariant(tuple(digits), base)]
    level = [base]
    for _ in range(depth):
        level = merge_intervals(map_interval(f, iv) for f in maps for iv in level)
    logger.debug(f"Refinement at depth {depth} has {len(level)} intervals")
    return level


def refinement_contains(intervals: Sequence[Interval], x: Fraction) -> bool:
    """Membership in a merged, sorted interval list."""
    i = bisect.bisect_right([iv.lo for iv in intervals], x) - 1
    return i >= 0 and intervals[i].contains(x)


def refinement_hits(
    digits: Iterable[int], base: Interval, depth: int, target: Interval
) -> List[Tuple[Tuple[int, ...], Interval]]:
    """Depth-``depth`` cylinders ``(word, T_word(base))`` that meet ``target``.

    Cylinders missing the target are pruned with all their descendants.
    """
    digits = _check_invariant(tuple(digits), base)
    hits: List[Tuple[Tuple[int, ...], Interval]] = []
    stack: List[Tuple[Tuple[int, ...], Interval]] = [((), base)]
    while stack:
        word, image = stack.pop()
        if len(word) == depth:
            hits.append((word, image))
            continue
        for m in digits:
            child_word = word + (m,)
            child = word_image(child_word, base)
            if child.intersects(target):
                stack.append((child_word, child))
    return sorted(hits)
