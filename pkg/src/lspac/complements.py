"""Perfect additive complement pairs built from a moduli sequence.

With ``M_t = m_1 ... m_t``, the set A collects the sums over even levels
``sum e_{2i} M_{2i}`` with ``0 <= e_{2i} < m_{2i+1}``, and B the sums over odd
levels ``sum e_{2i+1} M_{2i+1}`` with ``0 <= e_{2i+1} < m_{2i+2}``. Truncated
after ``2j`` levels the pair tiles ``[0, M_{2j} - 1]`` exactly, since every
integer there has one mixed-radix expansion.
"""

import logging
from fractions import Fraction
from typing import List, NamedTuple, Optional

import numpy as np

from .errors import InputError
from .exact_core import format_rational
from .models import Certificate, CertificateBuilder, ComplementPair, ModuliSpec
from .spectrum import g, liminf

logger = logging.getLogger(__name__)

# Largest bound a pair is materialised for.
MAX_PAIR_BOUND = 10**7
# Window start below which A(x)B(x)/x is dominated by small-x effects.
SMALL_BOUND_WARNING = 4**6


class ProfileRow(NamedTuple):
    x: int
    a_count: int
    b_count: int
    ratio: Fraction


def build_pair(spec: ModuliSpec, levels: int) -> ComplementPair:
    """Materialise the truncated pair after ``levels`` mixed-radix levels.

    Raises:
        InputError: If ``levels`` is not a positive even integer or the bound
            would exceed ``MAX_PAIR_BOUND``.
    """
    if levels < 2 or levels % 2:
        raise InputError(f"Levels must be a positive even integer, got {levels}")
    radix = spec.prefix(levels)
    bound = 1
    for m in radix:
        bound *= m
    if bound > MAX_PAIR_BOUND:
        raise InputError(f"Pair bound {bound} exceeds {MAX_PAIR_BOUND}")

    A: List[int] = [0]
    B: List[int] = [0]
    weight = 1
    for t, m in enumerate(radix):
        target = A if t % 2 == 0 else B
        # higher digit outermost keeps the list sorted
        expanded = [v + e * weight for e in range(m) for v in target]
        target[:] = expanded
        weight *= m
    logger.debug(f"Built pair for {spec} at {levels} levels: |A|={len(A)}, |B|={len(B)}")
    return ComplementPair(tuple(A), tuple(B), bound, levels)


def rep_count(pair: ComplementPair, n: int) -> int:
    """Number of ``(a, b)`` in ``A x B`` with ``a + b = n``.

    Raises:
        InputError: If ``n`` lies outside ``[0, bound - 1]``.
    """
    if not 0 <= n < pair.bound:
        raise InputError(f"n must lie in [0, {pair.bound - 1}], got {n}")
    members = pair.b_members
    return sum(1 for a in pair.A if a <= n and (n - a) in members)


def representation_counts(pair: ComplementPair) -> np.ndarray:
    """``r_{A,B}(n)`` for every ``0 <= n < bound``."""
    A = np.asarray(pair.A, dtype=np.int64)
    B = np.asarray(pair.B, dtype=np.int64)
    sums = (A[:, None] + B[None, :]).ravel()
    sums = sums[sums < pair.bound]
    return np.bincount(sums, minlength=pair.bound)


def verify_pair(pair: ComplementPair, spec: Optional[ModuliSpec] = None) -> Certificate:
    """Check ``r(n) = 1`` below the bound.

    Given the generating ``spec``, also check ``A = [0, m_1) + m_1 B'`` where
    ``B'`` belongs to the shifted sequence two levels down.
    """
    counts = representation_counts(pair)
    builder = CertificateBuilder(f"perfect-complements bound={pair.bound}")
    bad = np.flatnonzero(counts != 1)
    if bad.size:
        n = int(bad[0])
        builder.check(False, f"r({n})", int(counts[n]))
    if spec is not None and pair.levels >= 4:
        m1 = spec.digit(1)
        inner = build_pair(spec.shifted(), pair.levels - 2).B
        expected = tuple(sorted(e + m1 * b for b in inner for e in range(m1)))
        builder.check(pair.A == expected, "A from shifted B", len(expected))
    builder.record("bound", pair.bound)
    builder.record("|A|*|B|", len(pair.A) * len(pair.B))
    return builder.build()


def counting_profile(pair: ComplementPair, x_max: int, x_min: int = 1) -> List[ProfileRow]:
    """Rows ``(x, A(x), B(x), A(x)B(x)/x)`` for ``x_min <= x <= x_max``.

    Raises:
        InputError: If the range leaves ``[1, bound - 1]``.
    """
    if not 1 <= x_min <= x_max < pair.bound:
        raise InputError(f"Profile range [{x_min}, {x_max}] must lie in [1, {pair.bound - 1}]")
    xs = np.arange(x_min, x_max + 1, dtype=np.int64)
    a_counts = np.searchsorted(np.asarray(pair.A, dtype=np.int64), xs, side="right")
    b_counts = np.searchsorted(np.asarray(pair.B, dtype=np.int64), xs, side="right")
    return [
        ProfileRow(int(x), int(a), int(b), Fraction(int(a) * int(b), int(x)))
        for x, a, b in zip(xs, a_counts, b_counts)
    ]


def d_k(spec: ModuliSpec, k: int) -> Fraction:
    """``D_k = 1/m_k - 1/(m_k m_{k-1}) + ... + (-1)^{k-1}/(m_k ... m_1)``."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    total = Fraction(0)
    product = 1
    sign = 1
    for j in range(k, 0, -1):
        product *= spec.digit(j)
        total += Fraction(sign, product)
        sign = -sign
    return total


def _max_ratio(pair: ComplementPair, x_min: int, x_max: int) -> ProfileRow:
    best: Optional[ProfileRow] = None
    for row in counting_profile(pair, x_max, x_min):
        if best is None or row.ratio > best.ratio:
            best = row
    assert best is not None
    return best


def theoremB_check(spec: ModuliSpec, levels: int, tolerance: Fraction) -> Certificate:
    """Compare ``max A(x)B(x)/x`` over the last level block with ``2/(1 + liminf D_k)``.

    The maximum is taken over ``m_1...m_{2j-2} <= x < m_1...m_{2j}``; below
    that, small x inflates the ratio (``A(1)B(1)/1 = 2`` for every spec).
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise InputError("Tolerance must be positive")
    pair = build_pair(spec, levels)
    if pair.bound < SMALL_BOUND_WARNING:
        logger.warning(f"Pair bound {pair.bound} is small; the ratio may sit far from its limsup")
    x_min = pair.bound // (spec.digit(levels - 1) * spec.digit(levels))
    x_min = max(x_min, 1)
    best = _max_ratio(pair, x_min, pair.bound - 1)
    target = g(liminf(spec))

    builder = CertificateBuilder(f"theorem-b {spec} levels={levels}")
    builder.check(abs(best.ratio - target) <= tolerance, "max ratio", best.ratio)
    builder.record("argmax x", best.x)
    builder.record("target", target)
    builder.record("tolerance", tolerance)
    builder.note(
        f"Target is 2/(1+liminf D_k) = {format_rational(target)}; limsup of 2/(1+D_k) "
        f"equals it because g is decreasing. Window x in [{x_min}, {pair.bound - 1}]."
    )
    return builder.build()
