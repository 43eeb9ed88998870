"""Exact rationals, closed intervals and affine digit maps.

Every scalar is a ``fractions.Fraction``; ``Fraction`` keeps numerator and
denominator in lowest terms after each operation, so equality is value
equality and ordering matches the real line.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import InputError, NotAContractionError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

# Words shorter than this are composed left to right.
_LINEAR_WORD_LIMIT = 64


def as_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"Expected a rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"Expected a rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string.

    Raises:
        InputError: If the text is not an exact rational literal.
    """
    cleaned = text.strip()
    if not cleaned:
        raise InputError("Empty rational literal")
    num_text, sep, den_text = cleaned.partition("/")
    try:
        numerator = int(num_text)
        denominator = int(den_text) if sep else 1
    except ValueError as e:
        raise InputError(f"Invalid rational literal {text!r}: expected p/q") from e
    if denominator == 0:
        raise InputError(f"Invalid rational literal {text!r}: zero denominator")
    return Fraction(numerator, denominator)


def decimal_display(value: Fraction, digits: int) -> str:
    """Render ``value`` with ``digits`` decimals, truncated toward zero.

    The result is for reading only; checks never consume it.
    """
    if digits < 0:
        raise InputError(f"Decimal digit count must be non-negative, got {digits}")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value.numerator) * 10**digits // value.denominator
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise InputError(f"Interval endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def contains_open(self, x: Fraction) -> bool:
        """Membership in the interior ``(lo, hi)``."""
        return self.lo < x < self.hi

    def issubset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersects_open(self, other: "Interval") -> bool:
        """True when this closed interval meets the interior of ``other``."""
        return self.lo < other.hi and other.lo < self.hi

    def intersection(self, other: "Interval") -> Optional["Interval"]:
        if not self.intersects(other):
            return None
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def to_dict(self) -> Dict[str, str]:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


@dataclass(frozen=True)
class AffineMap:
    """The map ``x -> offset + slope * x``."""

    offset: Fraction
    slope: Fraction

    def __post_init__(self):
        object.__setattr__(self, "offset", as_rational(self.offset))
        object.__setattr__(self, "slope", as_rational(self.slope))

    def __call__(self, x: RationalLike) -> Fraction:
        return self.offset + self.slope * as_rational(x)

    @property
    def is_contraction(self) -> bool:
        return abs(self.slope) < 1

    @property
    def preserves_orientation(self) -> bool:
        return self.slope > 0


IDENTITY = AffineMap(Fraction(0), Fraction(1))


def digit_map(m: int) -> AffineMap:
    """Return ``T_m(x) = (1 - x) / m``.

    Raises:
        NotAContractionError: If ``m < 2``.
    """
    if isinstance(m, bool) or not isinstance(m, int):
        raise InputError(f"Digit must be an integer, got {m!r}")
    if m < 2:
        raise NotAContractionError(f"Digit {m} < 2 does not define a contraction")
    return AffineMap(Fraction(1, m), Fraction(-1, m))


def compose(f: AffineMap, g: AffineMap) -> AffineMap:
    """Return ``f o g``."""
    return AffineMap(f.offset + f.slope * g.offset, f.slope * g.slope)


def fixed_point(f: AffineMap) -> Fraction:
    """Unique fixed point ``u / (1 - v)`` of a contraction.

    Raises:
        NotAContractionError: If ``|v| >= 1``.
    """
    if not f.is_contraction:
        raise NotAContractionError(f"Map with slope {f.slope} is not a contraction")
    return f.offset / (1 - f.slope)


def map_interval(f: AffineMap, interval: Interval) -> Interval:
    """Exact image of ``interval`` under ``f``; endpoints swap when the slope is negative."""
    a, b = f(interval.lo), f(interval.hi)
    return Interval(a, b) if f.preserves_orientation else Interval(b, a)


class IntervalOrder(NamedTuple):
    precedes: bool
    gap: Optional[Interval]
    distance: Fraction


def interval_order(first: Interval, second: Interval) -> IntervalOrder:
    """Compare two intervals.

    ``precedes`` holds iff ``first.hi < second.lo``; ``gap`` is then the
    middle interval ``[first.hi, second.lo]``. ``distance`` is the set
    distance, zero when the intervals meet.
    """
    precedes = first.hi < second.lo
    gap = Interval(first.hi, second.lo) if precedes else None
    distance = max(Fraction(0), second.lo - first.hi, first.lo - second.hi)
    return IntervalOrder(precedes, gap, distance)


def _check_word(word: Sequence[int]) -> Tuple[int, ...]:
    digits = tuple(word)
    if not digits:
        raise InputError("Digit word must be non-empty")
    for m in digits:
        if isinstance(m, bool) or not isinstance(m, int):
            raise InputError(f"Digit must be an integer, got {m!r}")
        if m < 2:
            raise NotAContractionError(f"Digit {m} < 2 does not define a contraction")
    return digits


def _word_integers(digits: Sequence[int]) -> Tuple[int, int, int]:
    """Integer form ``(a, s, q)`` of ``T_word``: ``x -> (a + s*x) / q`` with ``s = +-1``.

    Balanced splitting keeps the big products Karatsuba-sized.
    """
    if len(digits) <= _LINEAR_WORD_LIMIT:
        a, s, q = 0, 1, 1
        # innermost digit first: T_m o (a + s x)/q = (q - a - s x) / (m q)
        for m in reversed(digits):
            a, s, q = q - a, -s, m * q
        return a, s, q
    half = len(digits) // 2
    a1, s1, q1 = _word_integers(digits[:half])
    a2, s2, q2 = _word_integers(digits[half:])
    return a1 * q2 + s1 * a2, s1 * s2, q1 * q2


def word_map(word: Sequence[int]) -> AffineMap:
    """Return ``T_{i_1} o ... o T_{i_n}`` for ``word = (i_1, ..., i_n)``."""
    a, s, q = _word_integers(_check_word(word))
    return AffineMap(Fraction(a, q), Fraction(s, q))


def word_fixed_point(word: Sequence[int]) -> Fraction:
    """Fixed point of ``T_word`` with a single final reduction."""
    a, s, q = _word_integers(_check_word(word))
    return Fraction(a, q - s)


def word_image(word: Sequence[int], interval: Interval) -> Interval:
    return map_interval(word_map(word), interval)
