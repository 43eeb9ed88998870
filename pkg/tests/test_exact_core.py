"""Tests for exact rationals, intervals and affine digit maps."""

from fractions import Fraction

import pytest

from lspac.errors import InputError, NotAContractionError
from lspac.exact_core import (
    IDENTITY,
    AffineMap,
    Interval,
    as_rational,
    compose,
    decimal_display,
    digit_map,
    fixed_point,
    format_rational,
    interval_order,
    map_interval,
    parse_rational,
    word_fixed_point,
    word_image,
    word_map,
)

F = Fraction


def _random_rational(rng, scale: int = 50) -> Fraction:
    return F(rng.randint(-scale, scale), rng.randint(1, scale))


class TestRationals:
    """Parsing and rendering of exact values."""

    def test_parse_and_format(self):
        """p/q strings parse to reduced fractions and render back."""
        assert parse_rational("6/8") == F(3, 4)
        assert parse_rational(" -2 ") == F(-2)
        assert format_rational(F(3, 4)) == "3/4"
        assert format_rational(F(10, 5)) == "2"

    @pytest.mark.parametrize("text", ["", "1/0", "0.25", "a/b", "1//2"])
    def test_parse_rejects(self, text):
        """Anything but an exact p/q literal is an input error."""
        with pytest.raises(InputError):
            parse_rational(text)

    def test_as_rational_rejects_floats_and_bools(self):
        """Floats and booleans never sneak into exact arithmetic."""
        with pytest.raises(InputError):
            as_rational(0.5)
        with pytest.raises(InputError):
            as_rational(True)

    def test_decimal_display_truncates(self):
        """Display decimals truncate toward zero."""
        assert decimal_display(F(2, 3), 4) == "0.6666"
        assert decimal_display(F(-2, 3), 2) == "-0.66"
        assert decimal_display(F(7, 2), 0) == "3"


class TestInterval:
    """Closed rational intervals."""

    def test_rejects_reversed_endpoints(self):
        """lo must not exceed hi."""
        with pytest.raises(InputError):
            Interval(F(1, 2), F(1, 3))

    def test_membership_and_containment(self):
        """Closed and open membership, subsets, width and midpoint."""
        iv = Interval(F(1, 7), F(3, 7))
        assert iv.contains(F(1, 7))
        assert not iv.contains_open(F(1, 7))
        assert Interval(F(2, 7), F(3, 7)).issubset(iv)
        assert iv.width == F(2, 7)
        assert iv.midpoint == F(2, 7)

    def test_touching_intervals_meet_but_not_in_interior(self):
        """A shared endpoint is an intersection but not an interior one."""
        left = Interval(F(5, 28), F(17, 84))
        right = Interval(F(1, 6), F(5, 28))
        assert left.intersects(right)
        assert not left.intersects_open(right)
        assert left.intersection(right) == Interval(F(5, 28), F(5, 28))
        assert Interval(0, F(1, 10)).intersection(right) is None

    def test_dict_form(self):
        """Intervals serialise as p/q strings."""
        iv = Interval(F(17, 90), F(37, 90))
        assert iv.to_dict() == {"lo": "17/90", "hi": "37/90"}
        assert str(iv) == "[17/90, 37/90]"

    def test_interval_order(self):
        """precedes, the middle gap and the set distance."""
        order = interval_order(Interval(F(1, 5), F(4, 15)), Interval(F(3, 10), F(2, 5)))
        assert order.precedes
        assert order.gap == Interval(F(4, 15), F(3, 10))
        assert order.distance == F(1, 30)
        overlap = interval_order(Interval(0, 1), Interval(F(1, 2), 2))
        assert not overlap.precedes
        assert overlap.gap is None
        assert overlap.distance == 0

    def test_interval_does_not_precede_itself(self):
        """An interval is never strictly before itself."""
        iv = Interval(F(1, 5), F(2, 5))
        order = interval_order(iv, iv)
        assert not order.precedes
        assert order.distance == 0


class TestDigitMaps:
    """T_m(x) = (1 - x)/m and its compositions."""

    def test_digit_map(self):
        """T_3 sends 0 to 1/3, fixes 1/4 and reverses orientation."""
        t3 = digit_map(3)
        assert t3(0) == F(1, 3)
        assert t3(F(1, 4)) == F(1, 4)
        assert not t3.preserves_orientation
        assert t3.is_contraction
        assert (t3.offset, t3.slope) == (F(1, 3), F(-1, 3))

    @pytest.mark.parametrize("m", [0, 1, -4])
    def test_non_contracting_digit(self, m):
        """Digits below 2 do not define contractions."""
        with pytest.raises(NotAContractionError):
            digit_map(m)

    def test_compose_order(self):
        """compose(f, g) applies g first."""
        t2, t5 = digit_map(2), digit_map(5)
        both = compose(t2, t5)
        for x in (F(0), F(1, 3), F(2, 7)):
            assert both(x) == t2(t5(x))
        assert both.preserves_orientation
        assert compose(IDENTITY, t2) == t2
        assert compose(t2, t2) == AffineMap(F(1, 4), F(1, 4))

    def test_compose_is_associative(self, rng):
        """(f o g) o h equals f o (g o h) for random digit maps."""
        for _ in range(100):
            f, g, h = (digit_map(rng.randint(2, 12)) for _ in range(3))
            assert compose(compose(f, g), h) == compose(f, compose(g, h))

    def test_contraction_scales_distances(self, rng):
        """|f(x) - f(y)| = |v| |x - y| for digit words."""
        for _ in range(100):
            word = tuple(rng.randint(2, 7) for _ in range(rng.randint(1, 6)))
            f = word_map(word)
            x, y = _random_rational(rng), _random_rational(rng)
            assert abs(f(x) - f(y)) == abs(f.slope) * abs(x - y)
            assert f.is_contraction

    def test_fixed_point(self):
        """Fix(T_2) = 1/3; non-contractions have no certified fixed point."""
        assert fixed_point(digit_map(2)) == F(1, 3)
        with pytest.raises(NotAContractionError):
            fixed_point(AffineMap(F(1), F(-1)))

    def test_map_interval_swaps_for_negative_slope(self):
        """T_3 flips the endpoints of [1/5, 2/5]."""
        image = map_interval(digit_map(3), Interval(F(1, 5), F(2, 5)))
        assert image == Interval(F(1, 5), F(4, 15))
        assert map_interval(digit_map(2), Interval(F(1, 7), F(3, 7))) == Interval(F(2, 7), F(3, 7))
        assert map_interval(IDENTITY, image) == image

    def test_map_interval_scales_width(self, rng):
        """The image width is |v| times the original width."""
        for _ in range(100):
            lo = _random_rational(rng)
            iv = Interval(lo, lo + abs(_random_rational(rng)))
            f = word_map(tuple(rng.randint(2, 6) for _ in range(rng.randint(1, 5))))
            assert map_interval(f, iv).width == abs(f.slope) * iv.width


class TestWords:
    """Words of digit maps in integer form."""

    def test_word_map_matches_left_to_right_composition(self):
        """word_map((4, 2, 2)) is T_4 o T_2 o T_2."""
        word = (4, 2, 2)
        expected = compose(digit_map(4), compose(digit_map(2), digit_map(2)))
        assert word_map(word) == expected
        assert word_map(word)(F(2, 7)) == F(19, 112)

    @pytest.mark.parametrize(
        "word, fix",
        [((2,), F(1, 3)), ((3, 2, 2), F(3, 13)), ((4, 2, 2), F(3, 17)), ((5, 2), F(1, 9))],
    )
    def test_word_fixed_point(self, word, fix):
        """Fixed points of short words."""
        assert word_fixed_point(word) == fix
        assert word_map(word)(fix) == fix

    def test_long_words_split_consistently(self, rng):
        """Balanced splitting agrees with step-by-step composition."""
        word = tuple(rng.randint(2, 5) for _ in range(301))
        f = IDENTITY
        for m in word:
            f = compose(f, digit_map(m))
        assert word_map(word) == f
        assert word_fixed_point(word) == fixed_point(f)

    def test_word_image(self):
        """T_3 o T_2 maps [1/5, 2/5] onto [1/5, 7/30]."""
        assert word_image((3, 2), Interval(F(1, 5), F(2, 5))) == Interval(F(1, 5), F(7, 30))

    def test_empty_or_invalid_words(self):
        """Empty words and digits below 2 are rejected."""
        with pytest.raises(InputError):
            word_map(())
        with pytest.raises(NotAContractionError):
            word_fixed_point((2, 1, 3))
