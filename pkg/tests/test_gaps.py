"""Tests for the gaps near 1/6 and the null set on [3/17, 1/3]."""

import itertools
from fractions import Fraction

import pytest

from lspac.errors import InputError
from lspac.exact_core import word_fixed_point, word_map
from lspac.gaps import (
    ADMISSIBLE_QUADRUPLES,
    NULL_INTERVAL,
    gap_checks,
    gap_interval,
    has_four_two_step,
    measure_zero_certificate,
    periodic_liminfs,
)
from lspac.models import ModuliSpec
from lspac.spectrum import liminf

F = Fraction


class TestGapIntervals:
    """Closed forms of the gap endpoints."""

    def test_gap_zero(self):
        """The widest gap is (11/62, 5/28)."""
        assert gap_interval(0).lo == F(11, 62)
        assert gap_interval(0).hi == F(5, 28)

    def test_gaps_shrink_towards_one_sixth(self):
        """Gaps are disjoint, decreasing and above 1/6."""
        previous = gap_interval(0)
        for n in range(1, 10):
            current = gap_interval(n)
            assert F(1, 6) < current.lo < current.hi < previous.lo
            previous = current
        with pytest.raises(InputError):
            gap_interval(-1)

    @pytest.mark.parametrize("n0", range(9))
    def test_endpoint_identities(self, n0):
        """Endpoints are images of 13/31 and 2/7 under T_4 T_2...T_2."""
        lower = word_map((4,) + (2,) * (2 * n0 + 1))(F(13, 31))
        upper = word_map((4,) + (2,) * (2 * n0 + 2))(F(2, 7))
        assert lower == gap_interval(n0).lo
        assert upper == gap_interval(n0 + 1).hi


class TestGapChecks:
    """The full gap certificate."""

    @pytest.mark.timeout(30)
    def test_gap_checks_verified(self):
        """Gaps 0..8 survive the cylinder and periodic-word checks."""
        cert = gap_checks(8, period_bound=6)
        assert cert.verified, cert.to_dict()
        assert cert.witness("gap 0") == gap_interval(0)

    @pytest.mark.timeout(30)
    def test_gap_checks_through_five(self):
        """Gaps 0..5 hold against every periodic word up to length 8."""
        assert gap_checks(5, period_bound=8).verified

    def test_two_digit_cylinders_are_witnessed(self):
        """Every two-digit cylinder except T_4 T_2 is checked against the gaps."""
        cert = gap_checks(0, period_bound=1)
        labels = {w.label for w in cert.witnesses}
        expected = {f"T_{k}T_{l}(I)" for k, l in itertools.product((2, 3, 4), repeat=2)}
        assert labels >= expected - {"T_4T_2(I)"}
        assert "T_4T_2(I)" not in labels

    def test_negative_depth(self):
        """Gap indices start at 0."""
        with pytest.raises(InputError):
            gap_checks(-1)

    def test_periodic_liminfs_cover_lyndon_words(self):
        """One liminf per Lyndon word, in lexicographic order."""
        scanned = periodic_liminfs((2, 3), 4)
        words = [w for w, _ in scanned]
        assert words == [
            (2,),
            (2, 2, 2, 3),
            (2, 2, 3),
            (2, 2, 3, 3),
            (2, 3),
            (2, 3, 3),
            (2, 3, 3, 3),
            (3,),
        ]
        for word, value in scanned:
            assert value == liminf(ModuliSpec((), word))

    def test_parallel_scan_matches_serial(self):
        """Worker processes return the same ordered results."""
        assert periodic_liminfs((2, 3, 4), 5, workers=2) == periodic_liminfs((2, 3, 4), 5)


class TestMeasureZero:
    """The admissible four-digit contractions."""

    def test_certificate(self):
        """55 maps, total contraction 19759/20736, reduction to 3/17."""
        cert = measure_zero_certificate()
        assert cert.verified
        assert cert.witness("count") == 55
        assert cert.witness("sum") == F(19759, 20736)
        assert cert.witness("max Fix(T_4 T_2 T_a)") == F(3, 17)
        assert cert.witness("interval") == NULL_INTERVAL
        assert "3/17" in cert.notes

    def test_admissible_table_is_the_enumeration(self):
        """The table is exactly the quadruples with no 4,2 step."""
        enumerated = {t for t in itertools.product((2, 3, 4), repeat=4) if not has_four_two_step(t)}
        assert enumerated == set(ADMISSIBLE_QUADRUPLES)
        assert len(ADMISSIBLE_QUADRUPLES) == 55
        assert (4, 2, 3, 3) not in ADMISSIBLE_QUADRUPLES
        assert (2, 4, 3, 2) in ADMISSIBLE_QUADRUPLES

    def test_independent_sum(self):
        """Summing the table directly gives the same total."""
        total = sum(F(1, a * b * c * d) for a, b, c, d in ADMISSIBLE_QUADRUPLES)
        assert total == F(19759, 20736)
        assert total < 1

    def test_reduction_fixed_points(self):
        """Fix(T_4 T_2 T_a) for a = 2, 3, 4."""
        assert [word_fixed_point((4, 2, a)) for a in (2, 3, 4)] == [F(3, 17), F(4, 25), F(5, 33)]
