import random
from fractions import Fraction

import pytest

from rauzycert.linalg import IntMatrix, min_row_sum
from rauzycert.penner import (
    build,
    diverging_sequence,
    homology_power_check,
    lc_upper_rotation,
    power_closed_form,
    stretch_bounds,
    verify_power_identity,
)


class TestBuild:
    def test_first_block_at_genus_three(self):
        assert build(3, 1).a.rows == ((2, 1, 1), (1, 1, 0), (2, 1, 2))

    def test_top_right_block_is_identity(self):
        m = build(4, 2).m
        assert m.order == 12
        top_right = tuple(tuple(row[9:]) for row in m.rows[:3])
        assert top_right == IntMatrix.identity(3).rows

    def test_b_and_c_blocks_independent_of_n(self):
        assert build(3, 1).b == build(5, 99).b
        assert build(3, 1).c == build(5, 99).c

    def test_coupling_block_identity(self):
        for n in range(1, 101):
            p = build(3, n)
            assert p.d == p.a + p.b * p.c

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            build(2, 1)
        with pytest.raises(ValueError):
            build(3, 0)


class TestPowerIdentity:
    @pytest.mark.parametrize("g", [3, 4, 5, 6])
    @pytest.mark.parametrize("n", [1, 2, 3, 10, 100])
    def test_grid(self, g, n):
        assert verify_power_identity(g, n)

    def test_closed_form_is_actually_the_power(self):
        assert power_closed_form(5, 7) == build(5, 7).m ** 5


class TestStretchBounds:
    def test_min_row_sum_small_case(self):
        assert min_row_sum(build(3, 1).m ** 3) == 2

    def test_min_row_sum_bigger_case(self):
        assert min_row_sum(build(4, 10).m ** 4) == 11

    def test_genus_three_eight_twists(self):
        report = stretch_bounds(3, 8)
        assert report.passed
        assert report.rho.low ** 3 >= 9 - Fraction(1, 10**6)

    def test_genus_four_single_twist(self):
        report = stretch_bounds(4, 1)
        assert report.passed
        assert report.rho.low ** 4 >= 2 - Fraction(1, 10**6)

    def test_rho_strictly_increasing_in_n(self):
        previous = None
        for n in range(1, 21):
            bracket = stretch_bounds(5, n).rho
            if previous is not None:
                assert bracket.low > previous.high
            previous = bracket

    def test_power_bracket_starts_at_row_sums(self):
        from rauzycert.linalg import spectral_radius

        m = build(3, 2).m ** 3
        assert spectral_radius(m).low >= min_row_sum(m) == 3


class TestRotationOrbit:
    def test_genus_three(self):
        report = lc_upper_rotation(3)
        assert report.bound == Fraction(1, 2)
        assert report.orbit == ("b1", "b2", "b0")
        assert report.numerator == 1

    def test_genus_seven(self):
        assert lc_upper_rotation(7).bound == Fraction(1, 6)

    def test_disjoint_endpoints_give_unit_numerator(self):
        report = lc_upper_rotation(5)
        assert report.endpoints_disjoint
        assert report.bound.numerator == 1

    def test_rejects_small_genus(self):
        with pytest.raises(ValueError):
            lc_upper_rotation(2)


class TestHomologyPower:
    def test_power_one_is_base_matrix(self):
        a = IntMatrix.from_rows([[2, 1], [1, 1]])
        assert homology_power_check(a, [3, 4], 1)

    def test_zero_vector_gives_block_diagonal(self):
        a = IntMatrix.from_rows([[2, 1], [1, 1]])
        assert homology_power_check(a, [0, 0], 9)

    def test_hundred_random_instances(self):
        rng = random.Random(0)
        for _ in range(100):
            d = rng.randint(1, 4)
            a = IntMatrix.from_rows(
                [[rng.randint(0, 5) for _ in range(d)] for _ in range(d)]
            )
            b = [rng.randint(0, 5) for _ in range(d)]
            assert homology_power_check(a, b, rng.randint(1, 10))

    def test_rejects_bad_inputs(self):
        a = IntMatrix.from_rows([[1, 0], [0, 1]])
        with pytest.raises(ValueError):
            homology_power_check(a, [1], 2)
        with pytest.raises(ValueError):
            homology_power_check(a, [1, 1], 0)


class TestDivergingSequence:
    def test_genus_three(self):
        report = diverging_sequence(3)
        assert report.n == 27
        assert report.passed
        assert report.rho.low >= 3
        assert report.teich_low >= 1.09  # log 3 ~ 1.0986

    def test_genus_four(self):
        report = diverging_sequence(4)
        assert report.n == 256
        assert report.rho.low >= 4

    def test_lc_upper_reported(self):
        assert diverging_sequence(3).lc_upper == Fraction(1, 2)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            diverging_sequence(9, n_cap=10**6)

    def test_rejects_small_genus(self):
        with pytest.raises(ValueError):
            diverging_sequence(2)
