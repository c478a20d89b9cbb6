import random
from fractions import Fraction

import pytest
import sympy

from rauzycert.diagram import AllowedPath, build_path
from rauzycert.errors import NotAllowedError, NotPrimitiveError
from rauzycert.induction import Move
from rauzycert.linalg import (
    IntMatrix,
    det,
    min_positive_power,
    min_row_sum,
    path_matrix,
    relabel_matrix,
    spectral_radius,
    wielandt_bound,
)
from rauzycert.perm import central, fg_start, parse

from helpers import bisect_largest_root

GAMMA2_MATRIX = IntMatrix.from_rows(
    [[0, 1, 0, 0], [1, 0, 2, 1], [1, 0, 0, 0], [0, 0, 1, 1]]
)


def gamma(g):
    return build_path(fg_start(g), "ftb^%d" % g)


class TestIntMatrix:
    def test_identity_multiplication(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert m * IntMatrix.identity(2) == m
        assert IntMatrix.identity(2) * m == m

    def test_power(self):
        m = IntMatrix.from_rows([[1, 1], [0, 1]])
        assert (m**5).rows == ((1, 5), (0, 1))
        assert m**0 == IntMatrix.identity(2)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_json_roundtrip_with_huge_entries(self):
        m = IntMatrix.from_rows([[10**30, 1], [0, 2**100]])
        assert IntMatrix.from_json(m.to_json()) == m

    def test_determinant_against_oracle(self):
        rng = random.Random(3)
        for _ in range(30):
            d = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(d)]
            assert det(IntMatrix.from_rows(rows)) == int(sympy.Matrix(rows).det())


class TestRelabelMatrix:
    def test_flip_example(self):
        p = relabel_matrix(parse("A B C / C A B"), parse("B A C / C B A"))
        assert p.rows == ((0, 1, 0), (1, 0, 0), (0, 0, 1))

    def test_identity_when_endpoints_equal(self):
        assert relabel_matrix(central(4), central(4)) == IntMatrix.identity(4)

    def test_family_loop_relabeling(self):
        path = gamma(2)
        p = relabel_matrix(path.start, path.end)
        assert p.rows == ((0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 0, 1))

    def test_rejects_unlabeled_mismatch(self):
        with pytest.raises(NotAllowedError):
            relabel_matrix(parse("A B C / C B A"), parse("A C B / C B A"))


class TestPathMatrix:
    def test_single_flip_gives_relabeling_matrix(self):
        path = build_path(parse("A B C / C A B"), "f")
        assert path_matrix(path) == IntMatrix.from_rows(
            [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        )

    def test_empty_path_gives_identity(self):
        assert path_matrix(AllowedPath(central(3), ())) == IntMatrix.identity(3)

    def test_genus_two_loop(self):
        assert path_matrix(gamma(2)) == GAMMA2_MATRIX

    def test_rejects_not_allowed(self):
        with pytest.raises(NotAllowedError):
            path_matrix(build_path(central(3), "b"))

    def test_unimodular_on_family(self):
        for g in range(2, 7):
            assert abs(det(path_matrix(gamma(g)))) == 1

    def test_closed_loop_concatenation_multiplies(self):
        # two labeled loops at the same vertex compose multiplicatively
        first = AllowedPath(central(3), (Move.BOTTOM, Move.BOTTOM))
        second = AllowedPath(central(3), (Move.TOP, Move.TOP))
        assert first.end == central(3) and second.end == central(3)
        combined = first.concat(second)
        assert path_matrix(combined) == path_matrix(first) * path_matrix(second)


class TestMinPositivePower:
    def test_identity_never_positive(self):
        assert min_positive_power(IntMatrix.identity(3)) is None

    def test_permutation_matrix_never_positive(self):
        cycle = IntMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert min_positive_power(cycle) is None

    def test_genus_two_loop_exponent(self):
        # frozen value: the boolean cube still has a zero, the fourth power
        # is full (worked out by hand on the 4x4 pattern)
        assert min_positive_power(GAMMA2_MATRIX) == 4

    @pytest.mark.parametrize("g", range(2, 9))
    def test_family_exponent_at_most_4g(self, g):
        assert min_positive_power(path_matrix(gamma(g))) <= 4 * g

    def test_minimality_is_exact(self):
        for m in (GAMMA2_MATRIX, path_matrix(gamma(3))):
            p = min_positive_power(m)
            assert not (m ** (p - 1)).is_positive()
            assert (m**p).is_positive()

    def test_respects_cap(self):
        assert min_positive_power(GAMMA2_MATRIX, cap=3) is None
        assert min_positive_power(GAMMA2_MATRIX, cap=4) == 4

    def test_one_by_one(self):
        assert min_positive_power(IntMatrix.from_rows([[2]])) == 1
        assert min_positive_power(IntMatrix.from_rows([[0]])) is None

    def test_wielandt_bound(self):
        assert wielandt_bound(4) == 10
        assert min_positive_power(GAMMA2_MATRIX) <= wielandt_bound(4)

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            min_positive_power(IntMatrix.from_rows([[1, -1], [1, 1]]))


class TestSpectralRadius:
    def test_genus_two_stretch_factor_against_root_oracle(self):
        # independent oracle: characteristic polynomial via sympy, largest
        # root bracketed by exact bisection
        x = sympy.symbols("x")
        charpoly = sympy.Matrix(GAMMA2_MATRIX.rows).charpoly(x).as_expr()
        assert sympy.expand(charpoly - (x**4 - x**3 - x**2 - x + 1)) == 0
        root_low, root_high = bisect_largest_root([1, -1, -1, -1, 1], 1.5, 2)
        bracket = spectral_radius(GAMMA2_MATRIX, Fraction(1, 10**9))
        # both intervals contain the dominant eigenvalue, so they intersect
        assert bracket.low <= root_high and root_low <= bracket.high
        assert bracket.width <= Fraction(1, 10**9)

    def test_low_end_at_least_min_row_sum(self):
        m = path_matrix(gamma(3))
        bracket = spectral_radius(m)
        assert bracket.low >= min_row_sum(m)

    def test_power_brackets_match_powered_endpoints(self):
        tol = Fraction(1, 10**9)
        base = spectral_radius(GAMMA2_MATRIX, tol)
        for k in (2, 3):
            powered = spectral_radius(GAMMA2_MATRIX**k, tol)
            assert abs(powered.low - base.low**k) < Fraction(1, 10**6)
            assert abs(powered.high - base.high**k) < Fraction(1, 10**6)

    def test_rejects_permutation_matrix(self):
        cycle = IntMatrix.from_rows([[0, 1], [1, 0]])
        with pytest.raises(NotPrimitiveError):
            spectral_radius(cycle)

    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(ValueError):
            spectral_radius(GAMMA2_MATRIX, 0)

    def test_deterministic(self):
        a = spectral_radius(GAMMA2_MATRIX)
        b = spectral_radius(GAMMA2_MATRIX)
        assert (a.low, a.high, a.iterations) == (b.low, b.high, b.iterations)


class TestMinRowSum:
    def test_identity(self):
        assert min_row_sum(IntMatrix.identity(5)) == 1

    def test_genus_two_loop(self):
        assert min_row_sum(GAMMA2_MATRIX) == 1
