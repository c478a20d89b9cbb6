"""Exact integer matrices, relabeling matrices, primitivity and spectral brackets.

Everything here is exact: matrices hold arbitrary-precision integers (path
matrix entries grow like a power of the stretch factor and overflow any
fixed width quickly), and spectral radii are reported as rational brackets
certified by the Collatz-Wielandt inequality rather than as floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import ConvergenceError, NotAllowedError, NotPrimitiveError
from .perm import LabeledPermutation, equal_unlabeled

if TYPE_CHECKING:  # pragma: no cover
    from .diagram import AllowedPath


@dataclass(frozen=True)
class IntMatrix:
    """A square matrix of Python ints, row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and non-empty")

    @property
    def order(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.order != other.order:
            raise ValueError("order mismatch")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.order != other.order:
            raise ValueError("order mismatch")
        cols = tuple(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
            )
        )

    def __pow__(self, exponent: int) -> "IntMatrix":
        if exponent < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_vector(self, v: list[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def is_positive(self) -> bool:
        return all(x > 0 for row in self.rows for x in row)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.order))

    def to_json(self) -> list[list[str]]:
        """Row-major nested lists of decimal strings (entries may exceed 64 bits)."""
        return [[str(x) for x in row] for row in self.rows]

    @staticmethod
    def from_json(data) -> "IntMatrix":
        return IntMatrix.from_rows(data)

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def min_row_sum(m: IntMatrix) -> int:
    """Minimum over rows of the entry sum; a Collatz-Wielandt lower bound for
    the spectral radius of a nonnegative matrix."""
    return min(sum(row) for row in m.rows)


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m.rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def relabel_matrix(start: LabeledPermutation, end: LabeledPermutation) -> IntMatrix:
    """Permutation matrix of the relabeling between two unlabeled-equal vertices.

    The relabeling sends a letter b to the letter occupying, in the end top
    row, the position b has in the start top row; the matrix has a 1 in
    position (relabel(b), b).
    """
    if set(start.alphabet) != set(end.alphabet):
        raise NotAllowedError("relabeling needs matching letter sets")
    if not equal_unlabeled(start, end):
        raise NotAllowedError(
            "endpoints do not define the same unlabeled permutation: %s vs %s"
            % (start.display(), end.display())
        )
    n = start.n
    index = {letter: i for i, letter in enumerate(start.alphabet)}
    end_top = end.top_letters()
    rows = [[0] * n for _ in range(n)]
    for position, letter in enumerate(start.top_letters()):
        rows[index[end_top[position]]][index[letter]] = 1
    return IntMatrix.from_rows(rows)


def path_matrix(path: "AllowedPath") -> IntMatrix:
    """Product of the per-edge matrices, first edge leftmost, relabeling last."""
    from .induction import edge_matrix

    if not path.allowed:
        raise NotAllowedError("path is not allowed: %s -> %s" % (path.start, path.end))
    result = IntMatrix.identity(path.start.n)
    for edge in path.edges:
        result = result * edge_matrix(edge)
    return result * relabel_matrix(path.start, path.end)


def _bool_rows(m: IntMatrix) -> list[int]:
    return [sum(1 << j for j, x in enumerate(row) if x) for row in m.rows]


def _bool_mul(a: list[int], b: list[int]) -> list[int]:
    out = []
    for row in a:
        acc = 0
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            acc |= b[j]
            rest &= rest - 1
        out.append(acc)
    return out


def _bool_pow(base: list[int], exponent: int) -> list[int]:
    result = None
    b = base
    e = exponent
    while e:
        if e & 1:
            result = b if result is None else _bool_mul(result, b)
        e >>= 1
        if e:
            b = _bool_mul(b, b)
    assert result is not None
    return result


def wielandt_bound(n: int) -> int:
    """Largest possible primitivity exponent of an n x n primitive matrix."""
    return (n - 1) ** 2 + 1


def min_positive_power(m: IntMatrix, cap: int | None = None) -> int | None:
    """Smallest p <= cap with all entries of m**p positive, or None.

    Works over the boolean semiring, so entries never blow up during the
    search.  The default cap is the Wielandt bound (n-1)^2 + 1, past which
    no power of a non-primitive matrix ever becomes positive.
    """
    if not m.is_nonnegative():
        raise ValueError("primitivity is only defined for nonnegative matrices")
    n = m.order
    if cap is None:
        cap = wielandt_bound(n)
    if cap < 1:
        return None
    full = (1 << n) - 1
    rows = _bool_rows(m)
    if any(r == 0 for r in rows):
        return None  # a zero row survives in every power
    union = 0
    for r in rows:
        union |= r
    if union != full:
        return None  # likewise a zero column
    # With no zero row, positivity is monotone in the exponent: any positive
    # power stays positive after one more multiplication.  Binary-search the
    # first positive power.
    if not all(r == full for r in _bool_pow(rows, cap)):
        return None
    lo, hi = 1, cap
    while lo < hi:
        mid = (lo + hi) // 2
        if all(r == full for r in _bool_pow(rows, mid)):
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class SpectralBracket:
    """Certified rational bracket low <= spectral radius <= high."""

    low: Fraction
    high: Fraction
    iterations: int

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def log_bounds(self) -> tuple[float, float]:
        """Natural-log bracket, e.g. for translation lengths."""
        return (_log_fraction(self.low), _log_fraction(self.high))


def _log_fraction(x: Fraction) -> float:
    if x <= 0:
        raise ValueError("log of non-positive bracket endpoint")
    return math.log(x.numerator) - math.log(x.denominator)


_RENORM_BITS = 8192
_SHIFT_WARMUP = 48


def spectral_radius(
    m: IntMatrix,
    tol: Fraction | str | float = Fraction(1, 10**9),
    max_iterations: int = 200_000,
) -> SpectralBracket:
    """Bracket the dominant eigenvalue of a primitive matrix.

    Iterates v <- M v from the all-ones vector; at each step the quotients
    (Mv)_i / v_i bracket the spectral radius, and for a primitive matrix the
    bracket tightens to any tolerance.  The iterate is kept as an exact
    integer vector (renormalization only divides out common factors or, when
    entries get huge, a power of two, which leaves the quotient bracket
    valid).  Non-primitive input is rejected up front: its bracket need not
    tighten at all.

    After a short warmup the iteration switches to M + s*I with s an integer
    near the dominant eigenvalue, reporting quotients minus s.  The shift is
    exact (a nonnegative matrix and its shift share Perron data) and pushes
    complex subdominant eigenvalues off the dominant ray, which otherwise
    make the quotients converge arbitrarily slowly on matrices with
    near-rotational spectrum.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if min_positive_power(m) is None:
        raise NotPrimitiveError("matrix is not primitive; spectral bracket may not tighten")
    n = m.order
    v = [1] * n
    best_low: Fraction | None = None
    best_high: Fraction | None = None
    matrix = m
    offset = 0
    for iteration in range(1, max_iterations + 1):
        w = matrix.mul_vector(v)
        low = min(Fraction(w[i], v[i]) for i in range(n)) - offset
        high = max(Fraction(w[i], v[i]) for i in range(n)) - offset
        best_low = low if best_low is None else max(best_low, low)
        best_high = high if best_high is None else min(best_high, high)
        if best_high - best_low <= tol:
            return SpectralBracket(best_low, best_high, iteration)
        g = math.gcd(*w)
        if g > 1:
            w = [x // g for x in w]
        bits = max(x.bit_length() for x in w)
        if bits > _RENORM_BITS:
            shift = bits - _RENORM_BITS // 2
            w = [max(1, x >> shift) for x in w]
        v = w
        if iteration == _SHIFT_WARMUP:
            s = int((best_low + best_high + 1) / 2)
            if s >= 1:
                matrix = m + _scalar(n, s)
                offset = s
    raise ConvergenceError(
        "spectral bracket did not reach width %s in %d iterations" % (tol, max_iterations)
    )


def _scalar(n: int, s: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(s if i == j else 0 for j in range(n)) for i in range(n)))
