"""Vandermonde matrices, three determinant routes, and column-substitution brackets.

Points are plain sequences of scalars (Fraction for the exact backend,
float for the fast one). Order matters: swapping two points flips the
determinant's sign. Duplicate points are legal and give determinant 0.

Sign convention: det = product over i > k of (points[i] - points[k]).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from narydiff import kernels

Scalar = Union[Fraction, int, float]
PointList = Sequence[Scalar]
Matrix = list[list]

LAPLACE_MAX_N = 8


def _all_float(values) -> bool:
    return all(type(v) is float for v in values)


def _one_like(x) -> Scalar:
    if type(x) is float:
        return 1.0
    if isinstance(x, Fraction):
        return Fraction(1)
    return 1


def build_matrix(pts: PointList) -> Matrix:
    """n x n matrix with rows of powers: entry(i, k) = pts[k] ** i, i = 0..n-1."""
    n = len(pts)
    if n == 0:
        raise ValueError("empty point list")
    return [[x ** i for x in pts] for i in range(n)]


def det_product(pts: PointList) -> Scalar:
    """Determinant via the closed-form pairwise product; 1 for a single point."""
    n = len(pts)
    if n == 0:
        raise ValueError("empty point list")
    if _all_float(pts):
        return kernels.det_product_f64(array("d", pts))
    acc = _one_like(pts[0])
    for i in range(1, n):
        xi = pts[i]
        for k in range(i):
            acc *= xi - pts[k]
    return acc


def det_laplace(m: Matrix) -> Scalar:
    """Cofactor-expansion determinant; small-instance oracle, capped at n=8."""
    n = len(m)
    if n > LAPLACE_MAX_N:
        raise ValueError(f"laplace expansion is capped at n={LAPLACE_MAX_N}, got n={n}")
    if n == 0:
        raise ValueError("empty matrix")
    return _laplace(m)


def _laplace(m: Matrix) -> Scalar:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _laplace(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def det_fraction_free(m: Matrix) -> Scalar:
    """Determinant by Bareiss elimination: exact over rationals, O(n^3).

    Float matrices go through the compiled kernel when it is available.
    """
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    flat = [v for row in m for v in row]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if _all_float(flat):
        return kernels.det_bareiss_f64(array("d", flat), n)
    rows = [[Fraction(v) for v in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for col in range(n - 1):
        if rows[col][col] == 0:
            for r in range(col + 1, n):
                if rows[r][col] != 0:
                    rows[col], rows[r] = rows[r], rows[col]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = rows[col][col]
        top = rows[col]
        for r in range(col + 1, n):
            row = rows[r]
            lead = row[col]
            for c in range(col + 1, n):
                row[c] = (row[c] * piv - lead * top[c]) / prev
            row[col] = Fraction(0)
        prev = piv
    return sign * rows[n - 1][n - 1]


@dataclass(frozen=True)
class Bracket:
    """Determinant of the point list with one point swapped for a pivot.

    `substituted_index` is 1-based, matching the usual x_1..x_n numbering.
    """

    base: tuple
    substituted_index: int
    pivot: Scalar
    value: Scalar


def bracket(pts: PointList, k: int, pivot: Scalar) -> Bracket:
    """Substitute pivot into slot k (1-based) and take the determinant."""
    n = len(pts)
    if not 1 <= k <= n:
        raise IndexError(f"substitution index {k} out of range 1..{n}")
    substituted = list(pts)
    substituted[k - 1] = pivot
    return Bracket(tuple(pts), k, pivot, det_product(substituted))
