"""The n-ary difference operator and its pivot decomposition.

The difference between n quantities is the Vandermonde determinant of the
point list. Inserting an arbitrary pivot x into each slot in turn and
summing the resulting brackets reproduces the determinant exactly, which
generalizes (a - b) = (a - c) + (c - b) to any arity.
"""

from __future__ import annotations

from dataclasses import dataclass

from narydiff.vandermonde import (
    Bracket,
    PointList,
    Scalar,
    bracket,
    det_fraction_free,
    det_product,
)


@dataclass(frozen=True)
class Decomposition:
    base: tuple
    pivot: Scalar
    terms: tuple[Bracket, ...]
    total: Scalar
    reference: Scalar


@dataclass(frozen=True)
class DoubledMatrixReport:
    base: tuple
    pivot: Scalar
    det_doubled: Scalar
    expected: Scalar


def _require_arity(pts: PointList) -> int:
    n = len(pts)
    if n < 2:
        raise ValueError(f"need at least 2 quantities, got {n}")
    return n


def difference_nary(pts: PointList) -> Scalar:
    """Signed n-ary difference; for n=2 this is pts[1] - pts[0]."""
    _require_arity(pts)
    return det_product(pts)


def decompose(pts: PointList, pivot: Scalar) -> Decomposition:
    """Split the difference through a pivot: one bracket per slot, summing to V.

    The pivot may coincide with a point; the colliding terms are just 0.
    """
    n = _require_arity(pts)
    terms = tuple(bracket(pts, k, pivot) for k in range(1, n + 1))
    total = terms[0].value
    for t in terms[1:]:
        total = total + t.value
    return Decomposition(tuple(pts), pivot, terms, total, det_product(pts))


def doubled_determinant(pts: PointList, pivot: Scalar) -> DoubledMatrixReport:
    """Determinant of the matrix with entries x_k^i + pivot^i, against 2V.

    The doubled matrix has no product shortcut, so its determinant comes
    from generic fraction-free elimination.
    """
    n = _require_arity(pts)
    doubled = [[x ** i + pivot ** i for x in pts] for i in range(n)]
    det = det_fraction_free(doubled)
    return DoubledMatrixReport(tuple(pts), pivot, det, 2 * det_product(pts))


def distance_nary(origin_distances: PointList) -> Scalar:
    """Unsigned n-point separation: |difference_nary|, permutation-invariant.

    Inputs are distances from a common origin; shifting the origin by any
    amount leaves the result unchanged.
    """
    _require_arity(origin_distances)
    return abs(difference_nary(origin_distances))
