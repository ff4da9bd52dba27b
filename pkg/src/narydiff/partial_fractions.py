"""Partial-fraction expansion of 1/prod(x - x_i) with simple roots.

Coefficients come straight from the product formula
c_i = 1 / prod_{j != i} (x_i - x_j); recombining the terms must give the
constant polynomial 1, which is the module's executable contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from narydiff.vandermonde import PointList, Scalar


class DuplicateRootError(ValueError):
    """Expansion over repeated roots is undefined (simple poles only)."""


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial by its roots; coefficients c_0..c_{n-1} of
    P(x) = x^n + sum c_j x^j."""

    roots: tuple
    coefficients: tuple

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __call__(self, x: Scalar) -> Scalar:
        acc = _one_like(x)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative_coefficients(self) -> tuple:
        full = list(self.coefficients) + [_one_like(self.roots[0])]
        return tuple(j * full[j] for j in range(1, len(full)))


@dataclass(frozen=True)
class PartialFractionExpansion:
    """Terms (root, coefficient) of 1/P(x) = sum c_i / (x - x_i)."""

    terms: tuple
    degree: int


def _one_like(x) -> Scalar:
    if type(x) is float:
        return 1.0
    if isinstance(x, Fraction):
        return Fraction(1)
    return 1


def coefficients_from_roots(roots: PointList) -> Polynomial:
    """Monic coefficients via repeated multiplication by (x - root)."""
    if not roots:
        raise ValueError("need at least one root")
    one = _one_like(roots[0])
    coeffs = [one]
    for r in roots:
        shifted = [one * 0] + coeffs
        for j in range(len(coeffs)):
            shifted[j] = shifted[j] - r * coeffs[j]
        coeffs = shifted
    return Polynomial(tuple(roots), tuple(coeffs[:-1]))


def expand_reciprocal(roots: PointList) -> PartialFractionExpansion:
    """Expansion of 1/prod(x - x_i); roots must be pairwise distinct."""
    n = len(roots)
    if n == 0:
        raise ValueError("need at least one root")
    if len(set(roots)) != n:
        raise DuplicateRootError(f"roots must be pairwise distinct, got {list(roots)}")
    one = _one_like(roots[0])
    terms = []
    for i, xi in enumerate(roots):
        denom = one
        for j, xj in enumerate(roots):
            if j != i:
                denom *= xi - xj
        terms.append((xi, one / denom))
    return PartialFractionExpansion(tuple(terms), n)


def recombine(exp: PartialFractionExpansion) -> tuple:
    """Coefficients (ascending) of sum_i c_i * prod_{j != i}(x - x_j).

    By construction this must be the constant polynomial (1, 0, ..., 0).
    """
    roots = [root for root, _ in exp.terms]
    n = exp.degree
    one = _one_like(roots[0])
    total = [one * 0] * n
    for i, (_, ci) in enumerate(exp.terms):
        others = roots[:i] + roots[i + 1:]
        if others:
            partial = coefficients_from_roots(others)
            factor = list(partial.coefficients) + [one]
        else:
            factor = [one]
        for j, c in enumerate(factor):
            total[j] = total[j] + ci * c
    return tuple(total)
