"""Rival difference built from roots of unity: sum a_k * theta^(k-1).

theta is fixed to exp(2*pi*i/n) for determinism (any primitive n-th root
gives a conjugate value); n=2 uses -1 exactly so the binary case reduces
to a_1 - a_2 without rounding. The five-variable decomposition claimed
for this operator is measured, never asserted: expanding with
1 + theta + theta^2 = 0 shows it fails for generic inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ThetaDifference:
    inputs: tuple[float, ...]
    order: int
    theta: complex
    value: complex


@dataclass(frozen=True)
class DecompositionResidual:
    """lhs - rhs for a tested identity; reported for inspection."""

    lhs: complex
    rhs: complex
    residual: complex
    claim: str


def primitive_root(n: int) -> complex:
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    if n == 2:
        return complex(-1.0, 0.0)
    return cmath.exp(2j * math.pi / n)


def theta_diff(inputs: Sequence[float]) -> ThetaDifference:
    """sum a_k * theta^(k-1) with theta = exp(2*pi*i/n)."""
    n = len(inputs)
    theta = primitive_root(n)
    value = complex(0.0)
    power = complex(1.0)
    for a in inputs:
        value += a * power
        power *= theta
    return ThetaDifference(tuple(float(a) for a in inputs), n, theta, value)


def theta_translation_check(inputs: Sequence[float], t: float) -> DecompositionResidual:
    """Shift every input by t; the value is unchanged since the theta powers sum to 0."""
    lhs = theta_diff([a + t for a in inputs]).value
    rhs = theta_diff(inputs).value
    return DecompositionResidual(lhs, rhs, lhs - rhs, "translation-invariance")


def theta_claimed_decomposition_residual(
    a: float, b: float, c: float, d: float, f: float
) -> DecompositionResidual:
    """Residual of [a,b,c] = [a,d,f] + [d,a,f] + [d,f,c]; nonzero in general."""
    lhs = theta_diff([a, b, c]).value
    rhs = (
        theta_diff([a, d, f]).value
        + theta_diff([d, a, f]).value
        + theta_diff([d, f, c]).value
    )
    return DecompositionResidual(lhs, rhs, lhs - rhs, "ternary-decomposition-claim")
