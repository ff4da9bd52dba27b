"""Scalar backends: exact rationals, complex doubles, plain floats.

The exact backend is the stdlib Fraction: arbitrary-precision, always
canonical (positive denominator, reduced), value equality. Everything
downstream is generic over Fraction or float entries.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction

Rational = Fraction

_ARITH_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def parse_rational(text: str) -> Fraction:
    """Parse an integer, 'p/q', or finite decimal string exactly.

    Decimals never pass through binary floats: '0.1' becomes 1/10.

    Raises ValueError on malformed input and ZeroDivisionError on 'p/0'.
    """
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Canonical text form: 'p/q', or just 'p' when the denominator is 1."""
    return str(value)


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Exact field arithmetic; `op` is one of add, sub, mul, div."""
    try:
        fn = _ARITH_OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}; expected one of {sorted(_ARITH_OPS)}")
    return fn(a, b)


def make_complex(re: float, im: float = 0.0) -> complex:
    """Complex with finite components; NaN/Inf are rejected."""
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ValueError("complex components must be finite")
    return complex(re, im)


def as_float(value) -> float:
    """Float backend conversion; rejects non-finite results."""
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"value {value!r} is not finite as float64")
    return out
