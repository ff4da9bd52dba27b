"""Pure-Python float64 determinant kernels (fallback for the compiled ones)."""

from __future__ import annotations

from typing import Sequence


def det_product_f64(xs: Sequence[float]) -> float:
    """Product of all pairwise differences xs[i] - xs[k] for i > k."""
    acc = 1.0
    for i, xi in enumerate(xs):
        for k in range(i):
            acc *= xi - xs[k]
    return acc


def det_bareiss_f64(flat: Sequence[float], n: int) -> float:
    """Determinant of the n*n row-major matrix in `flat` by Bareiss elimination."""
    if len(flat) != n * n:
        raise ValueError("flat buffer does not hold an n*n matrix")
    m = [list(flat[r * n:(r + 1) * n]) for r in range(n)]
    sign = 1
    prev = 1.0
    for col in range(n - 1):
        if m[col][col] == 0.0:
            for r in range(col + 1, n):
                if m[r][col] != 0.0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0.0
        piv = m[col][col]
        for r in range(col + 1, n):
            row = m[r]
            lead = row[col]
            top = m[col]
            for c in range(col + 1, n):
                row[c] = (row[c] * piv - lead * top[c]) / prev
            row[col] = 0.0
        prev = piv
    return sign * m[n - 1][n - 1]
