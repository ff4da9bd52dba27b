# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float64 determinant kernels.

Same signatures as narydiff._kernels_py; narydiff.kernels picks whichever
imports.
"""

from libc.stdlib cimport free, malloc


def det_product_f64(double[::1] xs):
    """Product of all pairwise differences xs[i] - xs[k] for i > k."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef double acc = 1.0
    cdef Py_ssize_t i, k
    for i in range(n):
        for k in range(i):
            acc *= xs[i] - xs[k]
    return acc


def det_bareiss_f64(double[::1] flat, Py_ssize_t n):
    """Determinant of the n*n row-major matrix in `flat` by Bareiss elimination."""
    if flat.shape[0] != n * n:
        raise ValueError("flat buffer does not hold an n*n matrix")
    cdef double *m = <double *> malloc(n * n * sizeof(double))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, c, col
    cdef double prev = 1.0
    cdef double piv, tmp, det
    cdef int sign = 1
    try:
        for i in range(n * n):
            m[i] = flat[i]
        for col in range(n - 1):
            if m[col * n + col] == 0.0:
                for r in range(col + 1, n):
                    if m[r * n + col] != 0.0:
                        for c in range(n):
                            tmp = m[col * n + c]
                            m[col * n + c] = m[r * n + c]
                            m[r * n + c] = tmp
                        sign = -sign
                        break
                else:
                    return 0.0
            piv = m[col * n + col]
            for r in range(col + 1, n):
                for c in range(col + 1, n):
                    m[r * n + c] = (m[r * n + c] * piv
                                    - m[r * n + col] * m[col * n + c]) / prev
                m[r * n + col] = 0.0
            prev = piv
        det = sign * m[(n - 1) * n + (n - 1)]
    finally:
        free(m)
    return det
