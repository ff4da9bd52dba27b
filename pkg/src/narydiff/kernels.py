"""Kernel selection: compiled extension if built, pure Python otherwise."""

from __future__ import annotations

try:
    from narydiff import _kernels as _impl

    IMPLEMENTATION = "cython"
except ImportError:  # extension not built on this install
    from narydiff import _kernels_py as _impl  # type: ignore[no-redef]

    IMPLEMENTATION = "python"

det_product_f64 = _impl.det_product_f64
det_bareiss_f64 = _impl.det_bareiss_f64
