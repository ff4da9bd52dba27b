import random
from array import array
from fractions import Fraction

import pytest

from narydiff import _kernels_py, kernels
from narydiff.vandermonde import build_matrix, det_fraction_free, det_product


def _flat(m):
    return array("d", [v for row in m for v in row])


def test_product_kernel_matches_exact():
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(1, 8)
        ints = [rng.randint(-50, 50) for _ in range(n)]
        exact = det_product([Fraction(v) for v in ints])
        approx = kernels.det_product_f64(array("d", map(float, ints)))
        assert approx == pytest.approx(float(exact), rel=1e-9, abs=1e-9)


def test_bareiss_kernel_matches_exact():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(1, 7)
        ints = [rng.randint(-20, 20) for _ in range(n)]
        exact = det_fraction_free(build_matrix([Fraction(v) for v in ints]))
        m = build_matrix([float(v) for v in ints])
        approx = kernels.det_bareiss_f64(_flat(m), n)
        assert approx == pytest.approx(float(exact), rel=1e-9, abs=1e-9)


def test_compiled_and_python_kernels_agree():
    if kernels.IMPLEMENTATION != "cython":
        pytest.skip("compiled kernel not built")
    rng = random.Random(43)
    for _ in range(50):
        n = rng.randint(2, 10)
        xs = array("d", [rng.uniform(-2, 2) for _ in range(n)])
        assert kernels.det_product_f64(xs) == pytest.approx(
            _kernels_py.det_product_f64(xs), rel=1e-12, abs=1e-300
        )
        flat = _flat(build_matrix(list(xs)))
        assert kernels.det_bareiss_f64(flat, n) == pytest.approx(
            _kernels_py.det_bareiss_f64(flat, n), rel=1e-9, abs=1e-12
        )


def test_bareiss_singular_matrix():
    m = build_matrix([1.0, 1.0, 3.0])
    assert kernels.det_bareiss_f64(_flat(m), 3) == 0.0


def test_bareiss_shape_guard():
    with pytest.raises(ValueError):
        kernels.det_bareiss_f64(array("d", [1.0, 2.0, 3.0]), 2)


def test_float_fast_path_routes_through_kernel():
    pts = [0.0, 1.0, 2.0]
    assert det_product(pts) == 2.0
    assert det_fraction_free(build_matrix(pts)) == pytest.approx(2.0, rel=1e-12)
