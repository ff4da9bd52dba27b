import cmath
import math
import random

import pytest

from narydiff.theta_difference import (
    primitive_root,
    theta_claimed_decomposition_residual,
    theta_diff,
    theta_translation_check,
)


def test_theta_examples():
    assert theta_diff([5, 3]).value == 2 + 0j
    assert abs(theta_diff([4, 4, 4]).value) <= 1e-12
    assert abs(theta_diff([1, 0, 0]).value - 1) <= 1e-12


def test_needs_two_inputs():
    with pytest.raises(ValueError):
        theta_diff([1.0])


def test_binary_reduction_is_exact():
    # theta for n=2 is -1 exactly, so no imaginary dust appears
    rng = random.Random(31)
    for _ in range(200):
        a, b = rng.uniform(-1e6, 1e6), rng.uniform(-1e6, 1e6)
        v = theta_diff([a, b]).value
        assert v.imag == 0.0
        assert abs(v - (a - b)) <= 1e-12 * max(1.0, abs(a), abs(b))


def test_primitive_root_properties():
    for n in range(2, 12):
        th = primitive_root(n)
        assert abs(th ** n - 1) <= 1e-12
        for m in range(1, n):
            assert abs(th ** m - 1) > 1e-6


def test_vanishing_on_constants():
    rng = random.Random(32)
    for _ in range(200):
        n = rng.randint(2, 8)
        c = rng.uniform(-100, 100)
        assert abs(theta_diff([c] * n).value) <= 1e-12 * max(1.0, abs(c) * n)


def test_translation_invariance():
    rng = random.Random(33)
    for _ in range(300):
        n = rng.randint(2, 8)
        inputs = [rng.uniform(-100, 100) for _ in range(n)]
        t = rng.uniform(-100, 100)
        res = theta_translation_check(inputs, t)
        assert abs(res.residual) <= 1e-10


def test_linearity():
    rng = random.Random(34)
    for _ in range(200):
        n = rng.randint(2, 6)
        u = [rng.uniform(-10, 10) for _ in range(n)]
        v = [rng.uniform(-10, 10) for _ in range(n)]
        alpha, beta = rng.uniform(-5, 5), rng.uniform(-5, 5)
        combined = theta_diff([alpha * a + beta * b for a, b in zip(u, v)]).value
        separate = alpha * theta_diff(u).value + beta * theta_diff(v).value
        assert abs(combined - separate) <= 1e-10


def test_claimed_decomposition_residual_trivial_cases():
    assert theta_claimed_decomposition_residual(0, 0, 0, 0, 0).residual == 0
    res = theta_claimed_decomposition_residual(1, 1, 1, 1, 1)
    assert abs(res.residual) <= 1e-12


def test_claimed_decomposition_residual_generic_nonzero():
    # (1,2,3,0,0): lhs - rhs works out to exactly one theta
    res = theta_claimed_decomposition_residual(1, 2, 3, 0, 0)
    theta = cmath.exp(2j * math.pi / 3)
    assert abs(res.residual - theta) <= 1e-12
    assert abs(res.residual) > 0.5
    print(f"claimed ternary decomposition residual at (1,2,3,0,0): {res.residual}")
