import random
from fractions import Fraction

import pytest

from narydiff.vandermonde import (
    bracket,
    build_matrix,
    det_fraction_free,
    det_laplace,
    det_product,
)
from narydiff.verify import random_points


def F(*args):
    return Fraction(*args)


def test_build_matrix_examples():
    assert build_matrix([0, 1]) == [[1, 1], [0, 1]]
    assert build_matrix([0, 1, 2]) == [[1, 1, 1], [0, 1, 2], [0, 1, 4]]
    assert build_matrix([F(2)]) == [[1]]


def test_build_matrix_rows_are_powers():
    pts = [F(3, 2), F(-1, 3), F(5)]
    m = build_matrix(pts)
    assert m[0] == [1, 1, 1]
    for i in range(3):
        for k in range(3):
            assert m[i][k] == m[1][k] ** i


def test_build_matrix_empty():
    with pytest.raises(ValueError):
        build_matrix([])


def test_det_product_examples():
    assert det_product([0, 1, 2]) == 2
    assert det_product([5, 5, 9]) == 0
    assert det_product([0, 1]) == 1
    assert det_product([F(7)]) == 1


def test_det_laplace_examples():
    assert det_laplace(build_matrix([0, 1, 2])) == 2
    assert det_laplace([[1]]) == 1
    assert det_laplace(build_matrix([3, 3])) == 0


def test_det_laplace_size_cap():
    with pytest.raises(ValueError):
        det_laplace(build_matrix(list(range(9))))


def test_det_fraction_free_examples():
    assert det_fraction_free(build_matrix([0, 1, 2])) == 2
    assert det_fraction_free(build_matrix([5])) == 1
    assert det_fraction_free(build_matrix([1, 2, 3, 4])) == 12


def test_bracket_examples():
    assert bracket([0, 1, 2], 1, 3).value == 2
    assert bracket([0, 1, 2], 2, 2).value == 0
    assert bracket([0, 1], 1, 5).value == -4


def test_bracket_leaves_base_unmodified():
    pts = [F(0), F(1), F(2)]
    b = bracket(pts, 2, F(9))
    assert pts == [0, 1, 2]
    assert b.base == (0, 1, 2)
    assert b.substituted_index == 2
    assert b.pivot == 9


def test_bracket_index_range():
    with pytest.raises(IndexError):
        bracket([0, 1], 0, F(1))
    with pytest.raises(IndexError):
        bracket([0, 1], 3, F(1))


def test_oracle_agreement_randomized():
    rng = random.Random(2024)
    for _ in range(250):
        n = rng.randint(1, 6)
        pts = random_points(rng, n)
        m = build_matrix(pts)
        v = det_product(pts)
        assert det_laplace(m) == v
        assert det_fraction_free(m) == v


def test_antisymmetry():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 6)
        pts = list(random_points(rng, n))
        i, j = rng.sample(range(n), 2)
        swapped = list(pts)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_product(swapped) == -det_product(pts)


def test_degeneracy():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(2, 6)
        pts = list(random_points(rng, n))
        i, j = rng.sample(range(n), 2)
        pts[i] = pts[j]
        assert det_product(pts) == 0


def test_translation_covariance():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(1, 6)
        pts = random_points(rng, n)
        t = Fraction(rng.randint(-1000, 1000), rng.randint(1, 100))
        assert det_product([x + t for x in pts]) == det_product(pts)


def test_cyclic_sign_convention_n3():
    # for triples, the pairwise product equals the cyclic form
    rng = random.Random(9)
    for _ in range(300):
        x1, x2, x3 = random_points(rng, 3)
        cyclic = (x1 - x2) * (x2 - x3) * (x3 - x1)
        assert det_product([x1, x2, x3]) == cyclic
