"""Tests for exact dense linear algebra over the scalar tower."""

import random
from fractions import Fraction

import numpy as np
import pytest

from baxter import linalg
from baxter.poly import Poly
from baxter.scalars import Ext, SQRT2


def rand_frac_matrix(rng, n, span=9):
    rows = [[Fraction(rng.randint(-span, span), rng.randint(1, 4))
             for _ in range(n)] for _ in range(n)]
    return linalg.object_matrix(rows)


def naive_matmul(a, b):
    n, k = a.shape
    k2, m = b.shape
    assert k == k2
    out = np.zeros((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc = acc + a[i, t] * b[t, j]
            out[i, j] = acc
    return out


def test_matmul_matches_naive_rational():
    rng = random.Random(1)
    for _ in range(15):
        a = rand_frac_matrix(rng, 4)
        b = rand_frac_matrix(rng, 4)
        assert (linalg.matmul(a, b) == naive_matmul(a, b)).all()


def test_matmul_matches_naive_extension():
    rng = random.Random(2)
    for _ in range(8):
        a = np.array([[Ext(*[Fraction(rng.randint(-3, 3)) for _ in range(4)])
                       for _ in range(3)] for _ in range(3)], dtype=object)
        b = np.array([[Ext(*[Fraction(rng.randint(-3, 3)) for _ in range(4)])
                       for _ in range(3)] for _ in range(3)], dtype=object)
        got = linalg.matmul(a, b)
        want = naive_matmul(a, b)
        assert (got == want).all()


def test_matmul_matches_naive_poly():
    u = Poly.variable("u")
    a = linalg.object_matrix([[u, 1], [0, u ** 2]])
    b = linalg.object_matrix([[1, u], [u, 2]])
    assert (linalg.matmul(a, b) == naive_matmul(a, b)).all()


def test_int_matmul_overflow_falls_back_exactly():
    # entries big enough that n * max_a * max_b overflows int64
    big = 2 ** 40
    a = linalg.object_matrix([[big, big], [big, big]])
    b = linalg.object_matrix([[big, -big], [big, big]])
    got = linalg.matmul(a, b)
    assert got[0, 0] == 2 * big * big
    assert got[0, 1] == 0


def test_int_matmul_one_sided_overflow():
    # one factor tiny, the other beyond the int64 conversion range
    big = 2 ** 70
    a = linalg.object_matrix([[1, 0], [0, 1]])
    b = linalg.object_matrix([[big, 0], [0, big]])
    assert (linalg.matmul(a, b) == b).all()


def test_classify():
    a = rand_frac_matrix(random.Random(0), 2)
    assert linalg.classify(a) == "rational"
    e = np.array([[SQRT2]], dtype=object)
    assert linalg.classify(a, e) == "ext"
    p = np.array([[Poly.variable("u")]], dtype=object)
    assert linalg.classify(p) == "poly"
    assert linalg.classify(p, e) == "poly"


def test_scale_to_int():
    a = linalg.object_matrix([[Fraction(1, 2), Fraction(1, 3)], [2, 0]])
    scaled, scale = linalg.scale_to_int(a)
    assert scale == 6
    assert scaled.tolist() == [[3, 2], [12, 0]]


def test_rref_and_rank():
    a = linalg.object_matrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    reduced, pivots = linalg.rref(a)
    assert linalg.rank(a) == 2
    assert pivots == [0, 1]
    assert reduced[0].tolist() == [1, 0, -1]
    assert reduced[1].tolist() == [0, 1, 2]


def test_inverse_round_trip_random():
    rng = random.Random(6)
    eye = np.zeros((4, 4), dtype=object)
    for i in range(4):
        eye[i, i] = Fraction(1)
    tried = 0
    while tried < 10:
        a = rand_frac_matrix(rng, 4)
        try:
            inv = linalg.inverse(a)
        except linalg.SingularMatrixError:
            continue
        tried += 1
        assert (linalg.matmul(a, inv) == eye).all()
        assert (linalg.matmul(inv, a) == eye).all()


def test_inverse_over_extension():
    a = np.array([[SQRT2, 1], [0, SQRT2]], dtype=object)
    inv = linalg.inverse(a)
    prod = linalg.matmul(a, inv)
    assert prod[0, 0] == 1 and prod[1, 1] == 1
    assert prod[0, 1] == 0 and prod[1, 0] == 0


def test_singular_matrix_raises():
    a = linalg.object_matrix([[1, 2], [2, 4]])
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse(a)
    assert linalg.det(a) == 0


def test_det_known_values_and_multiplicativity():
    a = linalg.object_matrix([[1, 2], [3, 4]])
    assert linalg.det(a) == -2
    rng = random.Random(9)
    for _ in range(10):
        x = rand_frac_matrix(rng, 3)
        y = rand_frac_matrix(rng, 3)
        assert linalg.det(linalg.matmul(x, y)) == linalg.det(x) * linalg.det(y)


def test_solve():
    a = linalg.object_matrix([[1, 1], [1, -1]])
    b = linalg.object_matrix([[3], [1]])
    x = linalg.solve(a, b)
    assert x[0, 0] == 2 and x[1, 0] == 1
    # inconsistent system
    a2 = linalg.object_matrix([[1, 1], [2, 2]])
    b2 = linalg.object_matrix([[1], [3]])
    assert linalg.solve(a2, b2) is None
    # underdetermined but consistent: a particular solution is returned
    b3 = linalg.object_matrix([[1], [2]])
    x3 = linalg.solve(a2, b3)
    assert (linalg.matmul(a2, x3) == b3).all()
