"""Exact dense linear algebra on numpy object arrays.

Entries are ints, Fractions, Ext values, or Poly values.  Products take a
fast route when they can: rational matrices are scaled to integers and
multiplied as int64 (with a proven no-overflow bound, falling back to
arbitrary precision), extension-field matrices go through their four
rational components, and polynomial matrices use the generic object dot.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .poly import Poly
from .scalars import Ext

_INT64_SAFE = 2 ** 62


class SingularMatrixError(ValueError):
    pass


def object_matrix(rows) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = value
    return out


def classify(*matrices) -> str:
    """The widest entry kind present: 'rational', 'ext', or 'poly'."""
    kind = "rational"
    for m in matrices:
        for x in m.flat:
            if isinstance(x, Poly):
                return "poly"
            if isinstance(x, Ext):
                kind = "ext"
    return kind


def scale_to_int(a: np.ndarray):
    """(integer matrix, s) with matrix = s * original and s a positive int."""
    scale = 1
    for x in a.flat:
        if isinstance(x, Fraction):
            scale = math.lcm(scale, x.denominator)
        elif not isinstance(x, int):
            raise TypeError(f"rational entry expected, got {type(x).__name__}")
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        v = x * scale
        out[idx] = int(v) if isinstance(v, Fraction) else v
    return out, scale


def int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of integer object matrices; int64 when provably safe."""
    inner = a.shape[1]
    max_a = max((abs(x) for x in a.flat), default=0)
    max_b = max((abs(x) for x in b.flat), default=0)
    if max(max_a, max_b, inner * max_a * max_b) < _INT64_SAFE:
        c = np.array(a.tolist(), dtype=np.int64) @ np.array(b.tolist(), dtype=np.int64)
        return c.astype(object)
    return a.dot(b)


def _ext_components(a: np.ndarray):
    comps = [np.empty(a.shape, dtype=object) for _ in range(4)]
    for idx, x in np.ndenumerate(a):
        parts = x.components() if isinstance(x, Ext) else (x, 0, 0, 0)
        for comp, part in zip(comps, parts):
            comp[idx] = part
    return comps


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    kind = classify(a, b)
    if kind == "poly":
        return a.dot(b)
    if kind == "ext":
        a0, a1, a2, a3 = _ext_components(a)
        b0, b1, b2, b3 = _ext_components(b)
        prod = {}
        for i, ai in enumerate((a0, a1, a2, a3)):
            for j, bj in enumerate((b0, b1, b2, b3)):
                prod[i, j] = matmul(ai, bj)
        # Components of (a0 + a1*s + a2*i + a3*i*s)(b0 + b1*s + b2*i + b3*i*s).
        c0 = prod[0, 0] + 2 * prod[1, 1] - prod[2, 2] - 2 * prod[3, 3]
        c1 = prod[0, 1] + prod[1, 0] - prod[2, 3] - prod[3, 2]
        c2 = prod[0, 2] + prod[2, 0] + 2 * prod[1, 3] + 2 * prod[3, 1]
        c3 = prod[0, 3] + prod[3, 0] + prod[1, 2] + prod[2, 1]
        out = np.empty((a.shape[0], b.shape[1]), dtype=object)
        for idx in np.ndindex(out.shape):
            value = Ext(Fraction(c0[idx]), Fraction(c1[idx]),
                        Fraction(c2[idx]), Fraction(c3[idx]))
            out[idx] = value.as_fraction() if value.is_rational else value
        return out
    a_int, sa = scale_to_int(a)
    b_int, sb = scale_to_int(b)
    c = int_matmul(a_int, b_int)
    scale = sa * sb
    if scale == 1:
        return c
    out = np.empty(c.shape, dtype=object)
    for idx, v in np.ndenumerate(c):
        out[idx] = Fraction(v, scale)
    return out


def _as_field(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = Fraction(x) if isinstance(x, int) else x
    return out


def rref(a: np.ndarray):
    """Reduced row echelon form by exact Gauss-Jordan; returns (R, pivots)."""
    m = _as_field(a.copy())
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i, c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = m[r, c].inverse() if isinstance(m[r, c], Ext) else Fraction(1) / m[r, c]
        for j in range(c, cols):
            m[r, j] = m[r, j] * inv
        for i in range(rows):
            if i != r and m[i, c]:
                factor = m[i, c]
                for j in range(c, cols):
                    m[i, j] = m[i, j] - factor * m[r, j]
                m[i, c] = 0 * m[i, c]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: np.ndarray) -> int:
    return len(rref(a)[1])


def solve(a: np.ndarray, b: np.ndarray):
    """A particular exact solution X of A X = B, or None if inconsistent."""
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(aug)
    n = a.shape[1]
    if any(p >= n for p in pivots):
        return None
    x = np.empty((n, b.shape[1]), dtype=object)
    x[:] = Fraction(0)
    for row, p in enumerate(pivots):
        for k in range(b.shape[1]):
            x[p, k] = r[row, n + k]
    return x


def inverse(a: np.ndarray) -> np.ndarray:
    n, m = a.shape
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    eye = np.empty((n, n), dtype=object)
    eye[:] = Fraction(0)
    for i in range(n):
        eye[i, i] = Fraction(1)
    r, pivots = rref(np.concatenate([a, eye], axis=1))
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular over its field")
    return r[:, n:]


def det(a: np.ndarray):
    n, m = a.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    work = _as_field(a.copy())
    sign = 1
    value = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i, c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[[c, pivot]] = work[[pivot, c]]
            sign = -sign
        value = value * work[c, c]
        inv = (work[c, c].inverse() if isinstance(work[c, c], Ext)
               else Fraction(1) / work[c, c])
        for i in range(c + 1, n):
            if work[i, c]:
                factor = work[i, c] * inv
                for j in range(c, n):
                    work[i, j] = work[i, j] - factor * work[c, j]
    return sign * value
