"""Exact verifiers for the Yang-Baxter family of identities.

Constant identities are checked by exact matrix arithmetic.  Spectral
identities are decided on an integer grid whose size strictly exceeds the
degree bound of the polynomial difference in each variable; vanishing on
such a grid is equivalent to identical vanishing, so the verdict is exact.
An optional slow path redoes the spectral check with full bivariate
polynomial arithmetic.

Scalar factors are handled by clearing denominators uniformly; every
identity here is invariant under per-factor scaling, and witnesses are
reported in unscaled numerator units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .poly import Poly
from .scalars import Ext
from .tensor import (TensorMatrix, _leg_reorder, embed_pair, permutation_op,
                     poly_substitute, swap_factors)


@dataclass(frozen=True)
class Witness:
    """First offending entry of a failed identity, in lexicographic order."""
    row: int
    col: int
    exponents: tuple
    value: object

    def __str__(self):
        where = f"entry ({self.row}, {self.col})"
        if any(self.exponents):
            where += f", monomial {self.exponents}"
        return f"{where}: {self.value}"


@dataclass(frozen=True)
class VerificationReport:
    identity_name: str
    passed: bool
    witness: Witness | None = None
    scalar_factor: object = None
    grid_size: tuple | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("witness must be present exactly on failure")

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.grid_size:
            extra += f" grid={'x'.join(map(str, self.grid_size))}"
        if self.scalar_factor is not None:
            extra += f" scalar={self.scalar_factor}"
        if self.witness is not None:
            extra += f" witness[{self.witness}]"
        return f"[{verdict}] {self.identity_name}{extra}"


# -- shared helpers ---------------------------------------------------------


def _numerator(r) -> TensorMatrix:
    return getattr(r, "numerator", r)


def _first_nonzero(data: np.ndarray):
    for (i, j), x in np.ndenumerate(data):
        if x:
            return (i, j)
    return None


def _single_variable(m: TensorMatrix) -> str:
    names = m.variables()
    if len(names) != 1:
        raise ValueError(f"expected one entry variable, found {names or 'none'}")
    return names[0]


def _denominator_lcm(value, acc: int) -> int:
    if isinstance(value, Fraction):
        return math.lcm(acc, value.denominator)
    if isinstance(value, Ext):
        for part in value.components():
            acc = math.lcm(acc, part.denominator)
        return acc
    if isinstance(value, Poly):
        for coeff in value.coeffs.values():
            acc = _denominator_lcm(coeff, acc)
        return acc
    return acc


def uniform_int_scale(m: TensorMatrix):
    """(scale, scaled entries) with every coefficient an integer."""
    scale = 1
    for x in m.data.flat:
        scale = _denominator_lcm(x, scale)
    if scale == 1:
        return 1, m.data
    out = np.empty(m.data.shape, dtype=object)
    for idx, x in np.ndenumerate(m.data):
        out[idx] = x * scale
    return scale, out


def _eval_entry(x, var: str, value: int):
    if not isinstance(x, Poly):
        return x
    if var not in x.vars:
        return x.constant_value() if x.is_constant() else x
    i = x.vars.index(var)
    total = 0
    for exps, coeff in x.coeffs.items():
        total = total + coeff * value ** exps[i]
    return total


def evaluate_matrix(data: np.ndarray, var: str, value: int) -> np.ndarray:
    out = np.empty(data.shape, dtype=object)
    for idx, x in np.ndenumerate(data):
        out[idx] = _eval_entry(x, var, value)
    return out


def _embed_raw(data: np.ndarray, n: int, pair) -> np.ndarray:
    """Raw-array counterpart of embed_pair, for evaluated grid matrices."""
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    if pair == (2, 3):
        left, right = eye, data
    else:
        left, right = data, eye
    la, lb = left.shape[0], right.shape[0]
    wide = np.multiply.outer(left, right).transpose(0, 2, 1, 3).reshape(la * lb, la * lb)
    if pair == (1, 3):
        perm = _leg_reorder(n, 3, (1, 3, 2))
        wide = wide[np.ix_(perm, perm)]
    return wide


def interpolate_grid(xs, ys, table):
    """Exact bivariate coefficients c[i][j] from values on a product grid."""
    va = linalg.object_matrix([[Fraction(x) ** j for j in range(len(xs))] for x in xs])
    vb = linalg.object_matrix([[Fraction(y) ** j for j in range(len(ys))] for y in ys])
    values = linalg.object_matrix(table)
    coeff = linalg.matmul(linalg.matmul(linalg.inverse(va), values),
                          linalg.inverse(vb).T)
    return coeff


def grid_report(identity_name, diff_at, degree_a, degree_b,
                grid_margin=1, scale=1) -> VerificationReport:
    """Check a bivariate polynomial matrix identity on a conclusive grid.

    diff_at(x, y) returns the scaled difference matrix at integer points;
    the grid strictly exceeds the stated degree bound in each variable, so
    all-zero on the grid proves the identity.  Witness values are divided
    by scale to return to unscaled units.
    """
    pts_a = degree_a + 1 + grid_margin
    pts_b = degree_b + 1 + grid_margin
    assert pts_a > degree_a and pts_b > degree_b
    xs = list(range(pts_a))
    ys = list(range(pts_b))
    diffs = {}
    for x in xs:
        for y in ys:
            diffs[x, y] = diff_at(x, y)
    mask = None
    for d in diffs.values():
        m = d != 0
        mask = m if mask is None else (mask | m)
    hit = _first_nonzero(mask)
    if hit is None:
        return VerificationReport(identity_name, True, grid_size=(pts_a, pts_b))
    row, col = hit
    table = [[_unscale(diffs[x, y][row, col], scale) for y in ys] for x in xs]
    coeff = interpolate_grid(xs, ys, table)
    for i in range(pts_a):
        for j in range(pts_b):
            if coeff[i, j]:
                witness = Witness(row, col, (i, j), coeff[i, j])
                return VerificationReport(identity_name, False, witness,
                                          grid_size=(pts_a, pts_b))
    raise AssertionError("nonzero grid value with zero interpolant")


def _unscale(value, scale):
    if scale == 1:
        return value
    if isinstance(value, Ext):
        return value * Fraction(1, scale)
    return Fraction(value, scale)


# -- Yang-Baxter -------------------------------------------------------------


def _ybe_constant(m: TensorMatrix) -> VerificationReport:
    e12 = embed_pair(m, (1, 2))
    e13 = embed_pair(m, (1, 3))
    e23 = embed_pair(m, (2, 3))
    lhs = e12 @ e13 @ e23
    rhs = e23 @ e13 @ e12
    diff = lhs.data - rhs.data
    hit = _first_nonzero(diff)
    if hit is None:
        return VerificationReport("ybe-constant", True)
    witness = Witness(hit[0], hit[1], (), diff[hit])
    return VerificationReport("ybe-constant", False, witness)


def _ybe_spectral_grid(num: TensorMatrix, grid_margin: int) -> VerificationReport:
    var = _single_variable(num)
    n = num.site_dim
    degree = num.max_degree(var)
    scale, scaled = uniform_int_scale(num)
    values = {}

    def value_at(t):
        if t not in values:
            values[t] = evaluate_matrix(scaled, var, t)
        return values[t]

    embeds = {}

    def embed_at(pair, t):
        if (pair, t) not in embeds:
            embeds[pair, t] = _embed_raw(value_at(t), n, pair)
        return embeds[pair, t]

    def diff_at(x, y):
        a = embed_at((1, 2), x)
        b = embed_at((1, 3), x + y)
        c = embed_at((2, 3), y)
        lhs = linalg.matmul(linalg.matmul(a, b), c)
        rhs = linalg.matmul(linalg.matmul(c, b), a)
        return lhs - rhs

    return grid_report("ybe-spectral", diff_at, 2 * degree, 2 * degree,
                       grid_margin=grid_margin, scale=scale ** 3)


def _ybe_spectral_poly(num: TensorMatrix) -> VerificationReport:
    """Slow cross-check: the same identity by bivariate polynomial algebra."""
    a = embed_pair(poly_substitute(num, "a"), (1, 2))
    b = embed_pair(poly_substitute(num, "a+b"), (1, 3))
    c = embed_pair(poly_substitute(num, "b"), (2, 3))
    lhs = a @ b @ c
    rhs = c @ b @ a
    diff = lhs.data - rhs.data
    for (i, j), entry in np.ndenumerate(diff):
        if entry:
            exps, value = Poly.lift(entry).monomials()[0]
            return VerificationReport("ybe-spectral", False,
                                      Witness(i, j, exps, value))
    return VerificationReport("ybe-spectral", True)


def check_ybe(r, mode: str | None = None, method: str = "grid",
              grid_margin: int = 1) -> VerificationReport:
    """R12 R13 R23 = R23 R13 R12, constant or with spectral arguments.

    In spectral mode the identity is taken at arguments (a, a+b, b); the
    check runs on the cleared numerator, which decides the identity for
    the rational object as well.
    """
    num = _numerator(r)
    if mode is None:
        mode = "spectral" if num.variables() else "constant"
    if num.legs != 2:
        raise ValueError("Yang-Baxter check expects a two-leg matrix")
    if mode == "constant":
        return _ybe_constant(num)
    if mode == "spectral":
        if method == "poly":
            return _ybe_spectral_poly(num)
        if method == "grid":
            return _ybe_spectral_grid(num, grid_margin)
        raise ValueError(f"unknown method {method!r}")
    raise ValueError(f"unknown mode {mode!r}")


# -- classical Yang-Baxter ---------------------------------------------------


def _commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return linalg.matmul(a, b) - linalg.matmul(b, a)


def _cybe_residual(r: TensorMatrix) -> np.ndarray:
    r12 = embed_pair(r, (1, 2)).data
    r13 = embed_pair(r, (1, 3)).data
    r23 = embed_pair(r, (2, 3)).data
    return (_commutator(r12, r13) + _commutator(r12, r23)
            + _commutator(r13, r23))


def check_cybe(r: TensorMatrix, omega: TensorMatrix | None = None,
               mode: str = "constant") -> VerificationReport:
    """Classical Yang-Baxter identity for r, constant or rational.

    Rational mode checks X(u, v) = omega/(u - v) + r in the two difference
    variables a = u1 - u2, b = u2 - u3 after clearing a (a+b) b; the
    residual's monomial coefficients are combinations of twelve constant
    commutators, so the check is exact polynomial arithmetic.
    """
    if r.legs != 2:
        raise ValueError("classical Yang-Baxter check expects a two-leg matrix")
    if mode == "constant":
        residual = _cybe_residual(r)
        hit = _first_nonzero(residual)
        if hit is None:
            return VerificationReport("cybe-constant", True)
        return VerificationReport("cybe-constant", False,
                                  Witness(hit[0], hit[1], (), residual[hit]))
    if mode != "rational":
        raise ValueError(f"unknown mode {mode!r}")
    if omega is None:
        raise ValueError("rational mode needs the invariant tensor omega")
    if (omega.site_dim, omega.legs) != (r.site_dim, r.legs):
        raise ValueError("omega must match r in site_dim and legs")

    emb = {}
    for name, m in (("r", r), ("w", omega)):
        for pair in ((1, 2), (1, 3), (2, 3)):
            emb[name, pair] = embed_pair(m, pair).data

    def com(na, pa, nb, pb):
        return _commutator(emb[na, pa], emb[nb, pb])

    cybe_r = _cybe_residual(r)
    coefficients = {
        (1, 0): com("w", (1, 2), "w", (2, 3)) + com("w", (1, 3), "w", (2, 3)),
        (0, 1): com("w", (1, 2), "w", (1, 3)) + com("w", (1, 2), "w", (2, 3)),
        (2, 0): com("r", (1, 2), "w", (2, 3)) + com("r", (1, 3), "w", (2, 3)),
        (0, 2): com("w", (1, 2), "r", (1, 3)) + com("w", (1, 2), "r", (2, 3)),
        (1, 1): (com("w", (1, 2), "r", (1, 3)) + com("r", (1, 2), "w", (1, 3))
                 + com("w", (1, 2), "r", (2, 3)) + com("r", (1, 2), "w", (2, 3))
                 + com("w", (1, 3), "r", (2, 3)) + com("r", (1, 3), "w", (2, 3))),
        (2, 1): cybe_r,
        (1, 2): cybe_r,
    }
    best = None
    for exps in sorted(coefficients):
        hit = _first_nonzero(coefficients[exps])
        if hit is not None:
            key = (hit[0], hit[1], exps)
            if best is None or key < best:
                best = key
    if best is None:
        return VerificationReport("cybe-rational", True)
    row, col, exps = best
    return VerificationReport("cybe-rational", False,
                              Witness(row, col, exps, coefficients[exps][row, col]))


# -- unitarity, regularity, classical limit ----------------------------------


def _proportionality(data: np.ndarray, reference: np.ndarray):
    """Scalar c with data == c * reference, or a first offending entry."""
    ref_hit = _first_nonzero(reference)
    if ref_hit is None:
        raise ValueError("reference matrix is zero")
    c = data[ref_hit]
    if isinstance(c, Poly) and c.is_constant():
        c = c.constant_value()
    diff = data - c * reference
    hit = _first_nonzero(diff)
    if hit is None:
        return c, None
    return c, (hit, diff[hit])


def check_unitarity(r) -> VerificationReport:
    """R21 R = c 1, or spectrally R12(u) R21(-u) = f(u) 1 on the numerator."""
    num = _numerator(r)
    if num.legs != 2:
        raise ValueError("unitarity check expects a two-leg matrix")
    names = num.variables()
    eye = TensorMatrix.identity(num.site_dim, 2)
    if not names:
        prod = swap_factors(num) @ num
        name = "unitarity-constant"
    else:
        var = _single_variable(num)
        minus = swap_factors(num).substitute({var: -Poly.variable(var)})
        prod = num @ minus
        name = "unitarity-spectral"
    c, offence = _proportionality(prod.data, eye.data)
    if offence is None and c:
        return VerificationReport(name, True, scalar_factor=c)
    if offence is None:
        offence = ((0, 0), prod.data[0, 0])
    (row, col), value = offence
    exps, value = ((), value) if not isinstance(value, Poly) else value.monomials()[0]
    return VerificationReport(name, False, Witness(row, col, exps, value),
                              scalar_factor=c if c else None)


def check_regularity(r) -> VerificationReport:
    """Numerator at u = 0 equals c P for a nonzero scalar c."""
    num = _numerator(r)
    if num.legs != 2:
        raise ValueError("regularity check expects a two-leg matrix")
    names = num.variables()
    at_zero = num.substitute({_single_variable(num): 0}) if names else num
    p = permutation_op(num.site_dim)
    c, offence = _proportionality(at_zero.data, p.data)
    if offence is None and c:
        return VerificationReport("regularity", True, scalar_factor=c)
    if offence is None:
        offence = ((0, 0), at_zero.data[0, 0])
    (row, col), value = offence
    return VerificationReport("regularity", False, Witness(row, col, (), value),
                              scalar_factor=c if c else None)


def check_classical_limit(family: TensorMatrix, r: TensorMatrix) -> VerificationReport:
    """Degree-1 coefficient of a one-parameter family equals r exactly."""
    var = _single_variable(family)
    eye = TensorMatrix.identity(family.site_dim, family.legs)
    if family.coefficient(var, 0) != eye:
        raise ValueError("family does not start at the identity")
    linear = family.coefficient(var, 1)
    if r.legs != family.legs or r.site_dim != family.site_dim:
        raise ValueError("candidate classical limit has mismatched shape")
    diff = linear.data - r.data
    hit = _first_nonzero(diff)
    if hit is None:
        return VerificationReport("classical-limit", True)
    return VerificationReport("classical-limit", False,
                              Witness(hit[0], hit[1], (1,), diff[hit]))
