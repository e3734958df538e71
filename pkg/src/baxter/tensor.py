"""Square matrices on tensor powers of C^n with exact entries.

A TensorMatrix acts on (C^n)^{tensor legs} and stores its entries densely.
The composite basis is row-major: e_{i1} tensor ... tensor e_{il} has index
((i1-1)*n + (i2-1))*n + ... with 1-based leg indices.  Entries are exact
scalars or Poly values; floats never enter.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import linalg
from .poly import Poly
from .scalars import is_exact_scalar


def composite_index(indices, n: int) -> int:
    """Row-major composite index (0-based result, 1-based leg indices)."""
    out = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"leg index {i} out of range 1..{n}")
        out = out * n + (i - 1)
    return out


def _leg_reorder(n: int, legs: int, source: tuple) -> np.ndarray:
    """Index map p with p[new] = old, where old leg k is new leg source[k].

    Reindexing a matrix M by p on rows and columns therefore makes old
    leg k act on the new leg position source[k].
    """
    size = n ** legs
    out = np.empty(size, dtype=np.intp)
    for idx in range(size):
        digits = []
        rest = idx
        for _ in range(legs):
            digits.append(rest % n)
            rest //= n
        digits.reverse()
        old = 0
        for k in range(legs):
            old = old * n + digits[source[k] - 1]
        out[idx] = old
    return out


class TensorMatrix:
    __slots__ = ("site_dim", "legs", "data")

    def __init__(self, site_dim: int, legs: int, entries):
        if site_dim < 1 or legs < 1:
            raise ValueError("site_dim and legs must be positive")
        size = site_dim ** legs
        if isinstance(entries, np.ndarray):
            data = entries.astype(object, copy=True)
        else:
            data = linalg.object_matrix(entries)
        if data.shape != (size, size):
            raise ValueError(f"expected {size}x{size} entries, got {data.shape}")
        for idx, x in np.ndenumerate(data):
            if isinstance(x, bool) or not (is_exact_scalar(x) or isinstance(x, Poly)):
                raise TypeError(f"inexact entry {x!r} at {idx}")
        data.flags.writeable = False
        object.__setattr__(self, "site_dim", site_dim)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("TensorMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, site_dim: int, legs: int = 1) -> "TensorMatrix":
        size = site_dim ** legs
        data = np.zeros((size, size), dtype=object)
        for i in range(size):
            data[i, i] = 1
        return cls(site_dim, legs, data)

    @classmethod
    def zero(cls, site_dim: int, legs: int = 1) -> "TensorMatrix":
        size = site_dim ** legs
        return cls(site_dim, legs, np.zeros((size, size), dtype=object))

    @classmethod
    def from_entries(cls, site_dim, legs, mapping) -> "TensorMatrix":
        """Build from {(row, col): value} with 0-based composite indices."""
        size = site_dim ** legs
        data = np.zeros((size, size), dtype=object)
        for (i, j), value in mapping.items():
            data[i, j] = value
        return cls(site_dim, legs, data)

    @property
    def size(self) -> int:
        return self.site_dim ** self.legs

    def rows(self):
        return self.data.tolist()

    def entry(self, i: int, j: int):
        return self.data[i, j]

    # -- ring operations ---------------------------------------------------

    def _like(self, data: np.ndarray) -> "TensorMatrix":
        return TensorMatrix(self.site_dim, self.legs, data)

    def _check_same(self, other: "TensorMatrix"):
        if not isinstance(other, TensorMatrix):
            raise TypeError(f"TensorMatrix expected, got {type(other).__name__}")
        if (self.site_dim, self.legs) != (other.site_dim, other.legs):
            raise ValueError(
                f"shape mismatch: {self.site_dim}^{self.legs} vs "
                f"{other.site_dim}^{other.legs}")

    def __add__(self, other):
        self._check_same(other)
        return self._like(self.data + other.data)

    def __sub__(self, other):
        self._check_same(other)
        return self._like(self.data - other.data)

    def __neg__(self):
        return self._like(-self.data)

    def __mul__(self, scalar):
        if not (is_exact_scalar(scalar) or isinstance(scalar, Poly)):
            return NotImplemented
        out = np.empty(self.data.shape, dtype=object)
        for idx, x in np.ndenumerate(self.data):
            out[idx] = x * scalar
        return self._like(out)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check_same(other)
        return self._like(linalg.matmul(self.data, other.data))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = TensorMatrix.identity(self.site_dim, self.legs)
        for _ in range(exponent):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        if (self.site_dim, self.legs) != (other.site_dim, other.legs):
            return False
        return bool((self.data == other.data).all())

    def __hash__(self):
        return hash((self.site_dim, self.legs))

    def is_zero(self) -> bool:
        return all(not x for x in self.data.flat)

    def transpose(self) -> "TensorMatrix":
        return self._like(self.data.T)

    def inverse(self) -> "TensorMatrix":
        return self._like(linalg.inverse(self.data))

    def reindexed(self, perm: np.ndarray) -> "TensorMatrix":
        return self._like(self.data[np.ix_(perm, perm)])

    # -- polynomial entries --------------------------------------------------

    def variables(self) -> tuple:
        names = set()
        for x in self.data.flat:
            if isinstance(x, Poly):
                names.update(x.vars)
        return tuple(sorted(names))

    def max_degree(self, var=None) -> int:
        best = 0
        for x in self.data.flat:
            if isinstance(x, Poly):
                if var is None or var in x.vars:
                    best = max(best, x.degree(var) if var else x.degree())
        return best

    def substitute(self, assignment: dict) -> "TensorMatrix":
        out = np.empty(self.data.shape, dtype=object)
        for idx, x in np.ndenumerate(self.data):
            if isinstance(x, Poly):
                keep = {k: v for k, v in assignment.items() if k in x.vars}
                out[idx] = x.substitute(keep) if keep else x
            else:
                out[idx] = x
        return self._like(out)

    def derivative(self, var: str) -> "TensorMatrix":
        out = np.empty(self.data.shape, dtype=object)
        for idx, x in np.ndenumerate(self.data):
            out[idx] = x.derivative(var) if isinstance(x, Poly) and var in x.vars else 0
        return self._like(out)

    def coefficient(self, var: str, power: int) -> "TensorMatrix":
        """Matrix of coefficients of var**power (entries constant in var)."""
        out = np.empty(self.data.shape, dtype=object)
        for idx, x in np.ndenumerate(self.data):
            if isinstance(x, Poly) and var in x.vars:
                i = x.vars.index(var)
                picked = {e[:i] + e[i + 1:]: c for e, c in x.coeffs.items()
                          if e[i] == power}
                rest = x.vars[:i] + x.vars[i + 1:]
                p = Poly(rest, picked)
                out[idx] = p.constant_value() if p.is_constant() else p
            else:
                out[idx] = x if power == 0 else 0
        return self._like(out)

    def __repr__(self):
        return (f"TensorMatrix(site_dim={self.site_dim}, legs={self.legs},\n"
                f"{self.data})")


# -- basic single-leg matrices -------------------------------------------


def matrix_unit(n: int, i: int, j: int) -> TensorMatrix:
    """E_ij with 1-based indices: the matrix sending e_j to e_i."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i},{j}) out of range 1..{n}")
    return TensorMatrix.from_entries(n, 1, {(i - 1, j - 1): 1})


def diagonal_matrix(values) -> TensorMatrix:
    n = len(values)
    return TensorMatrix.from_entries(n, 1, {(i, i): v for i, v in enumerate(values)})


def anti_diagonal_form(n: int) -> TensorMatrix:
    """The bilinear form J with J[i, n+1-i] = 1."""
    return TensorMatrix.from_entries(n, 1, {(i, n - 1 - i): 1 for i in range(n)})


# -- tensor-leg operations --------------------------------------------------


def kron(a: TensorMatrix, b: TensorMatrix) -> TensorMatrix:
    """Tensor product; legs add, leg 1 of the result is leg 1 of a."""
    if a.site_dim != b.site_dim:
        raise ValueError(f"site_dim mismatch {a.site_dim} vs {b.site_dim}")
    prod = np.multiply.outer(a.data, b.data)
    data = prod.transpose(0, 2, 1, 3).reshape(a.size * b.size, a.size * b.size)
    return TensorMatrix(a.site_dim, a.legs + b.legs, data)


def permutation_op(n: int) -> TensorMatrix:
    """P with P(x tensor y) = y tensor x."""
    entries = {}
    for i in range(n):
        for j in range(n):
            entries[i * n + j, j * n + i] = 1
    return TensorMatrix.from_entries(n, 2, entries)


def swap_factors(m: TensorMatrix) -> TensorMatrix:
    """R -> R^{21}: conjugation by P, i.e. both legs read in swapped order."""
    if m.legs != 2:
        raise ValueError("swap_factors acts on two-leg matrices")
    perm = _leg_reorder(m.site_dim, 2, (2, 1))
    return m.reindexed(perm)


def embed_two_leg(m: TensorMatrix, total_legs: int, pair) -> TensorMatrix:
    """Embed a two-leg matrix so its factors act on legs pair = (s, t)."""
    s, t = pair
    if m.legs != 2:
        raise ValueError("embed_two_leg expects a two-leg matrix")
    if s == t or not (1 <= s <= total_legs and 1 <= t <= total_legs):
        raise ValueError(f"invalid leg pair {pair} for {total_legs} legs")
    n = m.site_dim
    rest = TensorMatrix.identity(n, total_legs - 2) if total_legs > 2 else None
    wide = kron(m, rest) if rest is not None else m
    # wide has m's legs at positions (1, 2); reindex so they act on (s, t):
    # old leg 1 reads new leg s, old leg 2 reads new leg t, the identity
    # legs read the remaining positions in order.
    source = (s, t) + tuple(k for k in range(1, total_legs + 1) if k not in (s, t))
    perm = _leg_reorder(n, total_legs, source)
    return wide.reindexed(perm)


def embed_pair(m: TensorMatrix, pair) -> TensorMatrix:
    """Embed a two-leg matrix into three legs at pair in {(1,2),(1,3),(2,3)}."""
    pair = tuple(pair)
    if pair not in {(1, 2), (1, 3), (2, 3)}:
        raise ValueError(f"invalid pair {pair}")
    return embed_two_leg(m, 3, pair)


def partial_transpose_first(m: TensorMatrix) -> TensorMatrix:
    """Transpose in the first tensor factor only."""
    if m.legs != 2:
        raise ValueError("partial transpose acts on two-leg matrices")
    n = m.site_dim
    rest = m.size // n
    four = m.data.reshape(n, rest, n, rest)
    data = four.transpose(2, 1, 0, 3).reshape(m.size, m.size)
    return TensorMatrix(m.site_dim, m.legs, data)


def form_transpose_first(m: TensorMatrix, form: TensorMatrix | None = None) -> TensorMatrix:
    """(G tensor 1) . m^{t1} . (G^{-1} tensor 1) for a bilinear form G."""
    if m.legs != 2:
        raise ValueError("form_transpose_first acts on two-leg matrices")
    flipped = partial_transpose_first(m)
    if form is None:
        return flipped
    if form.legs != 1 or form.site_dim != m.site_dim:
        raise ValueError("form must be a single-leg matrix of matching dimension")
    one = TensorMatrix.identity(m.site_dim, 1)
    left = kron(form, one)
    right = kron(form.inverse(), one)
    return left @ flipped @ right


def structure_op(kind: str, n: int, form: TensorMatrix | None = None) -> TensorMatrix:
    """Named two-leg operators: P, K, and the Casimir images.

    casimir_sl is P; casimir_so is P - K, with K taken with respect to
    the given bilinear form (identity when omitted).
    """
    if kind == "P":
        return permutation_op(n)
    if kind == "K":
        return form_transpose_first(permutation_op(n), form)
    if kind == "casimir_sl":
        return permutation_op(n)
    if kind == "casimir_so":
        p = permutation_op(n)
        return p - form_transpose_first(p, form)
    raise ValueError(f"unknown operator kind {kind!r}")


def partial_trace_first(m: TensorMatrix) -> TensorMatrix:
    """Trace out leg 1, leaving a matrix on the remaining legs."""
    if m.legs < 2:
        raise ValueError("need at least two legs to trace one out")
    n = m.site_dim
    rest = m.size // n
    out = np.zeros((rest, rest), dtype=object)
    for a in range(n):
        out = out + m.data[a * rest:(a + 1) * rest, a * rest:(a + 1) * rest]
    return TensorMatrix(m.site_dim, m.legs - 1, out)


def poly_substitute(m: TensorMatrix, target, var: str | None = None) -> TensorMatrix:
    """Substitute the single entry variable by 'a', 'a+b', 'b', or a value."""
    names = m.variables()
    if var is None:
        if len(names) != 1:
            raise ValueError(f"need exactly one entry variable, have {names}")
        var = names[0]
    if isinstance(target, str):
        if target == "a+b":
            value = Poly.variable("a") + Poly.variable("b")
        elif target in ("a", "b"):
            value = Poly.variable(target)
        else:
            raise ValueError(f"unknown substitution target {target!r}")
    else:
        value = target
    return m.substitute({var: value})
