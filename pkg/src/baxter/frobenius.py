"""Triangular subalgebras, 2-cocycles, and the r-matrices they induce.

A basis of n x n matrices spanning a Lie subalgebra is closed under
commutators; the structure constants from that closure feed the cocycle
identity check.  A nondegenerate skew 2-cocycle B yields the classical
r-matrix sum_ij (B^{-1})_ij x_i tensor x_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .tensor import TensorMatrix, anti_diagonal_form, kron, matrix_unit
from .verify import VerificationReport, Witness


class NotClosed(ValueError):
    """A commutator of basis elements left their span."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"commutator of basis elements {pair} is not in the span")


class DependentBasis(ValueError):
    pass


class SingularCocycle(ValueError):
    pass


@dataclass(frozen=True)
class SubalgebraBasis:
    """Linearly independent n x n matrices with commutator structure constants.

    structure[i][j][k] is the coefficient of x_k in [x_i, x_j]; it is None
    until closure_and_structure has run.
    """

    elements: tuple
    structure: object = None

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def site_dim(self) -> int:
        return self.elements[0].site_dim


@dataclass(frozen=True)
class LinearFunctional:
    """Functional A -> sum_ij coefficients[i, j] A[i, j] on n x n matrices."""

    coefficients: TensorMatrix

    def __call__(self, x: TensorMatrix):
        total = 0
        for idx, weight in np.ndenumerate(self.coefficients.data):
            if weight:
                total = total + weight * x.data[idx]
        return total


@dataclass(frozen=True)
class CocycleMatrix:
    """Skew matrix B_ij = B(x_i, x_j) over a closed basis."""

    basis: SubalgebraBasis
    matrix: np.ndarray


def _commutator(a: TensorMatrix, b: TensorMatrix) -> TensorMatrix:
    return a @ b - b @ a


def closure_and_structure(basis) -> SubalgebraBasis:
    """Verify closure, returning the basis with structure constants filled."""
    if isinstance(basis, SubalgebraBasis):
        elements = basis.elements
    else:
        elements = tuple(basis)
    m = len(elements)
    span = np.empty((elements[0].size ** 2, m), dtype=object)
    for k, x in enumerate(elements):
        span[:, k] = x.data.reshape(-1)
    if linalg.rank(span) != m:
        raise DependentBasis(f"{m} elements span a smaller space")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    rhs = np.empty((span.shape[0], len(pairs)), dtype=object)
    for col, (i, j) in enumerate(pairs):
        rhs[:, col] = _commutator(elements[i], elements[j]).data.reshape(-1)
    reduced, pivots = linalg.rref(np.concatenate([span, rhs], axis=1))
    for p in pivots:
        if p >= m:
            raise NotClosed(pairs[p - m])
    structure = np.zeros((m, m, m), dtype=object)
    for col, (i, j) in enumerate(pairs):
        for row, p in enumerate(pivots):
            structure[i, j, p] = reduced[row, m + col]
            structure[j, i, p] = -reduced[row, m + col]
    structure.flags.writeable = False
    return SubalgebraBasis(elements, structure)


def cocycle_from_functional(basis, functional: LinearFunctional) -> CocycleMatrix:
    """B_ij = f([x_i, x_j]); closes the basis first when needed."""
    if not isinstance(basis, SubalgebraBasis) or basis.structure is None:
        basis = closure_and_structure(basis)
    m = basis.dim
    matrix = np.zeros((m, m), dtype=object)
    for i in range(m):
        for j in range(i + 1, m):
            value = functional(_commutator(basis.elements[i], basis.elements[j]))
            matrix[i, j] = value
            matrix[j, i] = -value
    matrix.flags.writeable = False
    return CocycleMatrix(basis, matrix)


def check_cocycle(cocycle: CocycleMatrix) -> VerificationReport:
    """Cyclic identity B([xi,xj],xk) + B([xk,xi],xj) + B([xj,xk],xi) = 0.

    The report's details also record nondegeneracy (det B != 0), which the
    cyclic identity itself does not require.
    """
    basis = cocycle.basis
    if basis.structure is None:
        basis = closure_and_structure(basis)
    struct = basis.structure
    b = cocycle.matrix
    m = basis.dim

    def paired(i, j, k):
        # B([x_i, x_j], x_k) through the structure constants
        total = 0
        for s in range(m):
            if struct[i, j, s]:
                total = total + struct[i, j, s] * b[s, k]
        return total

    witness = None
    for i in range(m):
        for j in range(m):
            for k in range(m):
                value = paired(i, j, k) + paired(k, i, j) + paired(j, k, i)
                if value:
                    witness = Witness(i, j, (k,), value)
                    break
            if witness:
                break
        if witness:
            break
    determinant = linalg.det(b)
    details = {"nondegenerate": bool(determinant), "determinant": determinant}
    return VerificationReport("cocycle", witness is None, witness, details=details)


def r_from_cocycle(cocycle: CocycleMatrix) -> TensorMatrix:
    """sum_ij (B^{-1})_ij x_i tensor x_j for a nondegenerate cocycle."""
    try:
        inv = linalg.inverse(cocycle.matrix)
    except linalg.SingularMatrixError as err:
        raise SingularCocycle("cocycle matrix is degenerate") from err
    elements = cocycle.basis.elements
    n = cocycle.basis.site_dim
    total = TensorMatrix.zero(n, 2)
    for (i, j), weight in np.ndenumerate(inv):
        if weight:
            total = total + weight * kron(elements[i], elements[j])
    return total


# -- the triangular family behind the first construction ---------------------


def example1_basis(n: int) -> SubalgebraBasis:
    """Upper-triangular matrices with a_ii = -a_{n+1-i, n+1-i}.

    Basis: H_i = E_ii - E_{n+1-i, n+1-i} for i <= n/2, then E_ij for i < j.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    elements = [matrix_unit(n, i, i) - matrix_unit(n, n + 1 - i, n + 1 - i)
                for i in range(1, n // 2 + 1)]
    elements += [matrix_unit(n, i, j)
                 for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return SubalgebraBasis(tuple(elements))


def anti_diagonal_functional(n: int) -> LinearFunctional:
    """f(A) = sum of the anti-diagonal entries A[i, n+1-i]."""
    return LinearFunctional(anti_diagonal_form(n))


def example1_pair(n: int):
    """(closed basis, functional) whose coboundary cocycle is nondegenerate."""
    return closure_and_structure(example1_basis(n)), anti_diagonal_functional(n)
