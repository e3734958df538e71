"""Tests for chain Hamiltonians, transfer matrices, and calibration."""

from fractions import Fraction

import pytest

from baxter.poly import Poly
from baxter.solutions import SpectralRMatrix, baxterize, example1_R, yangian_sl_R
from baxter.spin_chain import (ChainSpec, bonds, calibrate, check_commutation,
                               compare_up_to_affine, derive_hamiltonian,
                               exchange_density, remark_hamiltonian,
                               shift_operator, sigma_minus, sigma_x, sigma_y,
                               sigma_z, substitute_square, transfer_matrix)
from baxter.tensor import (TensorMatrix, embed_two_leg, kron, matrix_unit,
                           permutation_op)


def test_exchange_density_is_pauli_sum():
    total = (kron(sigma_x(), sigma_x()) + kron(sigma_y(), sigma_y())
             + kron(sigma_z(), sigma_z()))
    assert total == exchange_density()
    assert exchange_density() == permutation_op(2) * 2 \
        - TensorMatrix.identity(2, 2)


def test_chain_spec_validation():
    with pytest.raises(ValueError):
        ChainSpec(1)
    with pytest.raises(ValueError):
        ChainSpec(3, "moebius")
    spec = ChainSpec(3, "open", Fraction(1, 2))
    assert spec.sites == 3 and spec.deformation == Fraction(1, 2)


def test_bonds():
    assert bonds(ChainSpec(3)) == [(1, 2), (2, 3), (3, 1)]
    assert bonds(ChainSpec(3, "open")) == [(1, 2), (2, 3)]
    assert bonds(ChainSpec(2, "open")) == [(1, 2)]


def test_deformed_density_frozen():
    # two open sites, deformation 1: a single bond, written out by hand
    h = remark_hamiltonian(ChainSpec(2, "open", 1))
    low = sigma_minus()
    one = TensorMatrix.identity(2, 1)
    want = (exchange_density() + kron(low, low)
            + kron(low, one) - kron(one, low))
    assert h == want


def test_linear_part_telescopes_only_when_periodic():
    xi = Poly.variable("xi")
    for sites in (3, 4):
        closed = remark_hamiltonian(ChainSpec(sites, deformation=xi))
        assert closed.coefficient("xi", 1).is_zero()
        open_h = remark_hamiltonian(ChainSpec(sites, "open", xi))
        assert not open_h.coefficient("xi", 1).is_zero()


def test_undeformed_chain_is_pure_exchange():
    spec = ChainSpec(3)
    h = remark_hamiltonian(spec)
    want = TensorMatrix.zero(2, 3)
    for pair in bonds(spec):
        want = want + embed_two_leg(exchange_density(), 3, pair)
    assert h == want


def test_derived_density_is_permutation():
    spec = ChainSpec(3)
    h = derive_hamiltonian(yangian_sl_R(2), spec)
    want = TensorMatrix.zero(2, 3)
    for pair in bonds(spec):
        want = want + embed_two_leg(permutation_op(2), 3, pair)
    assert h == want


def test_derive_rejects_non_regular():
    u = Poly.variable("u")
    e = matrix_unit(2, 1, 2)
    bad = SpectralRMatrix(TensorMatrix.identity(2, 2) * u + kron(e, e),
                          Poly.lift(1, ("u",)))
    with pytest.raises(ValueError):
        derive_hamiltonian(bad, ChainSpec(3))


def test_exchange_vs_derived_affine_relation():
    # 2P - 1 per bond against P per bond: factor 2, shift -sites
    for sites in (3, 4):
        h0 = remark_hamiltonian(ChainSpec(sites, deformation=0))
        hd = derive_hamiltonian(yangian_sl_R(2), ChainSpec(sites))
        assert compare_up_to_affine(h0, hd) == (2, -sites)


def test_compare_up_to_affine():
    # the deformed chain is not flip-invariant, so conj matters here
    h = remark_hamiltonian(ChainSpec(3, deformation=1))
    flip = sigma_x()
    flipped = kron(kron(flip, flip), flip)
    target = flipped @ h @ flipped.inverse()
    synthetic = target * 3 - TensorMatrix.identity(2, 3) * 5
    assert compare_up_to_affine(synthetic, h, conj=sigma_x()) == (3, -5)
    assert compare_up_to_affine(synthetic, h) is None


def test_shift_operator():
    assert shift_operator(2) == permutation_op(2)
    s = shift_operator(3)
    assert s @ s @ s == TensorMatrix.identity(2, 3)
    # e_{abc} -> e_{cab}: check one basis column
    col = 0b011  # (a, b, c) = (0, 1, 1)
    hit = [i for i in range(8) if s.data[i, col]]
    assert hit == [0b101]


def test_transfer_matrix_at_origin_is_shift():
    for sites in (2, 3):
        fam = transfer_matrix(yangian_sl_R(2), ChainSpec(sites))
        assert fam.sites == sites and fam.aux_dim == 2
        assert fam.matrix.substitute({"u": 0}) == shift_operator(sites)
        assert fam.matrix.max_degree("u") <= sites


def test_transfer_matrix_needs_periodic():
    with pytest.raises(ValueError):
        transfer_matrix(yangian_sl_R(2), ChainSpec(3, "open"))


def test_transfer_self_commutation():
    fam = transfer_matrix(yangian_sl_R(2), ChainSpec(3))
    rep = check_commutation(fam, fam)
    assert rep.passed and rep.grid_size is not None


def test_hamiltonian_commutes_with_transfer():
    fam = transfer_matrix(yangian_sl_R(2), ChainSpec(3))
    h = derive_hamiltonian(yangian_sl_R(2), ChainSpec(3))
    assert check_commutation(h, fam).passed
    assert check_commutation(fam, h).passed


def test_commutation_failure_witness():
    fam = transfer_matrix(yangian_sl_R(2), ChainSpec(3))
    one = TensorMatrix.identity(2, 1)
    sz = embed_two_leg(kron(sigma_z(), one), 3, (1, 2))
    rep = check_commutation(sz, fam)
    assert not rep.passed
    w = rep.witness
    assert (w.row, w.col, w.exponents, w.value) == (1, 4, (0, 1), 2)


def test_commutation_validates_shapes():
    fam = transfer_matrix(yangian_sl_R(2), ChainSpec(3))
    with pytest.raises(ValueError):
        check_commutation(fam, permutation_op(2))


def test_substitute_square():
    xi = Poly.variable("xi")
    h = remark_hamiltonian(ChainSpec(3, deformation=xi))
    fixed = substitute_square(h, "xi", Fraction(1, 2))
    assert fixed == remark_hamiltonian(ChainSpec(3, deformation=0)) \
        + (h.coefficient("xi", 2)) * Fraction(1, 2)
    open_h = remark_hamiltonian(ChainSpec(3, "open", xi))
    with pytest.raises(ValueError):
        substitute_square(open_h, "xi", 1)


def test_calibration_constants():
    for sites in (3, 4):
        for tau in (0, 1, 2):
            assert calibrate(sites, tau) == (2, -sites)


if __name__ == "__main__":
    test_calibration_constants()
