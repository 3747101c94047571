import pytest

from hwreflect.catalog import re_base
from hwreflect.coeffring import PolyHW
from hwreflect.ncmatrix import (
    MatrixError,
    NCMat,
    NotUnitriangularError,
    chain,
    kron,
    leg_embed,
    mat_mul,
    matrix_unit,
    permute_conj,
    unitriangular_inverse,
)
from hwreflect.verifier.common import SCALARS, ee, pair_index, r_matrix, r_plus, r_tilde

h, w = PolyHW.h(), PolyHW.w()


def test_kron_layout():
    A = NCMat([[1, 2], [3, 4]], SCALARS)
    K = kron(A, NCMat.identity(2, SCALARS))
    assert [[int(str(K.entry(i, j))) for j in range(1, 5)] for i in range(1, 5)] == [
        [1, 0, 2, 0], [0, 1, 0, 2], [3, 0, 4, 0], [0, 3, 0, 4]]


def test_pair_index_convention():
    # e_ij (x) e_kl sits at row 3(i-1)+k, column 3(j-1)+l
    E = ee(1, 2, 2, 3)
    assert [(i, j) for (i, j), _ in E.nonzero_entries()] == [(2, 6)]
    assert pair_index(1) == "(1,2)" and pair_index(5) == "(2,3)"


def test_r_matrix_entries():
    R = r_matrix()
    off = {(pair_index(i - 1), pair_index(j - 1)): R.format_entry(i, j)
           for (i, j), _ in R.nonzero_entries() if i != j}
    # row (i,k), column (j,l) for e_ij (x) e_kl
    assert off == {("(1,2)", "(2,3)"): "2*h", ("(1,2)", "(3,2)"): "-2*h",
                   ("(2,2)", "(2,3)"): "w", ("(2,2)", "(3,2)"): "-w"}
    assert all(R.format_entry(i, i) == "1" for i in range(1, 10))


def test_r_plus_swaps_legs():
    Rp = r_plus(r_matrix())
    got = {(pair_index(i - 1), pair_index(j - 1)): Rp.format_entry(i, j)
           for (i, j), _ in Rp.nonzero_entries() if i != j}
    assert got == {("(2,1)", "(3,2)"): "2*h", ("(2,1)", "(2,3)"): "-2*h",
                   ("(2,2)", "(3,2)"): "w", ("(2,2)", "(2,3)"): "-w"}


def test_unitriangular_inverse():
    R = r_matrix()
    I9 = NCMat.identity(9, SCALARS)
    assert mat_mul(R, unitriangular_inverse(R)) == I9
    assert mat_mul(unitriangular_inverse(R), R) == I9
    assert mat_mul(r_tilde(R), r_plus(R)) == I9


def test_unitriangular_inverse_rejects_general_matrix():
    with pytest.raises(NotUnitriangularError):
        unitriangular_inverse(NCMat([[2, 0], [0, 1]], SCALARS))


def test_leg_embed_errors_and_shape():
    R = r_matrix()
    assert leg_embed(R, "13", 3).shape == (27, 27)
    with pytest.raises(MatrixError):
        leg_embed(R, "11", 3)
    with pytest.raises(MatrixError):
        leg_embed(matrix_unit(1, 2, SCALARS), "12", 2)


def test_leg_embed_commutes_across_legs():
    A = leg_embed(matrix_unit(1, 2, SCALARS), "1", 2)
    B = leg_embed(matrix_unit(2, 3, SCALARS), "2", 2)
    assert mat_mul(A, B) == mat_mul(B, A)
    assert mat_mul(A, B) == kron(matrix_unit(1, 2, SCALARS), matrix_unit(2, 3, SCALARS))


def test_permute_conj_involution():
    R = r_matrix()
    assert permute_conj(permute_conj(R)) == R


def test_noncommutative_entries_keep_order():
    P = re_base()
    al, be = P.gens("alpha", "beta")
    A = NCMat([[al, 0], [0, 1]], P)
    B = NCMat([[be, 0], [0, 1]], P)
    AB, BA = mat_mul(A, B), mat_mul(B, A)
    assert P.format(AB.entry(1, 1)) == "alpha*beta"
    assert P.format(BA.entry(1, 1)) == "alpha*beta - 2*h*alpha*gamma + w*alpha^2"
    assert chain(A, B, A) == mat_mul(mat_mul(A, B), A)
