"""Shared pieces for the check suites: the 9x9 R-matrix and residual helpers."""

from __future__ import annotations

import time
from contextlib import contextmanager

from ..coeffring import PolynomialModel
from ..ncalg import NCElem, Presentation
from ..ncmatrix import NCMat, ScalarAlgebra, kron, matrix_unit, permute_conj, unitriangular_inverse
from ..report import Report

SCALARS = ScalarAlgebra(PolynomialModel())


@contextmanager
def timed(rep: Report, timing: bool = True):
    t0 = time.perf_counter()
    try:
        yield rep
    finally:
        rep.elapsed_ms = (time.perf_counter() - t0) * 1000 if timing else 0.0


def eu(i: int, j: int, algebra=SCALARS) -> NCMat:
    return matrix_unit(i, j, algebra)


def ee(i, j, k, l, algebra=SCALARS) -> NCMat:
    """``e_ij (x) e_kl`` as a 9x9 matrix."""
    return kron(eu(i, j, algebra), eu(k, l, algebra))


def r_matrix(h=None, w=None, drop: tuple = ()) -> NCMat:
    """The 9x9 R-matrix with polynomial entries.

    ``drop`` names pieces to omit (for corruption controls): any of
    ``"h12_23"``, ``"h13_22"``, ``"w22_23"``, ``"w23_22"``.
    """
    M = SCALARS.model
    h = M.h() if h is None else M.coerce(h)
    w = M.w() if w is None else M.coerce(w)
    pieces = {
        "h12_23": ee(1, 2, 2, 3).scale(2 * h),
        "h13_22": ee(1, 3, 2, 2).scale(-2 * h),
        "w22_23": ee(2, 2, 2, 3).scale(w),
        "w23_22": ee(2, 3, 2, 2).scale(-w),
    }
    R = NCMat.identity(9, SCALARS)
    for key, piece in pieces.items():
        if key not in drop:
            R = R + piece
    return R


def r_plus(R: NCMat) -> NCMat:
    return permute_conj(R)


def r_tilde(R: NCMat) -> NCMat:
    return unitriangular_inverse(permute_conj(R))


def lift(M: NCMat, algebra) -> NCMat:
    """Scalar matrix reinterpreted over another algebra context."""
    return M.lift(algebra)


def pair_index(r: int) -> str:
    """Flattened 0-based two-leg index as ``(i,k)`` (1-based)."""
    return f"({r // 3 + 1},{r % 3 + 1})"


def record_matrix(rep: Report, M: NCMat, label: str, two_leg: bool = False) -> int:
    """Add every nonzero entry of ``M`` as a residual; return the count."""
    n = 0
    for (i, j), x in M.nonzero_entries():
        if two_leg:
            loc = f"{label}[{pair_index(i - 1)},{pair_index(j - 1)}]"
        else:
            loc = f"{label}[{i},{j}]"
        rep.add_residual(loc, M.format_entry(i, j))
        n += 1
    return n


def compare_matrices(rep: Report, A: NCMat, B: NCMat, label: str, two_leg: bool = False) -> bool:
    before = len(rep.residuals)
    record_matrix(rep, A - B, label, two_leg)
    return len(rep.residuals) == before


def expect_zero(rep: Report, P: Presentation, x: NCElem, label: str) -> bool:
    y = P.normal_form(x)
    if y:
        rep.add_residual(label, P.format(y))
        return False
    return True


def expect_equal(rep: Report, P: Presentation, x, y, label: str) -> bool:
    return expect_zero(rep, P, x - y, label)


def truncate_elem(x: NCElem, cap: int) -> NCElem:
    return NCElem({k: v.truncate(cap) if hasattr(v, "truncate") else v for k, v in x.terms.items()})
