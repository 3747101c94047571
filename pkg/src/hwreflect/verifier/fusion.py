"""Fusion of two reflection matrices and covariance under the function algebra."""

from __future__ import annotations

from ..catalog import build_fun, build_re, build_re_double, fun_T, re_K
from ..ncalg import NCElem, commuting_union
from ..ncmatrix import NCMat, chain, leg_embed, mat_mul
from ..report import Report
from ..tensorspace import antipode_apply
from .common import compare_matrices, expect_zero, lift, r_matrix, record_matrix, timed
from .reflection import re_residual


def complementary_residual(K: NCMat, Kp: NCMat, algebra, R=None) -> NCMat:
    """``R K1 R^-1 K'2 - K'2 R K1 R^-1``."""
    from ..ncmatrix import unitriangular_inverse

    R = R if R is not None else r_matrix()
    Rl, Ri = lift(R, algebra), lift(unitriangular_inverse(R), algebra)
    K1, Kp2 = leg_embed(K, "1", 2), leg_embed(Kp, "2", 2)
    return chain(Rl, K1, Ri, Kp2) - chain(Kp2, Rl, K1, Ri)


def _K_inverse(P, primed=False) -> NCMat:
    sfx = "p" if primed else ""
    al, be, ga, de = P.gens(*(g + sfx for g in ("alpha", "beta", "gamma", "delta")))
    gi = P.gen("gamma" + sfx + "inv")
    return NCMat([[1, -gi * al, -be + gi * al * de],
                  [0, gi, -gi * de],
                  [0, 0, 1]], P).map(P.normal_form)


def corrupt_cross_rules(P):
    """Sign of ``w`` flipped in the primed-alpha/beta exchange."""
    h, w = P.model.h(), P.model.w()
    al, be, alp = (NCElem.gen(g) for g in ("alpha", "beta", "alphap"))
    return {("alphap", "beta"): be * alp + al * alp * w}


def check_fusion(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("fusion" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        if corrupt:
            from ..catalog import re_double_base
            from ..coeffring import PolynomialModel

            base = re_double_base(PolynomialModel())
            P = build_re_double(cross_updates=corrupt_cross_rules(base))
        else:
            P = build_re_double()
        K, Kp = re_K(P), re_K(P, primed=True)
        record_matrix(rep, complementary_residual(K, Kp, P), "complementary", two_leg=True)
        Kinv = _K_inverse(P)
        I = NCMat.identity(3, P)
        compare_matrices(rep, mat_mul(K, Kinv), I, "K*Kinv")
        Khat = mat_mul(K, Kp)
        Khathat = chain(K, Kp, Kinv)
        record_matrix(rep, re_residual(Khat, P), "RE for KK'", two_leg=True)
        record_matrix(rep, re_residual(Khathat, P), "RE for KK'K^-1", two_leg=True)
        al, be, ga, de = P.gens("alpha", "beta", "gamma", "delta")
        alp, bep, gap, dep = P.gens("alphap", "betap", "gammap", "deltap")
        central = {
            "C1": ga, "C2": P.normal_form(al * de - be * ga + be),
            "C1'": gap, "C2'": P.normal_form(alp * dep - bep * gap + bep),
        }
        for m, c in central.items():
            other = ("alphap", "betap", "gammap", "deltap") if "'" not in m else \
                ("alpha", "beta", "gamma", "delta")
            for g in other:
                expect_zero(rep, P, P.commutator(c, P.gen(g)), f"[{g},{m}]")
        if not corrupt:
            _covariance(rep)
    return rep


def _covariance(rep: Report):
    F, fhd = build_fun()
    B, _, _, _ = build_re()
    M = commuting_union(F, B, name="fun*re")
    T = fun_T(M)
    Tinv = T.map(lambda x: antipode_apply(x, fhd, M))
    I = NCMat.identity(3, M)
    compare_matrices(rep, mat_mul(T, Tinv), I, "T*S(T)")
    compare_matrices(rep, mat_mul(Tinv, T), I, "S(T)*T")
    K_T = chain(T, re_K(M), Tinv)
    record_matrix(rep, re_residual(K_T, M), "RE for TKT^-1", two_leg=True)
    D2 = build_re_double()
    M2 = commuting_union(F, D2, name="fun*re2")
    T2 = fun_T(M2)
    T2inv = T2.map(lambda x: antipode_apply(x, fhd, M2))
    KT = chain(T2, re_K(M2), T2inv)
    KpT = chain(T2, re_K(M2, primed=True), T2inv)
    record_matrix(rep, complementary_residual(KT, KpT, M2), "complementary for TKT^-1, TK'T^-1",
                  two_leg=True)
