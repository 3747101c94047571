"""Reflection equation: abstract algebra, the represented K and its coproducts."""

from __future__ import annotations

from ..catalog import DEFAULT_TRUNC, UhwSeries, build_re, re_K, re_K_inverse_printed
from ..ncalg import NCElem
from ..ncmatrix import NCMat, chain, leg_embed, mat_mul
from ..report import Report
from ..tensorspace import TensorAlgebra, coproduct_apply, split_leg
from .common import (
    compare_matrices,
    expect_equal,
    expect_zero,
    lift,
    r_matrix,
    r_plus,
    record_matrix,
    timed,
)
from .lax import LaxData


def re_residual(K: NCMat, algebra, R=None) -> NCMat:
    """``R K1 R+ K2 - K2 R K1 R+`` over ``algebra``."""
    R = R if R is not None else r_matrix()
    Rl, Rp = lift(R, algebra), lift(r_plus(R), algebra)
    K1, K2 = leg_embed(K, "1", 2), leg_embed(K, "2", 2)
    return chain(Rl, K1, Rp, K2) - chain(K2, Rl, K1, Rp)


def re_relation_residuals(P, al, be, ga, de) -> dict:
    """The exchange relations of the reflection algebra evaluated on images."""
    h, w = P.h, P.w
    t = ga * (2 * h) - al * w
    return {
        "[alpha,beta]": P.commutator(al, be) - P.normal_form(al * t),
        "[alpha,delta]": P.commutator(al, de) - P.normal_form(t * (ga - 1)),
        "[beta,delta]": P.commutator(be, de) - P.normal_form(t * de),
        "[gamma,alpha]": P.commutator(ga, al),
        "[gamma,beta]": P.commutator(ga, be),
        "[gamma,delta]": P.commutator(ga, de),
    }


def check_re_abstract(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("re-abstract" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        P, _, _, named = build_re()
        if corrupt:
            P = P.with_rules({}, remove=[("delta", "beta")], name="re[no beta/delta rule]")
        K = re_K(P)
        record_matrix(rep, re_residual(K, P), "RK1R+K2-K2RK1R+", two_leg=True)
        for m in ("C1", "C2"):
            for g in P.names:
                expect_zero(rep, P, P.commutator(named[m], P.gen(g)), f"[{m},{g}]")
        Kinv = re_K_inverse_printed(P)
        I = NCMat.identity(3, P)
        compare_matrices(rep, mat_mul(K, Kinv), I, "K*Kinv")
        compare_matrices(rep, mat_mul(Kinv, K), I, "Kinv*K")
    return rep


class RepresentedK:
    """``K = S(L-) L+`` inside the deformed oscillator algebra."""

    def __init__(self, D: int = DEFAULT_TRUNC):
        self.lax = lx = LaxData(D)
        self.P = P = lx.P
        self.D = D
        closed = lx.closed()
        self.S_Lminus = closed["S(L-)"]
        self.L_plus = closed["L+"]
        self.K = mat_mul(self.S_Lminus, self.L_plus)

    def closed_form(self) -> NCMat:
        P, s = self.P, self.lax.s
        h, w = P.h, P.w
        N, Am = self.lax.N, self.lax.Am
        m = P.mul
        one_minus = P.normal_form(s.expm1_wAp(-1) * -w)     # 1 - exp(-w Ap)
        a_plus = P.normal_form(s.expm1_wAp(-1) * -1)        # (1 - exp(-w Ap))/w
        k12 = m(s.exp_hE(-2), a_plus) * (2 * h)
        k13 = (m(s.exp_hE(-1), a_plus, Am) * (4 * h * h)
               + m(s.exp_hE(-2), one_minus, N) * (2 * h) - N * (2 * h))
        k22 = s.exp_hE(-2)
        k23 = m(s.exp_hE(-1), Am) * (2 * h) - m(s.exp_hE(-1), s.sinh_hE(), N) * (2 * w)
        return NCMat([[1, k12, k13], [0, k22, k23], [0, 0, 1]], P).map(P.normal_form)


def check_re_represented(D: int = DEFAULT_TRUNC, corrupt: bool = False,
                         timing: bool = True) -> Report:
    rep = Report("re-represented" + ("[control]" if corrupt else ""), params={"D": D},
                 control=corrupt)
    with timed(rep, timing):
        rk = RepresentedK(D)
        P, s = rk.P, rk.lax.s
        K = mat_mul(rk.L_plus, rk.S_Lminus) if corrupt else rk.K
        compare_matrices(rep, K, rk.closed_form(), "K vs closed form")
        al, be, ga, de = K.entries[0][1], K.entries[0][2], K.entries[1][1], K.entries[1][2]
        for name, r in re_relation_residuals(P, al, be, ga, de).items():
            expect_zero(rep, P, r, f"relation {name}")
        record_matrix(rep, re_residual(K, P), "RK1R+K2-K2RK1R+", two_leg=True)
        h = P.h
        expect_equal(rep, P, ga, s.exp_hE(-2), "C1 image")
        C2 = P.normal_form(al * de - be * ga + be)
        C = rk.lax.named["C"]
        target = P.normal_form(s.exp_hE(-1) * (s.sinh_hE() + C * (2 * h)) * (-2 * h))
        expect_equal(rep, P, C2, target, "C2 image")
        K0 = K.map(lambda x: x.map_coefficients(lambda c: c.subst("h", 0)))
        compare_matrices(rep, K0, NCMat.identity(3, P), "K at h=0")
    return rep


def _factorized(T: TensorAlgebra, mats: list) -> NCMat:
    """Entrywise product of matrices whose entries sit on different legs."""
    out = mats[0]
    for m in mats[1:]:
        out = mat_mul(out, m)
    return out


def _embed_matrix(M: NCMat, T: TensorAlgebra, leg: int) -> NCMat:
    return M.map(lambda x: T.embed(x, leg), T)


def check_coproduct_hierarchy(depth: int = 1, D: int = DEFAULT_TRUNC, corrupt: bool = False,
                              timing: bool = True) -> Report:
    rep = Report(f"hierarchy[depth={depth}]" + ("[control]" if corrupt else ""),
                 params={"D": D, "depth": depth}, control=corrupt)
    with timed(rep, timing):
        rk = RepresentedK(D)
        P, hd = rk.P, rk.lax.hopf
        T2 = TensorAlgebra(P)
        SLm, Lp = rk.S_Lminus, rk.L_plus
        if corrupt:
            SLm, Lp = Lp, SLm
        dK = rk.K.map(lambda x: coproduct_apply(x, hd, T2), T2)
        fact2 = _factorized(T2, [_embed_matrix(SLm, T2, 1), _embed_matrix(rk.K, T2, 0),
                                 _embed_matrix(Lp, T2, 1)])
        compare_matrices(rep, dK, fact2, "Delta(K) factorization")
        if depth == 1:
            record_matrix(rep, re_residual(dK, T2), "RE for Delta(K)", two_leg=True)
        else:
            T3 = TensorAlgebra(P, rank=3)

            def delta_word(w):
                return coproduct_apply(NCElem({w: 1}), hd, T2)

            ddK = dK.map(lambda t: T3.normalize(split_leg(t, 0, delta_word)), T3)
            fact3 = _factorized(T3, [_embed_matrix(SLm, T3, 2), _embed_matrix(SLm, T3, 1),
                                     _embed_matrix(rk.K, T3, 0), _embed_matrix(Lp, T3, 1),
                                     _embed_matrix(Lp, T3, 2)])
            compare_matrices(rep, ddK, fact3, "(Delta x id)Delta(K) factorization")
            record_matrix(rep, re_residual(ddK, T3), "RE for (Delta x id)Delta(K)", two_leg=True)
    return rep
