"""Lax operators from the 3-dimensional representation, RLL relations."""

from __future__ import annotations

from fractions import Fraction

from ..catalog import DEFAULT_TRUNC, UhwSeries, build_uhw, exp_coeffs
from ..coeffring import SeriesModel
from ..ncalg import NCElem, Presentation
from ..ncmatrix import NCMat, ScalarAlgebra, leg_embed, mat_mul
from ..report import Report
from ..tensorspace import TensorAlgebra, antipode_apply, coproduct_apply
from .common import compare_matrices, lift, r_matrix, r_plus, record_matrix, timed, truncate_elem

PI3 = {"Ap": (2, 3), "Am": (1, 2), "N": (2, 2), "E": (1, 3)}


def pi3(x: NCElem, P: Presentation) -> NCMat:
    """Image of ``x`` under the 3-dimensional representation (coefficient matrix)."""
    S = ScalarAlgebra(P.model)
    out = NCMat.zeros(3, 3, S)
    units = {}
    for g, (i, j) in PI3.items():
        m = NCMat.zeros(3, 3, S)
        m.entries[i - 1][j - 1] = S.one()
        units[g] = m
    for word, c in x.terms.items():
        m = NCMat.identity(3, S)
        for g in word:
            m = mat_mul(m, units[g])
            if m.is_zero():
                break
        if not m.is_zero():
            out = out + m.scale(S.scalar(c))
    return out


def exp_factor(P: Presentation, c, X: NCElem, Y: NCElem, leg: int) -> NCMat:
    """``exp(c X (x) Y)`` with the 3-dimensional representation on leg ``leg``.

    ``c`` must carry positive parameter degree, so the sum stops at the cap.
    """
    D = P.model.cap
    rep, other = (X, Y) if leg == 0 else (Y, X)
    base = pi3(P.normal_form(rep), P)
    S = base.algebra
    acc = NCMat.zeros(3, 3, P)
    mpow = NCMat.identity(3, S)
    opow = P.one()
    for k in range(D + 1):
        coef = P.model.coerce(c) ** k * exp_coeffs(k)
        if coef:
            for (i, j), m in mpow.nonzero_entries():
                acc.entries[i - 1][j - 1] = acc.entries[i - 1][j - 1] + P.normal_form(opow * (m * coef))
        mpow = mat_mul(mpow, base)
        opow = P.normal_form(opow * other)
        if mpow.is_zero():
            break
    return acc


class LaxData:
    """Lax matrices at cap ``D``: extracted from the ordered exponentials and
    the closed forms they should equal."""

    def __init__(self, D: int = DEFAULT_TRUNC):
        self.D = D
        self.P, self.hopf, self.named = build_uhw(D)
        P = self.P
        self.s = s = UhwSeries(P, D)
        h, w = P.h, P.w
        E, N, Ap, Am = P.gens("E", "N", "Ap", "Am")
        self.E, self.N, self.Ap, self.Am = E, N, Ap, Am
        # a_+ = (1 - exp(-w Ap))/w
        self.a_plus = P.normal_form(s.expm1_wAp(-1) * -1)
        self.ehAm = P.mul(s.exp_hE(1), Am)

    # -- closed forms ----------------------------------------------------------

    def closed(self) -> dict:
        P, s = self.P, self.s
        h, w = P.h, P.w
        N, Am = self.N, self.Am
        e = P.mul
        em2h_mw = e(s.exp_hE(-2), s.exp_wAp(-1))
        S_Lminus = NCMat([[1, e(s.expm1_wAp(1), 2 * h), -N * (2 * h)],
                          [0, s.exp_wAp(1), -N * w],
                          [0, 0, 1]], P)
        L_plus = NCMat([[1, 0, 0],
                        [0, em2h_mw, e(s.exp_hE(-1), s.exp_wAp(-1), Am) * (2 * h) + e(em2h_mw, N) * w],
                        [0, 0, 1]], P)
        S_Lplus = NCMat([[1, 0, 0],
                         [0, e(s.exp_hE(2), s.exp_wAp(1)), -e(s.exp_hE(1), Am) * (2 * h) - N * w],
                         [0, 0, 1]], P)
        L_minus = NCMat([[1, e(s.expm1_wAp(-1), 2 * h), e(s.exp_wAp(-1), N) * (2 * h)],
                         [0, s.exp_wAp(-1), e(s.exp_wAp(-1), N) * w],
                         [0, 0, 1]], P)
        return {"S(L-)": S_Lminus.map(P.normal_form), "L+": L_plus.map(P.normal_form),
                "S(L+)": S_Lplus.map(P.normal_form), "L-": L_minus.map(P.normal_form)}

    # -- extraction from the ordered exponentials ------------------------------------

    def _universal(self, leg: int) -> NCMat:
        P = self.P
        h, w = P.h, P.w
        E, N, Ap = self.E, self.N, self.Ap
        f = [exp_factor(P, -w, Ap, N, leg),
             exp_factor(P, -2 * h, E, N, leg),
             exp_factor(P, 2 * h, self.ehAm, self.a_plus, leg),
             exp_factor(P, w, N, Ap, leg)]
        return mat_mul(mat_mul(mat_mul(f[0], f[1]), f[2]), f[3])

    def _conjugate(self, leg: int) -> NCMat:
        P = self.P
        h, w = P.h, P.w
        E, N, Ap = self.E, self.N, self.Ap
        f = [exp_factor(P, -w, Ap, N, leg),
             exp_factor(P, -2 * h, self.a_plus, self.ehAm, leg),
             exp_factor(P, 2 * h, N, E, leg),
             exp_factor(P, w, N, Ap, leg)]
        return mat_mul(mat_mul(mat_mul(f[0], f[1]), f[2]), f[3])

    def extracted(self) -> dict:
        return {"S(L-)": self._universal(0), "L+": self._universal(1),
                "S(L+)": self._conjugate(0), "L-": self._conjugate(1)}

    def antipode(self, M: NCMat) -> NCMat:
        return M.map(lambda x: antipode_apply(x, self.hopf, self.P))


def check_lax(D: int = DEFAULT_TRUNC, corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("lax" + ("[control]" if corrupt else ""), params={"D": D}, control=corrupt)
    with timed(rep, timing):
        lx = LaxData(D)
        P = lx.P
        closed = lx.closed()
        if corrupt:
            # flip the sign of the w-term in L-(2,3)
            Lm = closed["L-"]
            Lm.entries[1][2] = P.normal_form(Lm.entries[1][2] - P.mul(lx.s.exp_wAp(-1), lx.N) * (2 * P.w))
        ext = lx.extracted()
        for key in ("S(L-)", "L+", "S(L+)", "L-"):
            compare_matrices(rep, ext[key], closed[key], f"extract {key}")
        I = NCMat.identity(3, P)
        for key, inv_key in (("L+", "S(L+)"), ("L-", "S(L-)")):
            L = closed[key]
            SL = lx.antipode(L)
            compare_matrices(rep, SL, closed[inv_key], f"antipode {key} vs closed form")
            compare_matrices(rep, mat_mul(SL, L), I, f"S({key})*{key}")
            compare_matrices(rep, mat_mul(L, SL), I, f"{key}*S({key})")
        T2 = TensorAlgebra(P)
        for key in ("L+", "L-"):
            L = closed[key]
            for i in range(3):
                for j in range(3):
                    lhs = coproduct_apply(L.entries[i][j], lx.hopf, T2)
                    rhs = T2.zero()
                    for k in range(3):
                        a, b = L.entries[i][k], L.entries[k][j]
                        if a and b:
                            rhs = rhs + T2.pure(a, b)
                    diff = lhs - rhs
                    if diff:
                        rep.add_residual(f"coproduct {key}[{i + 1},{j + 1}]", T2.format(diff))
            for i in range(3):
                for j in range(3):
                    eps = sum((c for word, c in L.entries[i][j].terms.items() if not word),
                              P.model.zero())
                    if eps != (1 if i == j else 0):
                        rep.add_residual(f"counit {key}[{i + 1},{j + 1}]", str(eps))
        # h -> 0
        P0 = P.specialize("h", 0, name=f"uhw|h=0[D={D}]")
        s0 = UhwSeries(P0, D)
        w = P0.w
        Lh0 = NCMat([[1, 0, 0],
                     [0, s0.exp_wAp(-1), P0.mul(s0.exp_wAp(-1), P0.gen("N")) * w],
                     [0, 0, 1]], P0)
        Lp0 = closed["L+"].map(lambda x: x.map_coefficients(lambda c: c.subst("h", 0)), P0)
        compare_matrices(rep, Lp0, Lh0, "L+ at h=0")
        Sm0 = closed["S(L-)"].map(lambda x: x.map_coefficients(lambda c: c.subst("h", 0)), P0)
        Lm0 = closed["L-"].map(lambda x: x.map_coefficients(lambda c: c.subst("h", 0)), P0)
        compare_matrices(rep, mat_mul(Sm0, Lh0), NCMat.identity(3, P0), "S(L-)*L+ at h=0")
        rep.note("at h=0, L- coincides with L+: "
                 + ("yes" if Lm0 == Lh0 else "no"))
    return rep


def _lax_products(lx: LaxData, pair: tuple) -> tuple:
    P = lx.P
    closed = lx.closed()
    L = {"+": closed["L+"], "-": closed["L-"]}
    L1 = leg_embed(L[pair[0]], "1", 2)
    L2 = leg_embed(L[pair[1]], "2", 2)
    return L1, L2


def rll_residual(lx: LaxData, pair: tuple, Rp: NCMat) -> tuple:
    P = lx.P
    L1, L2 = _lax_products(lx, pair)
    Rl = lift(Rp, P)
    left = mat_mul(Rl, mat_mul(L1, L2))
    right = mat_mul(mat_mul(L2, L1), Rl)
    return left - right, mat_mul(L1, L2)


PAIRS = (("+", "+"), ("-", "-"), ("+", "-"))


def check_rll(D: int = DEFAULT_TRUNC, corrupt: bool = False, timing: bool = True,
              low: int | None = 2) -> Report:
    rep = Report("rll" + ("[control]" if corrupt else ""), params={"D": D}, control=corrupt)
    with timed(rep, timing):
        lx = LaxData(D)
        # the control uses R itself in place of its flip
        Rp = r_matrix() if corrupt else r_plus(r_matrix())
        products = {}
        for pair in PAIRS:
            res, prod = rll_residual(lx, pair, Rp)
            record_matrix(rep, res, f"({pair[0]},{pair[1]})", two_leg=True)
            products[pair] = prod
        if low is not None and low < D and not corrupt:
            lo = LaxData(low)
            for pair in PAIRS:
                res, prod = rll_residual(lo, pair, Rp)
                record_matrix(rep, res, f"D={low} ({pair[0]},{pair[1]})", two_leg=True)
                trunc = products[pair].map(lambda x: truncate_elem(x, low), lo.P)
                compare_matrices(rep, trunc, prod, f"filtration D={D}->{low} ({pair[0]},{pair[1]})",
                                 two_leg=True)
            rep.params["D_low"] = low
    return rep
