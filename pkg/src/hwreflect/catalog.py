"""Presentations of the deformed oscillator algebra and its relatives.

Generator surface names::

    uhw        E < N < Ap < Am
    fun        a < b < c < cinv < d
    re         alpha < beta < gamma < gammainv < delta
    re2        the re block, then alphap < betap < gammap < gammapinv < deltap
    classical  e < n < ap < am

Series such as ``exp(w*Ap)`` are expanded in the truncated series model; a
term carrying parameter degree above the cap simply vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .coeffring import PolynomialModel, RationalModel, SeriesModel
from .ncalg import (
    GenSym,
    NCElem,
    Presentation,
    adjoin_inverse,
    eliminate_central,
)
from .tensorspace import BraidTable, HopfData, TensorAlgebra, TensorElem

DEFAULT_TRUNC = 4


class CatalogError(ValueError):
    pass


# -- univariate coefficient sequences ---------------------------------------

def exp_coeffs(k: int) -> Fraction:
    return Fraction(1, math.factorial(k))


def sinhc_coeffs(k: int) -> Fraction:
    """sinh(t)/t"""
    return Fraction(1, math.factorial(k + 1)) if k % 2 == 0 else Fraction(0)


def expm1c_coeffs(k: int) -> Fraction:
    """(exp(t) - 1)/t"""
    return Fraction(1, math.factorial(k + 1))


def log1pc_coeffs(k: int) -> Fraction:
    """-log(1 - t)/t"""
    return Fraction(1, k + 1)


@lru_cache(maxsize=None)
def _inverse_sinhc(n: int) -> tuple:
    s = [sinhc_coeffs(k) for k in range(n + 1)]
    inv = [Fraction(1)]
    for k in range(1, n + 1):
        inv.append(-sum(s[j] * inv[k - j] for j in range(1, k + 1)))
    return tuple(inv)


def xsinh_coeffs(k: int) -> Fraction:
    """t/sinh(t)"""
    return _inverse_sinhc(k)[k]


def fseries(coeffs, x: NCElem, D: int, P: Presentation | None = None) -> NCElem:
    """``sum_k coeffs(k) x^k`` for ``k <= D``.

    Every term of ``x`` must carry positive parameter degree, so higher
    powers are invisible at cap ``D``.  Products are reduced in ``P`` when
    given, otherwise taken in the free algebra.
    """
    out = NCElem.one() * coeffs(0)
    power = NCElem.one()
    for k in range(1, D + 1):
        power = power * x if P is None else P.normal_form(power * x)
        if not power:
            break
        c = coeffs(k)
        if c:
            out = out + power * c
    return out if P is None else P.normal_form(out)


# -- U_{h,w} -----------------------------------------------------------------

@dataclass
class UhwSeries:
    """Frequently used series elements of the deformed oscillator algebra."""

    P: Presentation
    D: int

    def gen(self, name):
        return self.P.gen(name)

    def exp_wAp(self, s: int = 1) -> NCElem:
        """exp(s*w*Ap)"""
        return fseries(exp_coeffs, self.gen("Ap") * (self.P.w * s), self.D, self.P)

    def expm1_wAp(self, s: int = 1) -> NCElem:
        """(exp(s*w*Ap) - 1)/w"""
        x = self.gen("Ap") * (self.P.w * s)
        return self.P.normal_form(self.gen("Ap") * fseries(expm1c_coeffs, x, self.D) * s)

    def exp_hE(self, s: int = 1) -> NCElem:
        """exp(s*h*E)"""
        return fseries(exp_coeffs, self.gen("E") * (self.P.h * s), self.D, self.P)

    def sinh_hE_h(self) -> NCElem:
        """sinh(h*E)/h"""
        x = self.gen("E") * self.P.h
        return self.P.normal_form(self.gen("E") * fseries(sinhc_coeffs, x, self.D))

    def sinh_hE(self) -> NCElem:
        return self.P.normal_form(self.sinh_hE_h() * self.P.h)

    def hE_over_sinh(self) -> NCElem:
        """h*E/sinh(h*E)"""
        return fseries(xsinh_coeffs, self.gen("E") * self.P.h, self.D, self.P)


def _uhw_rules(D: int):
    M = SeriesModel(D)
    h, w = M.h(), M.w()
    E, N, Ap, Am = (NCElem.gen(g) for g in ("E", "N", "Ap", "Am"))
    exp_wAp = fseries(exp_coeffs, Ap * w, D)
    expm1_wAp = Ap * fseries(expm1c_coeffs, Ap * w, D)
    sinh_h = E * fseries(sinhc_coeffs, E * h, D)
    rules = {
        ("N", "E"): E * N,
        ("Ap", "E"): E * Ap,
        ("Am", "E"): E * Am,
        ("Ap", "N"): N * Ap - expm1_wAp,
        ("Am", "N"): N * Am + Am,
        ("Am", "Ap"): Ap * Am + sinh_h * exp_wAp,
    }
    return M, rules


def uhw_presentation(D: int = DEFAULT_TRUNC) -> Presentation:
    if D < 0:
        raise CatalogError("truncation order must be nonnegative")
    M, rules = _uhw_rules(D)
    gens = [GenSym("E", central=True), GenSym("N"), GenSym("Ap"), GenSym("Am")]
    return Presentation(gens, rules, M, name=f"uhw[D={D}]")


def build_uhw(D: int = DEFAULT_TRUNC):
    """Return ``(P, hopf, named)`` for the deformed oscillator algebra at cap ``D``."""
    P = uhw_presentation(D)
    s = UhwSeries(P, D)
    h, w = P.h, P.w
    E, N, Ap, Am = P.gens("E", "N", "Ap", "Am")
    one = P.one()
    T2 = TensorAlgebra(P)

    def pure(x, y):
        return T2.pure(x, y)

    sinh_h = s.sinh_hE_h()
    coproduct = {
        "Ap": pure(Ap, one) + pure(one, Ap),
        "Am": (pure(Am, P.mul(s.exp_hE(1), s.exp_wAp(1)))
               + pure(s.exp_hE(-1), Am)
               + pure(P.mul(s.exp_hE(-1), N), P.mul(sinh_h, s.exp_wAp(1))) * w),
        "N": pure(N, s.exp_wAp(1)) + pure(one, N),
        "E": pure(E, one) + pure(one, E),
    }
    counit = {g: 0 for g in P.names}
    antipode = {
        "Ap": -Ap,
        "Am": P.normal_form(-Am * s.exp_wAp(-1) + sinh_h * N * s.exp_wAp(-1) * w),
        "N": P.normal_form(-N * s.exp_wAp(-1)),
        "E": -E,
    }
    half = Fraction(1, 2)
    em = s.expm1_wAp(-1) * half
    casimir = P.normal_form(sinh_h * N + em * Am + Am * em)
    named = {"C": casimir, "E": E}
    return P, HopfData(coproduct, counit, antipode), named


def classical_presentation() -> Presentation:
    e, n, ap, am = (NCElem.gen(g) for g in ("e", "n", "ap", "am"))
    rules = {
        ("n", "e"): e * n,
        ("ap", "e"): e * ap,
        ("am", "e"): e * am,
        ("ap", "n"): n * ap - ap,
        ("am", "n"): n * am + am,
        ("am", "ap"): ap * am + e,
    }
    gens = [GenSym("e", central=True), GenSym("n"), GenSym("ap"), GenSym("am")]
    return Presentation(gens, rules, PolynomialModel(), name="classical")


build_classical = classical_presentation


def classical_images(P: Presentation, D: int) -> dict:
    """Images of the undeformed oscillator generators inside the deformed algebra."""
    s = UhwSeries(P, D)
    return {
        "ap": s.expm1_wAp(-1) * -1,
        "am": P.mul(s.hE_over_sinh(), P.gen("Am")),
        "n": P.gen("N"),
        "e": P.gen("E"),
    }


# -- function algebra -----------------------------------------------------------

def fun_presentation(model=None) -> Presentation:
    M = model or PolynomialModel()
    h, w = M.h(), M.w()
    a, b, c, d = (NCElem.gen(g) for g in "abcd")
    rules = {
        ("b", "a"): a * b - a * (2 * h) - a * a * w,
        ("c", "a"): a * c,
        ("d", "a"): a * d - a * c * w,
        ("c", "b"): b * c + a * c * w,
        ("d", "b"): b * d,
        ("d", "c"): c * d - c * c * w + c * w,
    }
    return Presentation(list("abcd"), rules, M, name="fun")


def build_fun(model=None):
    """Return ``(P, hopf)`` for the function algebra with ``c`` inverted."""
    P = adjoin_inverse(fun_presentation(model), "c")
    a, b, c, ci, d = P.gens("a", "b", "c", "cinv", "d")
    one = P.one()
    T2 = TensorAlgebra(P)
    coproduct = {
        "a": T2.pure(a, c) + T2.pure(one, a),
        "b": T2.pure(b, one) + T2.pure(one, b) + T2.pure(a, d),
        "c": T2.pure(c, c),
        "cinv": T2.pure(ci, ci),
        "d": T2.pure(d, one) + T2.pure(c, d),
    }
    counit = {"a": 0, "b": 0, "c": 1, "cinv": 1, "d": 0}
    antipode = {
        "a": P.normal_form(-ci * a),
        "b": P.normal_form(-b + ci * a * d),
        "c": ci,
        "cinv": c,
        "d": P.normal_form(-ci * d),
    }
    return P, HopfData(coproduct, counit, antipode)


def fun_T(P: Presentation):
    from .ncmatrix import NCMat

    a, b, c, d = P.gens("a", "b", "c", "d")
    return NCMat([[1, a, b], [0, c, d], [0, 0, 1]], P)


# -- reflection equation algebra ---------------------------------------------------

RE_GENS = ("alpha", "beta", "gamma", "delta")


def _re_rules(h, w, names=RE_GENS):
    al, be, ga, de = (NCElem.gen(g) for g in names)
    A, B, G, Dl = names
    return {
        (B, A): al * be - al * ga * (2 * h) + al * al * w,
        (Dl, A): al * de - ga * ga * (2 * h) + ga * (2 * h) + al * ga * w - al * w,
        (Dl, B): be * de - ga * de * (2 * h) + al * de * w,
        (G, A): al * ga,
        (G, B): be * ga,
        (Dl, G): ga * de,
    }


def re_base(model=None) -> Presentation:
    """The reflection equation algebra without ``gammainv``."""
    M = model or PolynomialModel()
    gens = [GenSym("alpha"), GenSym("beta"), GenSym("gamma", central=True), GenSym("delta")]
    return Presentation(gens, _re_rules(M.h(), M.w()), M, name="re")


def re_psi_table(P: Presentation) -> dict:
    """Braiding of generator pairs; ``(x, y) -> psi(x (x) y)``."""
    h, w = P.model.h(), P.model.w()
    al, be, ga, de = P.gens(*RE_GENS)
    g1 = ga - 1

    def t(x, y):
        return TensorElem.pure(x, y)

    return {
        ("alpha", "alpha"): t(al, al),
        ("alpha", "beta"): t(be, al) - t(al, al) * w,
        ("alpha", "gamma"): t(ga, al),
        ("alpha", "delta"): t(de, al) - t(g1, al) * w,
        ("beta", "alpha"): t(al, be) - t(g1, al) * (2 * h) + t(al, al) * w,
        ("beta", "beta"): t(be, be) - t(de, al) * (2 * h) + t(g1, al) * (2 * h * w),
        ("beta", "gamma"): t(ga, be),
        ("beta", "delta"): t(de, be) - t(de, al) * w + t(g1, al) * (w * w),
        ("gamma", "alpha"): t(al, ga),
        ("gamma", "beta"): t(be, ga),
        ("gamma", "gamma"): t(ga, ga),
        ("gamma", "delta"): t(de, ga),
        ("delta", "alpha"): t(al, de) - t(g1, g1) * (2 * h) + t(al, g1) * w,
        ("delta", "beta"): t(be, de) - t(de, g1) * (2 * h) + t(al, de) * w,
        ("delta", "gamma"): t(ga, de),
        ("delta", "delta"): t(de, de) - t(de, g1) * w + t(g1, de) * w,
    }


def re_K(P: Presentation, primed: bool = False):
    from .ncmatrix import NCMat

    sfx = "p" if primed else ""
    al, be, ga, de = P.gens(*(g + sfx for g in RE_GENS))
    return NCMat([[1, al, be], [0, ga, de], [0, 0, 1]], P)


def re_K_inverse_printed(P: Presentation):
    """The closed-form inverse of the reflection matrix."""
    from .ncmatrix import NCMat

    al, be, ga, gi, de = P.gens("alpha", "beta", "gamma", "gammainv", "delta")
    return NCMat([[1, -gi * al, -be + gi * al * de],
                  [0, gi, -gi * de],
                  [0, 0, 1]], P).map(P.normal_form)


def build_re(model=None):
    """Return ``(P, hopf, braid, named)`` for the reflection equation algebra."""
    P = adjoin_inverse(re_base(model), "gamma")
    al, be, ga, gi, de = P.gens("alpha", "beta", "gamma", "gammainv", "delta")
    one = P.one()
    bt = BraidTable(P, re_psi_table(P))
    T2 = TensorAlgebra(P)
    coproduct = {
        "alpha": T2.pure(al, ga) + T2.pure(one, al),
        "beta": T2.pure(be, one) + T2.pure(one, be) + T2.pure(al, de),
        "gamma": T2.pure(ga, ga),
        "gammainv": T2.pure(gi, gi),
        "delta": T2.pure(de, one) + T2.pure(ga, de),
    }
    counit = {"alpha": 0, "beta": 0, "gamma": 1, "gammainv": 1, "delta": 0}
    antipode = {
        "alpha": P.normal_form(-gi * al),
        "beta": P.normal_form(-be + gi * al * de),
        "gamma": gi,
        "gammainv": ga,
        "delta": P.normal_form(-gi * de),
    }
    named = {
        "C1": ga,
        "C2": P.normal_form(al * de - be * ga + be),
    }
    return P, HopfData(coproduct, counit, antipode), bt, named


PRIMED = tuple(g + "p" for g in RE_GENS)


def _cross_rules(h, w):
    """Exchange rules with the primed letter on the left."""
    al, be, ga, de = (NCElem.gen(g) for g in RE_GENS)
    alp, bep, gap, dep = (NCElem.gen(g) for g in PRIMED)
    g1, gp1 = ga - 1, gap - 1
    return {
        ("alphap", "alpha"): al * alp,
        ("alphap", "beta"): be * alp - al * alp * w,
        ("alphap", "gamma"): ga * alp,
        ("alphap", "delta"): de * alp - g1 * alp * w,
        ("betap", "alpha"): al * bep - g1 * alp * (2 * h) + al * alp * w,
        ("betap", "beta"): be * bep - de * alp * (2 * h) + g1 * alp * (2 * h * w),
        ("betap", "gamma"): ga * bep,
        ("betap", "delta"): de * bep - de * alp * w + g1 * alp * (w * w),
        ("gammap", "alpha"): al * gap,
        ("gammap", "beta"): be * gap,
        ("gammap", "gamma"): ga * gap,
        ("gammap", "delta"): de * gap,
        ("deltap", "alpha"): al * dep - g1 * gp1 * (2 * h) + al * gp1 * w,
        ("deltap", "beta"): be * dep - de * gp1 * (2 * h) + al * dep * w,
        ("deltap", "gamma"): ga * dep,
        ("deltap", "delta"): de * dep - de * gp1 * w + g1 * dep * w,
    }


def re_double_base(model=None, cross_updates=None) -> Presentation:
    M = model or PolynomialModel()
    h, w = M.h(), M.w()
    gens = ([GenSym("alpha"), GenSym("beta"), GenSym("gamma", central=True), GenSym("delta")]
            + [GenSym("alphap"), GenSym("betap"), GenSym("gammap", central=True),
               GenSym("deltap")])
    rules = dict(_re_rules(h, w))
    rules.update(_re_rules(h, w, PRIMED))
    rules.update(_cross_rules(h, w))
    rules.update(cross_updates or {})
    return Presentation(gens, rules, M, name="re2")


def build_re_double(model=None, cross_updates=None) -> Presentation:
    P = re_double_base(model, cross_updates)
    P = adjoin_inverse(P, "gamma")
    return adjoin_inverse(P, "gammap")


# -- limits --------------------------------------------------------------------

def build_re_w0():
    """``w = 0`` with ``gamma`` inverted and rational coefficients."""
    P = re_base(RationalModel()).specialize("w", 0, name="re|w=0")
    P = adjoin_inverse(P, "gamma")
    al, be, ga, gi, de = P.gens("alpha", "beta", "gamma", "gammainv", "delta")
    h = P.h
    xi = P.normal_form(ga * (1 - ga) * (2 * h))
    named = {
        "J": P.normal_form(be * gi * (1 / (2 * h))),
        "P+": de,
        "P-": al,
        "xi": xi,
        "C2": P.normal_form(al * de - be * ga + be),
    }
    return P, named


def re_h0_base() -> Presentation:
    return re_base(RationalModel()).specialize("h", 0, name="re|h=0")


def build_re_h0():
    """``h = 0`` with ``alpha`` inverted; ``gamma`` stays a central letter."""
    P = adjoin_inverse(re_h0_base(), "alpha")
    al, ai, be, ga, de = P.gens("alpha", "alphainv", "beta", "gamma", "delta")
    named = {
        "X": al,
        "Y": P.normal_form(ai * be),
        "Z": de,
        "C2": P.normal_form(al * de - be * ga + be),
    }
    return P, named


def build_re_h0_unit():
    """``h = 0`` and ``gamma = 1``."""
    P = eliminate_central(re_h0_base(), "gamma", 1, name="re|h=0,gamma=1")
    P = adjoin_inverse(P, "alpha")
    al, ai, be, de = P.gens("alpha", "alphainv", "beta", "delta")
    w = P.w
    Y = P.normal_form(ai * be)
    named = {
        "X": al, "Y": Y, "Z": de,
        "Jhat": P.normal_form(Y * (1 / w)),
        "Phat+": al,
        "Phat-": de,
        "C2": P.normal_form(al * de),  # alpha delta - beta gamma + beta at gamma = 1
    }
    return P, named


def build_re_h0_shifted():
    """``h = 0`` with ``gamma = 1 + u`` and both ``u`` and ``alpha`` inverted."""
    u = NCElem.gen("u")
    P = eliminate_central(re_h0_base(), "gamma", u + 1, new_gens=("u",),
                          name="re|h=0,gamma=1+u")
    P = adjoin_inverse(P, "u")
    P = adjoin_inverse(P, "alpha")
    al, ai, be, de, u, ui = P.gens("alpha", "alphainv", "beta", "delta", "u", "uinv")
    w = P.w
    X, Z = al, de
    Y = P.normal_form(ai * be)
    ga = u + 1
    named = {
        "X": X, "Y": Y, "Z": Z, "u": u, "uinv": ui,
        "J2": P.normal_form((Y + Z * ui) * (1 / (2 * w))),
        "P2+": P.normal_form(X * ui * (1 / (w * w))),
        "P2-": P.normal_form((Y - Z * ui) * (1 / w)),
        "C2": P.normal_form(al * de - be * ga + be),
    }
    return P, named


# -- bundles for the command line ---------------------------------------------------

@dataclass
class AlgebraBundle:
    key: str
    P: Presentation
    hopf: HopfData | None = None
    braid: BraidTable | None = None
    named: dict = field(default_factory=dict)


ALGEBRA_IDS = ("uhw", "fun", "re", "re2", "classical")


def get_algebra(key: str, D: int = DEFAULT_TRUNC, max_steps: int | None = None) -> AlgebraBundle:
    if key == "uhw":
        P, hd, named = build_uhw(D)
        b = AlgebraBundle(key, P, hd, None, named)
    elif key == "fun":
        P, hd = build_fun()
        b = AlgebraBundle(key, P, hd)
    elif key == "re":
        P, hd, bt, named = build_re()
        b = AlgebraBundle(key, P, hd, bt, named)
    elif key == "re2":
        b = AlgebraBundle(key, build_re_double())
    elif key == "classical":
        b = AlgebraBundle(key, classical_presentation())
    else:
        raise CatalogError(f"unknown algebra {key!r}; choose from {', '.join(ALGEBRA_IDS)}")
    if max_steps is not None:
        b.P.max_steps = max_steps
    return b


# -- Fock space oracle --------------------------------------------------------------

class FockError(ValueError):
    pass


def _frac_matrix(n: int) -> np.ndarray:
    return np.array([[Fraction(0)] * n for _ in range(n)], dtype=object)


class FockOp:
    """Exact rational matrix plus the number of lowering steps it contains.

    Row ``m`` of a product agrees with the infinite oscillator whenever
    ``m + depth <= F - 1``.
    """

    __slots__ = ("mat", "depth")

    def __init__(self, mat: np.ndarray, depth: int = 0):
        self.mat = mat
        self.depth = depth

    def __add__(self, other):
        if isinstance(other, FockOp):
            return FockOp(self.mat + other.mat, max(self.depth, other.depth))
        n = self.mat.shape[0]
        return FockOp(self.mat + np.identity(n, dtype=object) * Fraction(other), self.depth)

    __radd__ = __add__

    def __neg__(self):
        return FockOp(-self.mat, self.depth)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FockOp):
            return FockOp(self.mat.dot(other.mat), self.depth + other.depth)
        return FockOp(self.mat * Fraction(other), self.depth)

    def __rmul__(self, other):
        return FockOp(self.mat * Fraction(other), self.depth)

    def __pow__(self, k: int):
        out = FockOp(np.identity(self.mat.shape[0], dtype=object) * Fraction(1))
        for _ in range(k):
            out = out * self
        return out

    def retained_rows(self) -> int:
        return max(self.mat.shape[0] - self.depth, 0)

    def residual_levels(self) -> list:
        """Levels ``m`` (within the retained block) where the row is nonzero."""
        out = []
        for m in range(self.retained_rows()):
            if any(x != 0 for x in self.mat[m]):
                out.append(m)
        return out


def comm(x: FockOp, y: FockOp) -> FockOp:
    return x * y - y * x


class FockEnv:
    """Truncated Fock space for the undeformed oscillator and the deformed images.

    The central letter becomes the scalar ``e_val``.  Functions of ``h*E``
    are built from ``q``, the Taylor polynomial of ``exp(h*e_val)`` of degree
    ``order``; identities then hold exactly because they only use
    ``exp(hE) exp(-hE) = 1`` and ``sinh = (exp - exp^-1)/2``.
    """

    def __init__(self, Fdim: int, h, w, e_val, order: int = 8):
        if Fdim < 2:
            raise FockError("Fock dimension must be at least 2")
        self.F = Fdim
        self.h = Fraction(h)
        self.w = Fraction(w)
        self.e = Fraction(e_val)
        self.order = order
        n = Fdim
        ap = _frac_matrix(n)
        am = _frac_matrix(n)
        num = _frac_matrix(n)
        for k in range(n - 1):
            ap[k + 1, k] = Fraction(1)
            am[k, k + 1] = self.e * (k + 1)
        for k in range(n):
            num[k, k] = Fraction(k)
        self.one = FockOp(np.identity(n, dtype=object) * Fraction(1))
        self.ap = FockOp(ap)
        self.am = FockOp(am, 1)
        self.n = FockOp(num)
        self.E = self.one * self.e
        if self.h == 0:
            self.q = Fraction(1)
            self.sigma = self.e
        else:
            x = self.h * self.e
            self.q = sum((x ** k * exp_coeffs(k) for k in range(order + 1)), Fraction(0))
            self.sigma = (self.q - 1 / self.q) / (2 * self.h)
        ratio = Fraction(1) if self.e == 0 else self.sigma / self.e
        self.Ap = self.nil_series(self.ap, lambda k: self.w ** (k - 1) * log1pc_coeffs(k - 1)
                                  if k >= 1 else 0)
        self.Am = self.am * ratio
        self.N = self.n

    def nil_series(self, X: FockOp, coeff) -> FockOp:
        """``sum_k coeff(k) X^k`` for a raising (nilpotent) ``X``."""
        out = self.one * 0
        power = self.one
        for k in range(self.F):
            c = coeff(k)
            if c:
                out = out + power * c
            power = power * X
        return out

    def exp_wAp(self, s: int = 1) -> FockOp:
        w = self.w * s
        return self.nil_series(self.Ap, lambda k: w ** k * exp_coeffs(k))

    def expm1_wAp(self, s: int = 1) -> FockOp:
        """(exp(s*w*Ap) - 1)/w"""
        w = self.w * s
        return self.nil_series(self.Ap, lambda k: s * w ** (k - 1) * exp_coeffs(k) if k else 0)

    def exp_hE(self, k: int = 1) -> Fraction:
        return self.q ** k

    def sinh_hE(self) -> Fraction:
        return (self.q - 1 / self.q) / 2

    def casimir(self) -> FockOp:
        em = self.expm1_wAp(-1) * Fraction(1, 2)
        return self.N * self.sigma + em * self.Am + self.Am * em

    def images(self) -> dict:
        return {"E": self.E, "N": self.N, "Ap": self.Ap, "Am": self.Am}

    def evaluate(self, x: NCElem) -> FockOp:
        """Evaluate an element of the deformed algebra with polynomial coefficients."""
        imgs = self.images()
        out = self.one * 0
        for word, c in x.terms.items():
            if hasattr(c, "evaluate"):
                c = c.evaluate(self.h, self.w)
            elif hasattr(c, "terms"):
                c = sum((Fraction(v) * self.h ** i * self.w ** j
                         for (i, j), v in c.terms.items()), Fraction(0))
            term = self.one
            for g in word:
                if g not in imgs:
                    raise FockError(f"no Fock image for {g!r}")
                term = term * imgs[g]
            out = out + term * c
        return out


def fock_oracle(Fdim: int, h, w, e_val, order: int = 8) -> FockEnv:
    return FockEnv(Fdim, h, w, e_val, order)
