"""Hopf axioms on generators and relations, plain and braided."""

from __future__ import annotations

from ..catalog import DEFAULT_TRUNC, build_fun, build_re, build_uhw, fun_T, re_K
from ..ncalg import NCElem, Presentation
from ..ncmatrix import NCMat, mat_mul
from ..report import Report
from ..tensorspace import (
    BRAIDED,
    PLAIN,
    HopfData,
    TensorAlgebra,
    TensorElem,
    antipode_apply,
    braided_antipode,
    coproduct_apply,
    counit_apply,
    split_leg,
)
from .common import compare_matrices, timed


def _word(w) -> NCElem:
    return NCElem({tuple(w): 1})


def relations(P: Presentation):
    """Yield ``(label, lhs_word, rhs)`` for every rule that is not a cancellation."""
    for (x, y), rhs in sorted(P.rules.items(), key=lambda kv: (P.order[kv[0][0]], P.order[kv[0][1]])):
        sx, sy = P.gensym(x), P.gensym(y)
        if sx.inverse_of == y or sy.inverse_of == x:
            continue
        yield f"{x}*{y}", _word((x, y)), NCElem(dict(rhs))


def _coassoc(rep: Report, P: Presentation, hd: HopfData, T2: TensorAlgebra, gens):
    T3 = TensorAlgebra(P, rank=3)

    def delta_word(w):
        return coproduct_apply(_word(w), hd, T2)

    for g in gens:
        d = hd.coproduct[g]
        left = T3.normalize(split_leg(d, 0, delta_word))
        right = T3.normalize(split_leg(d, 1, delta_word))
        diff = left - right
        if diff:
            rep.add_residual(f"coassociativity {g}", T3.format(diff))


def _counit_axioms(rep: Report, P: Presentation, hd: HopfData, gens):
    for g in gens:
        left, right = P.zero(), P.zero()
        for (u, v), c in hd.coproduct[g].terms.items():
            left = left + _word(v) * (c * counit_apply(_word(u), hd, P))
            right = right + _word(u) * (c * counit_apply(_word(v), hd, P))
        for side, x in (("(eps x id)", left), ("(id x eps)", right)):
            diff = P.normal_form(x - P.gen(g))
            if diff:
                rep.add_residual(f"counit {side} {g}", P.format(diff))


def _antipode_axioms(rep: Report, P: Presentation, hd: HopfData, gens):
    def S(w):
        return antipode_apply(_word(w), hd, P)

    for g in gens:
        eps = P.scalar(counit_apply(P.gen(g), hd, P))
        left, right = P.zero(), P.zero()
        for (u, v), c in hd.coproduct[g].terms.items():
            left = left + P.normal_form(S(u) * _word(v)) * c
            right = right + P.normal_form(_word(u) * S(v)) * c
        for side, x in (("m(S x id)", left), ("m(id x S)", right)):
            diff = P.normal_form(x - eps)
            if diff:
                rep.add_residual(f"antipode {side} {g}", P.format(diff))


def _relations_preserved(rep: Report, P: Presentation, hd: HopfData, T2: TensorAlgebra,
                         braid=None):
    for label, lhs, rhs in relations(P):
        d = coproduct_apply(lhs, hd, T2) - coproduct_apply(rhs, hd, T2)
        if d:
            rep.add_residual(f"coproduct relation {label}", T2.format(d))
        e = counit_apply(lhs, hd, P) - counit_apply(rhs, hd, P)
        if e:
            rep.add_residual(f"counit relation {label}", str(e))
        if braid is None:
            s = antipode_apply(lhs, hd, P) - antipode_apply(rhs, hd, P)
        else:
            s = braided_antipode(lhs, hd, braid) - braided_antipode(rhs, hd, braid)
        s = P.normal_form(s)
        if s:
            rep.add_residual(f"antipode relation {label}", P.format(s))


def _matrix_form(rep: Report, P: Presentation, hd: HopfData, T2: TensorAlgebra, M: NCMat,
                 label: str, braid=None):
    """``Delta(M) = M (.x) M``, ``eps(M) = 1`` and ``S(M) M = M S(M) = 1`` entrywise."""
    for i in range(3):
        for j in range(3):
            lhs = coproduct_apply(M.entries[i][j], hd, T2)
            rhs = T2.zero()
            for k in range(3):
                a, b = M.entries[i][k], M.entries[k][j]
                if a and b:
                    rhs = rhs + T2.pure(a, b)
            if lhs != rhs:
                rep.add_residual(f"coproduct {label}[{i + 1},{j + 1}]", T2.format(lhs - rhs))
            eps = counit_apply(M.entries[i][j], hd, P)
            if eps != (1 if i == j else 0):
                rep.add_residual(f"counit {label}[{i + 1},{j + 1}]", str(eps))
    if braid is None:
        SM = M.map(lambda x: antipode_apply(x, hd, P))
    else:
        SM = M.map(lambda x: braided_antipode(x, hd, braid))
    I = NCMat.identity(3, P)
    compare_matrices(rep, mat_mul(SM, M), I, f"S({label})*{label}")
    compare_matrices(rep, mat_mul(M, SM), I, f"{label}*S({label})")


def _corrupt_uhw(P, hd: HopfData) -> HopfData:
    T2 = TensorAlgebra(P)
    cop = dict(hd.coproduct)
    N = P.gen("N")
    cop["N"] = T2.pure(N, P.one()) + T2.pure(P.one(), N)
    return HopfData(cop, dict(hd.counit), dict(hd.antipode))


def check_hopf(algebra: str = "uhw", D: int = DEFAULT_TRUNC, corrupt: bool = False,
               timing: bool = True) -> Report:
    rep = Report(f"hopf[{algebra}]" + ("[control]" if corrupt else ""), control=corrupt,
                 params={"algebra": algebra})
    with timed(rep, timing):
        if algebra == "uhw":
            rep.params["D"] = D
            P, hd, _ = build_uhw(D)
            if corrupt:
                hd = _corrupt_uhw(P, hd)
            T2 = TensorAlgebra(P)
            gens = P.names
            _coassoc(rep, P, hd, T2, gens)
            _counit_axioms(rep, P, hd, gens)
            _antipode_axioms(rep, P, hd, gens)
            _relations_preserved(rep, P, hd, T2)
        elif algebra == "fun":
            P, hd = build_fun()
            if corrupt:
                cop = dict(hd.coproduct)
                T2 = TensorAlgebra(P)
                a, c = P.gens("a", "c")
                cop["a"] = T2.pure(a, P.one()) + T2.pure(P.one(), a)
                hd = HopfData(cop, dict(hd.counit), dict(hd.antipode))
            T2 = TensorAlgebra(P)
            gens = P.names
            _coassoc(rep, P, hd, T2, gens)
            _counit_axioms(rep, P, hd, gens)
            _antipode_axioms(rep, P, hd, gens)
            _relations_preserved(rep, P, hd, T2)
            _matrix_form(rep, P, hd, T2, fun_T(P), "T")
        elif algebra == "re":
            P, hd, bt, _ = build_re()
            if corrupt:
                # drop the braiding: the plain tensor product is not enough
                T2 = TensorAlgebra(P, mode=PLAIN)
            else:
                T2 = TensorAlgebra(P, mode=BRAIDED, braid=bt)
            gens = P.names
            _coassoc(rep, P, hd, TensorAlgebra(P), gens)
            _counit_axioms(rep, P, hd, gens)
            _relations_preserved(rep, P, hd, T2, braid=bt)
            _matrix_form(rep, P, hd, T2, re_K(P), "K", braid=bt)
            rep.note("braided antipode axiom (reported, not gated): "
                     + braided_antipode_axiom_status(P, hd, bt))
        else:
            raise ValueError(f"unknown algebra {algebra!r}")
    return rep


def braided_antipode_axiom_status(P, hd, bt) -> str:
    bad = []
    for g in P.names:
        eps = P.scalar(counit_apply(P.gen(g), hd, P))
        for side in ("left", "right"):
            acc = P.zero()
            for (u, v), c in hd.coproduct[g].terms.items():
                if side == "left":
                    acc = acc + P.normal_form(braided_antipode(_word(u), hd, bt) * _word(v)) * c
                else:
                    acc = acc + P.normal_form(_word(u) * braided_antipode(_word(v), hd, bt)) * c
            if P.normal_form(acc - eps):
                bad.append(f"{side}:{g}")
    return "holds on all generators" if not bad else "fails at " + ", ".join(bad)
