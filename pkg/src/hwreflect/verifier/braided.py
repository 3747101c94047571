"""Braided exchange between two copies of the reflection algebra."""

from __future__ import annotations

from ..catalog import RE_GENS, build_re, build_re_double
from ..ncalg import NCElem
from ..report import Report
from ..tensorspace import (
    BRAIDED,
    BraidTable,
    TensorAlgebra,
    TensorElem,
    braid_psi,
    braided_antipode,
    coproduct_apply,
    format_tensor,
)
from .common import expect_equal, timed


def _prime(word: tuple) -> tuple:
    return tuple(g + "p" if g in RE_GENS else g.replace("gammainv", "gammapinv") for g in word)


def table_as_rule(t: TensorElem, D2) -> NCElem:
    """Read ``x (x) y`` as the word ``x y'`` of the double algebra."""
    out = NCElem()
    for (u, v), c in t.terms.items():
        out = out + NCElem({u + _prime(v): c})
    return D2.normal_form(out)


def worked_example(P, hd, bt) -> dict:
    """Both sides of the antipode identity for the beta/delta relation."""
    al, be, ga, gi, de = P.gens("alpha", "beta", "gamma", "gammainv", "delta")
    h, w = P.h, P.w
    lhs = braided_antipode(be * de - de * be, hd, bt)
    rhs = braided_antipode(ga * de * (2 * h) - al * de * w, hd, bt)
    expected = P.normal_form(-gi * gi * de * (2 * h) - gi * gi * al * de * w
                             - gi * (2 * w * h) + 2 * w * h)
    return {"lhs": P.normal_form(lhs), "rhs": P.normal_form(rhs), "expected": expected}


def check_braided(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("braided" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        P, hd, bt, named = build_re()
        if corrupt:
            psi = dict(bt.psi)
            al, ga, de = P.gens("alpha", "gamma", "delta")
            psi[("delta", "alpha")] = TensorElem.pure(al, de) + TensorElem.pure(al, ga - 1) * P.w
            bt = BraidTable(P, psi)
        D2 = build_re_double()
        # the table against the primed-left exchange rules
        for x in RE_GENS:
            for y in RE_GENS:
                lhs = D2.normal_form(NCElem.word((x + "p", y)))
                rhs = table_as_rule(bt.psi[(x, y)], D2)
                expect_equal(rep, D2, lhs, rhs, f"psi({x} (x) {y}) vs {x}'{y}")
        order = P.order
        # bosonic central elements
        for m in ("C1", "C2"):
            c = named[m]
            for g in P.names:
                G = P.gen(g)
                a = braid_psi(TensorElem.pure(c, G), bt)
                b = braid_psi(TensorElem.pure(G, c), bt)
                if a != TensorElem.pure(G, c):
                    rep.add_residual(f"psi({m} (x) {g})", format_tensor(a - TensorElem.pure(G, c), order))
                if b != TensorElem.pure(c, G):
                    rep.add_residual(f"psi({g} (x) {m})", format_tensor(b - TensorElem.pure(c, G), order))
        T2 = TensorAlgebra(P, mode=BRAIDED, braid=bt)
        dC1 = coproduct_apply(named["C1"], hd, T2)
        if dC1 != T2.pure(named["C1"], named["C1"]):
            rep.add_residual("Delta(C1) grouplike", T2.format(dC1 - T2.pure(named["C1"], named["C1"])))
        diff = coproduct_apply(named["C2"], hd, T2) - T2.pure(named["C2"], named["C2"])
        if not diff:
            rep.add_residual("Delta(C2) - C2 (x) C2", "0 (expected a nonzero difference)")
        else:
            witness = format_tensor(diff, order).split(" + ")[0]
            rep.params["C2_witness"] = witness
            rep.note(f"Delta(C2) - C2 (x) C2 has {len(diff.terms)} terms; witness term {witness}")
        ex = worked_example(P, hd, bt)
        rep.note(f"S~([beta,delta]) = {P.format(ex['lhs'])}")
        rep.note(f"S~(2h gamma delta - w alpha delta) = {P.format(ex['rhs'])}")
        expect_equal(rep, P, ex["lhs"], ex["expected"], "worked example lhs")
        expect_equal(rep, P, ex["rhs"], ex["expected"], "worked example rhs")
    return rep
