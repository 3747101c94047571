"""Exact-rational cross-check of the symbolic identities on a truncated Fock space."""

from __future__ import annotations

from fractions import Fraction

from ..catalog import FockEnv, FockError, FockOp, comm
from ..report import Report
from .common import timed

# (h, w, e) triples used by the default suite
TRIPLES = (
    (Fraction(1, 2), Fraction(1, 3), Fraction(1)),
    (Fraction(-2, 5), Fraction(3, 7), Fraction(2, 3)),
    (Fraction(1, 7), Fraction(-5, 4), Fraction(-3)),
)
ORDER = 8


def _expect(rep: Report, label: str, x: FockOp):
    kept = x.retained_rows()
    rep.params["min_retained"] = min(rep.params.get("min_retained", kept), kept)
    if kept == 0:
        rep.add_residual(label, "no retained level")
        return
    bad = x.residual_levels()
    if bad:
        m = bad[0]
        nz = [(j, v) for j, v in enumerate(x.mat[m]) if v != 0][0]
        rep.add_residual(label, f"level {m}: column {nz[0]} = {nz[1]}")


def k_entries(env: FockEnv) -> dict:
    """Entries of the represented reflection matrix as Fock operators."""
    h, w, q = env.h, env.w, env.q
    qi = 1 / q
    sinh = env.sinh_hE()
    a_plus = env.expm1_wAp(-1) * -1          # (1 - exp(-w Ap))/w
    one_minus = env.expm1_wAp(-1) * -w       # 1 - exp(-w Ap)
    N, Am = env.N, env.Am
    return {
        "alpha": a_plus * (2 * h * qi * qi),
        "beta": (a_plus * Am) * (4 * h * h * qi) + (one_minus * N) * (2 * h * qi * qi) - N * (2 * h),
        "gamma": env.one * (qi * qi),
        "delta": Am * (2 * h * qi) - N * (2 * w * qi * sinh),
    }


def fock_cross_check(Fdim: int, h, w, e_val, corrupt: bool = False, timing: bool = True,
                     order: int = ORDER) -> Report:
    h, w, e_val = Fraction(h), Fraction(w), Fraction(e_val)
    rep = Report("fock" + ("[control]" if corrupt else ""), control=corrupt,
                 params={"Fdim": Fdim, "h": str(h), "w": str(w), "e": str(e_val),
                         "order": order})
    if Fdim < 3:
        raise FockError("Fock cross-check needs at least three levels")
    with timed(rep, timing):
        env = FockEnv(Fdim, h, w, e_val, order)
        N, Ap, Am = env.N, env.Ap, env.Am
        # undeformed oscillator underneath
        _expect(rep, "[n,a+] - a+", comm(env.n, env.ap) - env.ap)
        _expect(rep, "[a-,a+] - e", comm(env.am, env.ap) - env.one * env.e)
        # the deformed relations
        _expect(rep, "[N,A+] - (exp(wA+)-1)/w", comm(N, Ap) - env.expm1_wAp(1))
        sign = 1 if corrupt else -1
        _expect(rep, "[N,A-] + A-", comm(N, Am) - Am * sign)
        _expect(rep, "[A-,A+] - sinh(hE)/h exp(wA+)", comm(Am, Ap) - env.exp_wAp(1) * env.sigma)
        C = env.casimir()
        for g, x in (("N", N), ("A+", Ap), ("A-", Am)):
            _expect(rep, f"[C,{g}]", comm(C, x))
        # reflection algebra images
        k = k_entries(env)
        al, be, ga, de = k["alpha"], k["beta"], k["gamma"], k["delta"]
        t = ga * (2 * h) - al * w
        _expect(rep, "[alpha,beta] - alpha t", comm(al, be) - al * t)
        _expect(rep, "[alpha,delta] - t(gamma-1)", comm(al, de) - t * (ga - 1))
        _expect(rep, "[beta,delta] - t delta", comm(be, de) - t * de)
        for g, x in (("alpha", al), ("beta", be), ("delta", de)):
            _expect(rep, f"[gamma,{g}]", comm(ga, x))
        C2 = al * de - be * ga + be
        qi = 1 / env.q
        _expect(rep, "C2 - (-2h exp(-hE)(sinh(hE) + 2hC))",
                C2 - (env.one * env.sinh_hE() + C * (2 * h)) * (-2 * h * qi))
        rep.note(f"exp(hE) as Taylor polynomial of order {order}")
    return rep


def check_fock(Fdim: int = 6, corrupt: bool = False, timing: bool = True) -> Report:
    """Three generic triples plus the h = 0 and w = 0 paths."""
    rep = Report("fock" + ("[control]" if corrupt else ""), control=corrupt,
                 params={"Fdim": Fdim, "order": ORDER, "triples": len(TRIPLES)})
    with timed(rep, timing):
        runs = list(TRIPLES) + [(Fraction(0), Fraction(2, 5), Fraction(3, 2)),
                                (Fraction(3, 4), Fraction(0), Fraction(-1, 2))]
        for h, w, e in runs:
            sub = fock_cross_check(Fdim, h, w, e, corrupt=corrupt, timing=False)
            rep.merge(sub, f"(h={h},w={w},e={e}) ")
            kept = sub.params.get("min_retained", 0)
            rep.params["min_retained"] = min(rep.params.get("min_retained", kept), kept)
        rep.notes = [f"exp(hE) as Taylor polynomial of order {ORDER}",
                     f"paths: {len(TRIPLES)} generic, h=0, w=0"]
    return rep
