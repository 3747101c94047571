"""Yang-Baxter equation for the 9x9 R-matrix, plus the rewriting-consistency suite."""

from __future__ import annotations

from ..catalog import (
    build_fun,
    build_re,
    build_re_double,
    build_re_h0,
    build_re_h0_shifted,
    build_re_h0_unit,
    build_re_w0,
    build_uhw,
    classical_presentation,
    re_double_base,
)
from ..coeffring import PolynomialModel
from ..ncalg import local_confluence_check
from ..ncmatrix import NCMat, chain, leg_embed
from ..report import Report
from .common import r_matrix, r_plus, r_tilde, record_matrix, timed

# the twin deletes the -w e23 (x) e22 piece; deleting both w pieces still solves YBE
CONTROL_DROP = ("w23_22",)


def ybe_residual(R: NCMat) -> NCMat:
    R12, R13, R23 = (leg_embed(R, p, 3) for p in ("12", "13", "23"))
    return chain(R12, R13, R23) - chain(R23, R13, R12)


def check_ybe(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("ybe" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        R = r_matrix(drop=CONTROL_DROP if corrupt else ())
        record_matrix(rep, ybe_residual(R), "R12R13R23-R23R13R12")
        if not corrupt:
            record_matrix(rep, ybe_residual(r_plus(R)), "YBE for R+")
            record_matrix(rep, ybe_residual(r_tilde(R)), "YBE for R~")
            rep.note("R~ = R+^-1 and R+ also satisfy the equation")
        else:
            rep.params["dropped"] = ",".join(CONTROL_DROP)
    return rep


def presentations(D: int = 4) -> list:
    return [
        build_uhw(D)[0],
        build_fun()[0],
        build_re()[0],
        build_re_double(),
        classical_presentation(),
        build_re_w0()[0],
        build_re_h0()[0],
        build_re_h0_unit()[0],
        build_re_h0_shifted()[0],
    ]


def corrupt_double():
    """The double algebra with the sign of ``w`` flipped in the primed-alpha/beta rule."""
    from .fusion import corrupt_cross_rules

    base = re_double_base(PolynomialModel())
    return build_re_double(cross_updates=corrupt_cross_rules(base))


def check_confluence(D: int = 4, corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("confluence" + ("[control]" if corrupt else ""), control=corrupt,
                 params={"D": D})
    with timed(rep, timing):
        targets = [corrupt_double()] if corrupt else presentations(D)
        for P in targets:
            sub = local_confluence_check(P)
            rep.merge(sub, f"{P.name}: ")
    return rep
