"""RTT relations for the function algebra."""

from __future__ import annotations

from ..catalog import fun_presentation, fun_T
from ..coeffring import PolynomialModel
from ..ncalg import NCElem, Presentation
from ..ncmatrix import leg_embed, mat_mul
from ..report import Report
from .common import lift, pair_index, r_matrix, record_matrix, timed

FREE_FUN = Presentation(list("abcd"), {}, PolynomialModel(), name="free(a,b,c,d)")


def _printed_relations() -> dict:
    """Commutator relations in the printed form ``[x, y] - rhs``."""
    M = FREE_FUN.model
    h, w = M.h(), M.w()
    a, b, c, d = (NCElem.gen(g) for g in "abcd")

    def com(x, y):
        return x * y - y * x

    return {
        "[a,b]": com(a, b) - a * (2 * h) - a * a * w,
        "[c,d]": com(c, d) - (c * c - c) * w,
        "[b,d]": com(b, d),
        "[a,c]": com(a, c),
        "[a,d]": com(a, d) - a * c * w,
        "[b,c]": com(b, c) + a * c * w,
    }


def rtt_residual(P: Presentation, R=None):
    R = R if R is not None else r_matrix()
    T = fun_T(P)
    T1, T2 = leg_embed(T, "1", 2), leg_embed(T, "2", 2)
    Rl = lift(R, P)
    return mat_mul(Rl, mat_mul(T1, T2)) - mat_mul(mat_mul(T2, T1), Rl)


def check_rtt(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("rtt" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        P = fun_presentation()
        if corrupt:
            # sign of w flipped in the c/d exchange
            c, d = P.gens("c", "d")
            P = P.with_rules({("d", "c"): c * d + (c * c - c) * P.w}, name="fun[corrupt]")
        res = rtt_residual(P)
        record_matrix(rep, res, "RT1T2-T2T1R", two_leg=True)
        if not corrupt:
            free = rtt_residual(FREE_FUN)
            found = {}
            entries = [((i, j), x) for (i, j), x in free.nonzero_entries()]
            for name, rel in _printed_relations().items():
                for (i, j), x in entries:
                    if x == rel or x == -rel:
                        found[name] = f"{pair_index(i - 1)},{pair_index(j - 1)}"
                        break
                else:
                    rep.add_residual(f"relation {name}", "not found among free residual entries")
            for name, loc in found.items():
                rep.note(f"{name} recovered at entry {loc}")
            rep.params["free_nonzero_entries"] = len(entries)
    return rep
