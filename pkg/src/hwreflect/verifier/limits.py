"""The w -> 0 and h -> 0 limits of the reflection algebra."""

from __future__ import annotations

from ..catalog import (
    build_re_double,
    build_re_h0,
    build_re_h0_shifted,
    build_re_h0_unit,
    build_re_w0,
    re_h0_base,
)
from ..coeffring import CoefficientError, RationalModel
from ..ncalg import NCElem, local_confluence_check
from ..report import Report
from .common import expect_equal, expect_zero, timed


def _g(name):
    return NCElem.gen(name)


def rule_table_matches(rep: Report, P, table: dict, gens, label: str):
    """Every pair of ``gens`` obeys ``[x, y] = table[(x, y)]``, absent pairs commute."""
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            expected = table.get((x, y))
            if expected is None and (y, x) in table:
                expected = -table[(y, x)]
            lhs = P.commutator(P.gen(x), P.gen(y))
            rhs = P.normal_form(expected) if expected is not None else P.zero()
            expect_equal(rep, P, lhs, rhs, f"{label} [{x},{y}]")


def exchange_table_matches(rep: Report, P, table: dict, label: str):
    """Primed-left exchanges ``x' y`` against literal right sides; unlisted pairs commute."""
    for x in ("alpha", "beta", "delta"):
        for y in ("alpha", "beta", "delta"):
            lhs = P.normal_form(_g(x + "p") * _g(y))
            rhs = table.get((x, y), _g(y) * _g(x + "p"))
            expect_equal(rep, P, lhs, P.normal_form(rhs), f"{label} {x}'{y}")
    for x in ("alpha", "beta", "gamma", "delta"):
        for c in ("gamma", "gammap"):
            expect_zero(rep, P, P.commutator(P.gen(x), P.gen(c)), f"{label} [{x},{c}]")
            expect_zero(rep, P, P.commutator(P.gen(x + "p"), P.gen(c)), f"{label} [{x}',{c}]")


def elem_subst(x: NCElem, param: str, value) -> NCElem:
    return x.map_coefficients(lambda c: c.subst(param, value))


def pole_probe(rep: Report, named: dict, key: str, param: str, value=0):
    """Take a further limit of a named element; a pole is reported as skipped."""
    try:
        elem_subst(named[key], param, value)
    except CoefficientError as exc:
        rep.note(f"skipped: {key} at {param}={value} has a pole ({exc})")
        rep.params.setdefault("skipped_limits", []).append(f"{key}|{param}={value}")
        return False
    return True


def _w0_branch(rep: Report, corrupt: bool):
    P, nm = build_re_w0()
    h = P.h
    al, be, ga, de = _g("alpha"), _g("beta"), _g("gamma"), _g("delta")
    rule_table_matches(rep, P, {
        ("alpha", "beta"): al * ga * (2 * h),
        ("alpha", "delta"): ga * (ga - 1) * (2 * h),
        ("beta", "delta"): ga * de * (2 * h),
    }, ["alpha", "beta", "gamma", "delta"], "w=0")
    J, Pp, Pm, xi = nm["J"], nm["P+"], nm["P-"], nm["xi"]
    expect_equal(rep, P, xi, P.normal_form(ga * (1 - ga) * (2 * h)), "xi = 2h gamma(1-gamma)")
    expect_equal(rep, P, P.commutator(J, Pp), Pp, "[J,P+] = P+")
    expect_equal(rep, P, P.commutator(J, Pm), -Pm, "[J,P-] = -P-")
    sign = -1 if corrupt else 1
    expect_equal(rep, P, P.commutator(Pp, Pm), xi * sign, "[P+,P-] = xi")
    expect_zero(rep, P, P.commutator(xi, J), "[xi,J]")
    expect_equal(rep, P, nm["C2"], P.normal_form(Pm * Pp + xi * J), "C2 = P-P+ + xi J")
    for x in (J, Pp, Pm):
        expect_zero(rep, P, P.commutator(nm["C2"], x), "C2 central")
    pole_probe(rep, nm, "J", "h")
    D2 = build_re_double().specialize("w", 0, name="re2|w=0")
    alp, gap = _g("alphap"), _g("gammap")
    exchange_table_matches(rep, D2, {
        ("beta", "alpha"): al * _g("betap") - (ga - 1) * alp * (2 * h),
        ("beta", "beta"): be * _g("betap") - de * alp * (2 * h),
        ("delta", "alpha"): al * _g("deltap") - (ga - 1) * (gap - 1) * (2 * h),
        ("delta", "beta"): be * _g("deltap") - de * (gap - 1) * (2 * h),
    }, "braiding w=0")


def _h0_branch(rep: Report):
    base = re_h0_base()
    w = base.w
    al, be, ga, de = _g("alpha"), _g("beta"), _g("gamma"), _g("delta")
    rule_table_matches(rep, base, {
        ("alpha", "beta"): al * al * -w,
        ("alpha", "delta"): (ga - 1) * al * -w,
        ("beta", "delta"): al * de * -w,
    }, ["alpha", "beta", "gamma", "delta"], "h=0")

    P, nm = build_re_h0()
    conf = local_confluence_check(P)
    rep.merge(conf, "alpha inverted: ")
    X, Y, Z = nm["X"], nm["Y"], nm["Z"]
    gm1 = P.normal_form(ga - 1)
    expect_equal(rep, P, P.commutator(X, Y), X * -w, "[X,Y] = -wX")
    expect_equal(rep, P, P.commutator(X, Z), P.normal_form(gm1 * X * -w), "[X,Z] = -w(gamma-1)X")
    expect_equal(rep, P, P.commutator(Y, Z), P.normal_form(gm1 * Y * w - Z * w),
                 "[Y,Z] = w(gamma-1)Y - wZ")
    expect_equal(rep, P, nm["C2"], P.normal_form(X * (Z - gm1 * Y)), "C2 = X(Z - (gamma-1)Y)")

    P1, n1 = build_re_h0_unit()
    rep.merge(local_confluence_check(P1), "gamma=1: ")
    J, Pp, Pm = n1["Jhat"], n1["Phat+"], n1["Phat-"]
    expect_equal(rep, P1, P1.commutator(J, Pp), Pp, "[Jhat,Phat+] = Phat+")
    expect_equal(rep, P1, P1.commutator(J, Pm), -Pm, "[Jhat,Phat-] = -Phat-")
    expect_zero(rep, P1, P1.commutator(Pp, Pm), "[Phat+,Phat-] = 0")
    expect_equal(rep, P1, n1["C2"], P1.normal_form(Pp * Pm), "C2 = Phat+ Phat-")
    pole_probe(rep, n1, "Jhat", "w")

    P2, n2 = build_re_h0_shifted()
    rep.merge(local_confluence_check(P2), "gamma=1+u: ")
    J, Pp, Pm, u = n2["J2"], n2["P2+"], n2["P2-"], n2["u"]
    w = P2.w
    expect_equal(rep, P2, P2.commutator(J, Pp), Pp, "[J2,P2+] = P2+")
    expect_equal(rep, P2, P2.commutator(J, Pm), -Pm, "[J2,P2-] = -P2-")
    expect_zero(rep, P2, P2.commutator(Pp, Pm), "[P2+,P2-] = 0")
    expect_equal(rep, P2, n2["C2"], P2.normal_form(u * u * Pp * Pm * -(w * w * w)),
                 "C2 = -w^3 (gamma-1)^2 P2+ P2-")

    D2 = build_re_double(RationalModel()).specialize("h", 0, name="re2|h=0")
    alp, dep, gap = _g("alphap"), _g("deltap"), _g("gammap")
    exchange_table_matches(rep, D2, {
        ("alpha", "beta"): be * alp - al * alp * w,
        ("alpha", "delta"): de * alp - (ga - 1) * alp * w,
        ("beta", "alpha"): al * _g("betap") + al * alp * w,
        ("beta", "delta"): de * _g("betap") - de * alp * w + (ga - 1) * alp * (w * w),
        ("delta", "alpha"): al * dep + al * (gap - 1) * w,
        ("delta", "beta"): be * dep + al * dep * w,
        ("delta", "delta"): de * dep - de * (gap - 1) * w + (ga - 1) * dep * w,
    }, "braiding h=0")


def check_limits(corrupt: bool = False, timing: bool = True) -> Report:
    rep = Report("limits" + ("[control]" if corrupt else ""), control=corrupt)
    with timed(rep, timing):
        _w0_branch(rep, corrupt)
        if not corrupt:
            _h0_branch(rep)
    return rep
