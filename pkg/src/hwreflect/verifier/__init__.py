"""Check suites.  Every suite returns its reports followed by their corruption twins."""

from __future__ import annotations

import random
from fractions import Fraction

from ..catalog import DEFAULT_TRUNC
from ..report import Report
from .braided import check_braided
from .fock import TRIPLES, check_fock, fock_cross_check
from .fusion import check_fusion
from .hopf import check_hopf
from .lax import check_lax, check_rll
from .limits import check_limits
from .reflection import check_coproduct_hierarchy, check_re_abstract, check_re_represented
from .rtt import check_rtt
from .ybe import check_confluence, check_ybe


def _pair(fn, **kw) -> list:
    return [fn(corrupt=False, **kw), fn(corrupt=True, **kw)]


def _hopf(D, timing, **_):
    out = []
    for alg in ("uhw", "fun", "re"):
        out += _pair(check_hopf, algebra=alg, D=D, timing=timing)
    return out


def _hierarchy(D, timing, **_):
    return (_pair(check_coproduct_hierarchy, depth=1, D=D, timing=timing)
            + _pair(check_coproduct_hierarchy, depth=2, D=D, timing=timing))


def _random_triple(seed: int) -> tuple:
    rng = random.Random(seed)

    def frac(allow_zero=True):
        while True:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if allow_zero or x:
                return x

    return frac(), frac(), frac(False)


def _fock(D, timing, fock_dim=6, seed=None, **_):
    out = _pair(check_fock, Fdim=fock_dim, timing=timing)
    if seed is not None:
        h, w, e = _random_triple(seed)
        rep = fock_cross_check(fock_dim, h, w, e, timing=timing)
        rep.check = "fock[seeded]"
        rep.params["seed"] = seed
        out.insert(1, rep)
    return out


SUITES = {
    "ybe": lambda D, timing, **_: _pair(check_ybe, timing=timing),
    "confluence": lambda D, timing, **_: _pair(check_confluence, D=D, timing=timing),
    "lax": lambda D, timing, **_: _pair(check_lax, D=D, timing=timing),
    "rll": lambda D, timing, **_: _pair(check_rll, D=D, timing=timing),
    "rtt": lambda D, timing, **_: _pair(check_rtt, timing=timing),
    "hopf": _hopf,
    "re-abstract": lambda D, timing, **_: _pair(check_re_abstract, timing=timing),
    "re-represented": lambda D, timing, **_: _pair(check_re_represented, D=D, timing=timing),
    "hierarchy": _hierarchy,
    "fusion": lambda D, timing, **_: _pair(check_fusion, timing=timing),
    "braided": lambda D, timing, **_: _pair(check_braided, timing=timing),
    "limits": lambda D, timing, **_: _pair(check_limits, timing=timing),
    "fock": _fock,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, D: int = DEFAULT_TRUNC, timing: bool = True, fock_dim: int = 6,
              seed: int | None = None) -> list:
    """Run one suite (or ``"all"``) and return its reports in a fixed order."""
    if name == "all":
        out = []
        for key in SUITES:
            out += run_suite(key, D, timing, fock_dim, seed)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return SUITES[name](D=D, timing=timing, fock_dim=fock_dim, seed=seed)


def gate(reports: list) -> bool:
    """True when every ordinary report passes and every twin fails with a witness."""
    return all(r.ok for r in reports)


__all__ = [
    "Report",
    "SUITES",
    "SUITE_NAMES",
    "TRIPLES",
    "check_braided",
    "check_confluence",
    "check_coproduct_hierarchy",
    "check_fock",
    "check_fusion",
    "check_hopf",
    "check_lax",
    "check_limits",
    "check_re_abstract",
    "check_re_represented",
    "check_rll",
    "check_rtt",
    "check_ybe",
    "fock_cross_check",
    "gate",
    "run_suite",
]
