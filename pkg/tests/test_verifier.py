from fractions import Fraction

import pytest

from hwreflect.catalog import FockError
from hwreflect.report import FAIL, PASS
from hwreflect.verifier import SUITES, gate, run_suite
from hwreflect.verifier.fock import fock_cross_check
from hwreflect.verifier.ybe import check_ybe, ybe_residual
from hwreflect.verifier.common import r_matrix

FAST = [s for s in SUITES if s != "hierarchy"]


@pytest.mark.parametrize("suite", FAST)
def test_suite_passes_and_twin_fails(suite):
    reports = run_suite(suite, D=2, timing=False)
    checks = [r for r in reports if not r.control]
    twins = [r for r in reports if r.control]
    assert len(checks) == len(twins) > 0
    for r in checks:
        assert r.status == PASS, (r.check, r.residuals[:3])
    for r in twins:
        assert r.status == FAIL and r.residuals, r.check
    assert gate(reports)


def test_hierarchy_depth_one():
    reports = [r for r in SUITES["hierarchy"](2, False) if "depth=1" in r.check]
    assert [r.status for r in reports] == [PASS, FAIL]


def test_ybe_residual_is_zero_matrix():
    res = ybe_residual(r_matrix())
    assert res.shape == (27, 27)
    assert not list(res.nonzero_entries())


def test_ybe_control_witness():
    rep = check_ybe(corrupt=True, timing=False)
    assert any(wit == "-2*h*w" for _, wit in rep.residuals)


def test_reports_are_deterministic():
    a = [r.to_json() for r in run_suite("braided", timing=False)]
    b = [r.to_json() for r in run_suite("braided", timing=False)]
    assert a == b


def test_braided_witness_is_a_specific_term():
    rep = run_suite("braided", timing=False)[0]
    assert rep.params["C2_witness"] == "-(beta*gamma) (x) (beta*gamma)"


def test_limits_note_pole_skips():
    rep = run_suite("limits", timing=False)[0]
    assert rep.params["skipped_limits"] == ["J|h=0", "Jhat|w=0"]
    assert any(n.startswith("skipped: J at h=0 has a pole") for n in rep.notes)


def test_fock_smallest_size():
    rep = fock_cross_check(3, Fraction(1, 2), Fraction(1, 3), 1, timing=False)
    assert rep.passed
    assert rep.params["min_retained"] >= 1
    with pytest.raises(FockError):
        fock_cross_check(2, Fraction(1, 2), Fraction(1, 3), 1)


def test_fock_seeded_report():
    reports = run_suite("fock", timing=False, fock_dim=5, seed=4)
    assert [r.check for r in reports] == ["fock", "fock[seeded]", "fock[control]"]
    assert reports[1].passed and reports[1].params["seed"] == 4


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
