import random
from fractions import Fraction
from math import factorial

import pytest
from conftest import random_elem
from hypothesis import given, settings
from hypothesis import strategies as st

from hwreflect.catalog import (
    ALGEBRA_IDS,
    CatalogError,
    FockEnv,
    FockError,
    build_re_h0,
    build_re_h0_shifted,
    build_re_w0,
    build_uhw,
    classical_images,
    classical_presentation,
    exp_coeffs,
    get_algebra,
    re_K,
    re_K_inverse_printed,
    sinhc_coeffs,
    uhw_presentation,
    xsinh_coeffs,
)
from hwreflect.ncalg import apply_hom, local_confluence_check
from hwreflect.ncmatrix import NCMat, mat_mul
from hwreflect.verifier.hopf import relations


def test_series_coefficients():
    assert [exp_coeffs(k) for k in range(4)] == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    assert [sinhc_coeffs(k) for k in range(5)] == [1, 0, Fraction(1, 6), 0, Fraction(1, 120)]
    # t/sinh t = 1 - t^2/6 + 7 t^4/360
    assert [xsinh_coeffs(k) for k in range(5)] == [1, 0, Fraction(-1, 6), 0, Fraction(7, 360)]
    prod = [sum(sinhc_coeffs(j) * xsinh_coeffs(k - j) for j in range(k + 1)) for k in range(8)]
    assert prod == [1] + [0] * 7


def test_uhw_series_example():
    P = uhw_presentation(2)
    Am, Ap = P.gens("Am", "Ap")
    assert P.format(P.normal_form(Am * Ap)) == "Ap*Am + E + w*E*Ap + 1/2*w^2*E*Ap^2 + 1/6*h^2*E^3"


def test_negative_truncation_rejected():
    with pytest.raises(CatalogError):
        uhw_presentation(-1)


def test_get_algebra_ids():
    for key in ALGEBRA_IDS:
        assert get_algebra(key, 2).P.names
    with pytest.raises(CatalogError):
        get_algebra("sl2")


def test_casimir_central(uhw):
    P, _, named = uhw
    for g in P.names:
        assert not P.commutator(named["C"], P.gen(g))


def test_classical_images_satisfy_oscillator_relations(uhw):
    P, _, _ = uhw
    C = classical_presentation()
    img = classical_images(P, 4)
    for label, lhs, rhs in relations(C):
        assert apply_hom(img, lhs - rhs, C, P) == P.zero(), label


def test_re_inverse_printed(re_alg):
    P = re_alg[0]
    K = re_K(P)
    assert mat_mul(K, re_K_inverse_printed(P)) == NCMat.identity(3, P)


def test_limit_names():
    P, nm = build_re_w0()
    assert P.format(nm["xi"]) == "-2*h*gamma^2 + 2*h*gamma"
    P, nm = build_re_h0()
    assert "alphainv" in P.names
    P, nm = build_re_h0_shifted()
    assert P.format(nm["P2+"]) == "(1/w^2)*alpha*uinv"


def test_limit_presentations_are_confluent():
    for P in (build_re_w0()[0], build_re_h0()[0], build_re_h0_shifted()[0]):
        assert local_confluence_check(P).passed, P.name


def test_fock_minimum_size():
    with pytest.raises(FockError):
        FockEnv(1, 0, 0, 1)


def test_fock_oscillator():
    env = FockEnv(5, Fraction(1, 2), Fraction(1, 3), 1)
    am, ap = env.am, env.ap
    x = am * ap - ap * am - env.one * env.e
    assert x.retained_rows() == 4
    assert x.residual_levels() == []
    # the boundary level is corrupted by truncation
    assert x.mat[4, 4] != 0


def test_fock_w0_uses_plain_raising():
    env = FockEnv(4, Fraction(1, 2), 0, 2)
    assert (env.Ap - env.ap).residual_levels() == []


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_fock_agrees_with_normal_form_at_zero_parameters(seed):
    # with h = w = 0 the truncation is invisible, so nf(x) and x act alike
    P, _, _ = build_uhw(2)
    rng = random.Random(seed)
    x = random_elem(P, rng, max_len=4)
    env = FockEnv(7, 0, 0, Fraction(rng.randint(1, 5), 2))
    diff = env.evaluate(P.normal_form(x)) - env.evaluate(x)
    assert diff.residual_levels() == []


def test_exp_coeffs_match_factorial():
    assert all(exp_coeffs(k) == Fraction(1, factorial(k)) for k in range(10))
