from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hwreflect.coeffring import (
    ModelMismatchError,
    NonUnitError,
    PoleError,
    PolyHW,
    PolynomialModel,
    RatHW,
    SeriesModel,
    TruncSeriesHW,
    UnsupportedSubstitutionError,
    invert_unit,
    subst_param,
)

h, w = PolyHW.h(), PolyHW.w()

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, small, max_size=4).map(PolyHW)


def test_polynomial_printing_is_ascending_degree():
    assert str((h + w) ** 2) == "w^2 + 2*h*w + h^2"
    assert str(PolyHW({(0, 0): Fraction(1, 2)})) == "1/2"
    assert str(PolyHW()) == "0"


def test_zero_is_canonical():
    assert (h - h) == 0
    assert not (h - h).terms


def test_subst_and_evaluate():
    p = (h + w) ** 2
    assert p.subst("h", 0) == w * w
    assert p.evaluate(1, 2) == 9


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


def test_series_inverse():
    s = TruncSeriesHW((1 + h).terms, 3)
    inv = invert_unit(s)
    assert str(inv) == "1 - h + h^2 - h^3"
    assert inv * s == 1


def test_series_non_unit():
    with pytest.raises(NonUnitError):
        invert_unit(TruncSeriesHW(h.terms, 3))


def test_series_truncates_products():
    s = TruncSeriesHW(h.terms, 2)
    assert s * s * s == 0
    assert (s * s).max_degree() == 2


def test_series_only_allows_zero_substitution():
    with pytest.raises(UnsupportedSubstitutionError):
        TruncSeriesHW(h.terms, 3).subst("h", 1)
    assert TruncSeriesHW((h + w).terms, 3).subst("h", 0) == TruncSeriesHW(w.terms, 3)


@settings(max_examples=60)
@given(polys, st.integers(0, 4))
def test_series_unit_inverse_property(p, cap):
    s = TruncSeriesHW((p - p.constant_term() + 1).terms, cap)
    assert invert_unit(s) * s == 1


def test_rational_reduction_and_printing():
    assert RatHW(2 * h * w, w * w) == RatHW(2 * h, w)
    assert str(RatHW(2 * h * w, w * w)) == "2*h/w"
    assert RatHW(h * h - w * w, h - w) == h + w
    assert str(RatHW(1, -2 * h)) == "(-1/2)/h"


def test_rational_does_not_mix_with_series():
    with pytest.raises(ModelMismatchError):
        RatHW(h, w) + TruncSeriesHW(h.terms, 2)


def test_rational_pole():
    with pytest.raises(PoleError):
        RatHW(2 * h, w).subst("w", 0)
    assert subst_param(RatHW(h, w), "h", 0) == 0


@settings(max_examples=40, deadline=None)
@given(polys, polys.filter(bool), polys.filter(bool))
def test_rational_field_operations(a, b, c):
    x = RatHW(a, b)
    y = RatHW(c, b)
    assert (x + y) * RatHW(b) == RatHW(a + c)
    if c:
        assert RatHW(a, b) / RatHW(c) * RatHW(c) == RatHW(a, b)


def test_models_coerce():
    assert PolynomialModel().coerce(3) == 3
    with pytest.raises(ModelMismatchError):
        PolynomialModel().coerce(RatHW(1, h))
    assert str(SeriesModel(2).coerce(RatHW(1, 1 + h))) == "1 - h + h^2"
    with pytest.raises(ValueError):
        SeriesModel(-1)
