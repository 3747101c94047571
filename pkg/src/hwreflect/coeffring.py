"""Exact coefficient arithmetic in the deformation parameters ``h`` and ``w``.

Three coefficient models are provided:

* :class:`PolyHW` -- polynomials in ``h`` and ``w`` with rational coefficients,
* :class:`TruncSeriesHW` -- the same, truncated at a total degree cap ``D``,
* :class:`RatHW` -- reduced quotients of two :class:`PolyHW`.

Plain ``int`` and :class:`fractions.Fraction` values act as scalars in every
model.  Operands from two different models are never combined implicitly;
use :meth:`Model.coerce` to move a value into a model.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

PARAMS = ("h", "w")


class CoefficientError(ArithmeticError):
    pass


class ModelMismatchError(CoefficientError, TypeError):
    pass


class NonUnitError(CoefficientError):
    pass


class PoleError(CoefficientError):
    pass


class UnsupportedSubstitutionError(CoefficientError):
    pass


def _is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


def _add_terms(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + sign * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mul_terms(a: dict, b: dict, cap: int | None = None) -> dict:
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            i, j = i1 + i2, j1 + j2
            if cap is not None and i + j > cap:
                continue
            k = (i, j)
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _glex_key(mono):
    i, j = mono
    return (i + j, i, j)


def _fmt_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_mono(i: int, j: int) -> str:
    parts = []
    for name, e in (("h", i), ("w", j)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(terms: dict) -> str:
    """Render a term map as ``2*h*w - 1/2*w^2``; ``0`` when empty."""
    if not terms:
        return "0"
    out = []
    for mono in sorted(terms, key=_glex_key):
        c = terms[mono]
        neg = c < 0
        mag = -c if neg else c
        m = _fmt_mono(*mono)
        if not m:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{_fmt_rational(mag)}*{m}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class _TermsMixin:
    """Shared read-only helpers for the two term-map models."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def min_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(i + j for i, j in self.terms)

    def max_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(i + j for i, j in self.terms)

    def monomials(self):
        """Yield ``((h_exp, w_exp), coefficient)`` in graded-lex order."""
        for mono in sorted(self.terms, key=_glex_key):
            yield mono, self.terms[mono]

    def __str__(self):
        return format_terms(self.terms)


class PolyHW(_TermsMixin):
    """Polynomial in ``h`` and ``w`` over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = _clean(terms) if terms else {}

    @classmethod
    def const(cls, c) -> "PolyHW":
        return cls({(0, 0): c})

    @classmethod
    def h(cls) -> "PolyHW":
        return cls({(1, 0): 1})

    @classmethod
    def w(cls) -> "PolyHW":
        return cls({(0, 1): 1})

    def _other(self, other) -> dict:
        if isinstance(other, PolyHW):
            return other.terms
        if _is_scalar(other):
            return {(0, 0): other} if other else {}
        raise ModelMismatchError(f"cannot combine PolyHW with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, PolyHW) and not _is_scalar(other):
            return NotImplemented
        return PolyHW(_add_terms(self.terms, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PolyHW) and not _is_scalar(other):
            return NotImplemented
        return PolyHW(_add_terms(self.terms, self._other(other), -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PolyHW({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return PolyHW()
            return PolyHW({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, PolyHW):
            return NotImplemented
        return PolyHW(_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return PolyHW({k: Fraction(v) / other for k, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        out = PolyHW.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PolyHW):
            return self.terms == other.terms
        if _is_scalar(other):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"PolyHW({self})"

    def subst(self, param: str, value) -> "PolyHW":
        idx = PARAMS.index(param)
        value = Fraction(value)
        out: dict = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[idx]
            k = (0, j) if idx == 0 else (i, 0)
            out[k] = out.get(k, 0) + c * value ** e
        return PolyHW(out)

    def evaluate(self, h, w) -> Fraction:
        return sum((c * Fraction(h) ** i * Fraction(w) ** j
                    for (i, j), c in self.terms.items()), Fraction(0))

    def leading(self):
        """Graded-lex leading ``(monomial, coefficient)`` (h before w)."""
        mono = max(self.terms, key=_glex_key)
        return mono, self.terms[mono]


class TruncSeriesHW(_TermsMixin):
    """Power series in ``h`` and ``w`` truncated above total degree ``cap``."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: dict | None, cap: int):
        if cap < 0:
            raise ValueError("truncation cap must be nonnegative")
        self.cap = cap
        self.terms = {k: v for k, v in (terms or {}).items()
                      if v and k[0] + k[1] <= cap}

    @classmethod
    def const(cls, c, cap: int) -> "TruncSeriesHW":
        return cls({(0, 0): c}, cap)

    @classmethod
    def h(cls, cap: int) -> "TruncSeriesHW":
        return cls({(1, 0): 1}, cap)

    @classmethod
    def w(cls, cap: int) -> "TruncSeriesHW":
        return cls({(0, 1): 1}, cap)

    def _other(self, other) -> dict | None:
        if isinstance(other, TruncSeriesHW):
            if other.cap != self.cap:
                raise ModelMismatchError(
                    f"series caps differ: {self.cap} vs {other.cap}")
            return other.terms
        if _is_scalar(other):
            return {(0, 0): other} if other else {}
        if isinstance(other, (PolyHW, RatHW)):
            raise ModelMismatchError(
                f"cannot combine TruncSeriesHW with {type(other).__name__}")
        return None

    def _new(self, terms):
        s = TruncSeriesHW.__new__(TruncSeriesHW)
        s.cap = self.cap
        s.terms = terms
        return s

    def __add__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return self._new(_add_terms(self.terms, t))

    __radd__ = __add__

    def __sub__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return self._new(_add_terms(self.terms, t, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return self._new({})
            return self._new({k: v * other for k, v in self.terms.items()})
        t = self._other(other)
        if t is None:
            return NotImplemented
        return self._new(_mul_terms(self.terms, t, self.cap))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self._new({k: Fraction(v) / other for k, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        out = TruncSeriesHW.const(1, self.cap)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, TruncSeriesHW):
            return self.cap == other.cap and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TruncSeriesHW({self}, cap={self.cap})"

    def truncate(self, cap: int) -> "TruncSeriesHW":
        if cap > self.cap:
            raise ModelMismatchError("cannot raise the truncation cap of a series")
        return TruncSeriesHW(self.terms, cap)

    def subst(self, param: str, value) -> "TruncSeriesHW":
        if value != 0:
            raise UnsupportedSubstitutionError(
                "truncated series only support setting a parameter to zero")
        idx = PARAMS.index(param)
        return self._new({k: v for k, v in self.terms.items() if k[idx] == 0})


def invert_unit(p):
    """Multiplicative inverse of a series (or rational) with nonzero constant term."""
    if _is_scalar(p):
        if not p:
            raise NonUnitError("zero has no inverse")
        return Fraction(1) / p
    if not isinstance(p, TruncSeriesHW):
        raise ModelMismatchError("invert_unit expects a truncated series")
    c0 = p.constant_term()
    if not c0:
        raise NonUnitError(f"series {p} has zero constant term")
    inv0 = Fraction(1) / c0
    # p = c0 (1 + q), q without constant term; 1/(1+q) = sum (-q)^k
    q = p * inv0 - 1
    neg_q = -q
    term = TruncSeriesHW.const(1, p.cap)
    acc = TruncSeriesHW.const(1, p.cap)
    for _ in range(p.cap):
        term = term * neg_q
        if not term:
            break
        acc = acc + term
    return acc * inv0


def _to_sympy(p: PolyHW):
    from sympy.polys.domains import QQ
    ring = _sympy_ring()[0]
    return ring({k: QQ(Fraction(v).numerator, Fraction(v).denominator)
                 for k, v in p.terms.items()})


def _from_sympy(e) -> PolyHW:
    return PolyHW({tuple(k): Fraction(int(v.numerator), int(v.denominator))
                   for k, v in e.terms()})


_RING = None


def _sympy_ring():
    global _RING
    if _RING is None:
        from sympy.polys.domains import QQ
        from sympy.polys.rings import ring
        _RING = ring("h,w", QQ)
    return _RING


class RatHW:
    """Quotient ``num/den`` of polynomials in ``h`` and ``w``, kept reduced.

    The denominator is made monic under graded-lex order, so equal rational
    functions have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if _is_scalar(num):
            num = PolyHW.const(num)
        if den is None:
            den = PolyHW.const(1)
        elif _is_scalar(den):
            den = PolyHW.const(den)
        if not isinstance(num, PolyHW) or not isinstance(den, PolyHW):
            raise ModelMismatchError("RatHW is built from PolyHW parts")
        if not den:
            raise PoleError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: PolyHW, den: PolyHW):
        if not num:
            return PolyHW(), PolyHW.const(1)
        if not den.is_constant():
            sn, sd = _to_sympy(num), _to_sympy(den)
            g = sn.gcd(sd)
            if not g.is_ground:
                num = _from_sympy(sn.exquo(g))
                den = _from_sympy(sd.exquo(g))
        _, lc = den.leading()
        if lc != 1:
            inv = Fraction(1) / lc
            num, den = num * inv, den * inv
        return num, den

    @classmethod
    def h(cls):
        return cls(PolyHW.h())

    @classmethod
    def w(cls):
        return cls(PolyHW.w())

    def _coerce(self, other):
        if isinstance(other, RatHW):
            return other
        if _is_scalar(other):
            return RatHW(PolyHW.const(other), _reduced=True) if other else RatHW(PolyHW(), _reduced=True)
        if isinstance(other, (PolyHW, TruncSeriesHW)):
            raise ModelMismatchError(
                f"cannot combine RatHW with {type(other).__name__}")
        return None

    def _polynomial(self) -> bool:
        return self.den.terms == {(0, 0): 1}

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._polynomial() and o._polynomial():
            return RatHW(self.num + o.num, self.den, _reduced=True)
        if self.den == o.den:
            return RatHW(self.num + o.num, self.den)
        return RatHW(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatHW(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return RatHW(PolyHW(), _reduced=True)
            return RatHW(self.num * other, self.den, _reduced=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._polynomial() and o._polynomial():
            return RatHW(self.num * o.num, self.den, _reduced=True)
        return RatHW(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RatHW(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        out = RatHW(1)
        base = self if n >= 0 else RatHW(1) / self
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, RatHW):
            return self.num == other.num and self.den == other.den
        if _is_scalar(other) or isinstance(other, PolyHW):
            return self._polynomial() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self._polynomial():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1 or "/" in num:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatHW({self})"

    def subst(self, param: str, value) -> "RatHW":
        den = self.den.subst(param, value)
        if not den:
            raise PoleError(f"denominator {self.den} vanishes at {param}={value}")
        return RatHW(self.num.subst(param, value), den)


def subst_param(p, param: str, value):
    """Set ``param`` (``"h"`` or ``"w"``) to the rational ``value``."""
    if param not in PARAMS:
        raise ValueError(f"unknown parameter {param!r}")
    if _is_scalar(p):
        return p
    return p.subst(param, value)


class Model:
    """A coefficient model: which class carries coefficients, and how to coerce."""

    name = "abstract"

    def coerce(self, x):
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def h(self):
        return self.coerce(PolyHW.h())

    def w(self):
        return self.coerce(PolyHW.w())

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self), tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return f"{type(self).__name__}()"


class PolynomialModel(Model):
    name = "polynomial"

    def coerce(self, x):
        if isinstance(x, PolyHW):
            return x
        if _is_scalar(x):
            return PolyHW.const(x)
        if isinstance(x, RatHW) and x._polynomial():
            return x.num
        raise ModelMismatchError(f"{x!r} is not a polynomial in h, w")


class SeriesModel(Model):
    name = "series"

    def __init__(self, cap: int):
        if cap < 0:
            raise ValueError("truncation cap must be nonnegative")
        self.cap = cap

    def coerce(self, x):
        if isinstance(x, TruncSeriesHW):
            if x.cap == self.cap:
                return x
            return x.truncate(self.cap)
        if isinstance(x, PolyHW):
            return TruncSeriesHW(x.terms, self.cap)
        if _is_scalar(x):
            return TruncSeriesHW.const(x, self.cap)
        if isinstance(x, RatHW):
            num = TruncSeriesHW(x.num.terms, self.cap)
            den = TruncSeriesHW(x.den.terms, self.cap)
            return num * invert_unit(den)
        raise ModelMismatchError(f"cannot coerce {x!r} into a series")

    def __repr__(self):
        return f"SeriesModel({self.cap})"


class RationalModel(Model):
    name = "rational"

    def coerce(self, x):
        if isinstance(x, RatHW):
            return x
        if isinstance(x, PolyHW) or _is_scalar(x):
            return RatHW(x, _reduced=True) if isinstance(x, PolyHW) else RatHW(x)
        raise ModelMismatchError(f"cannot coerce {x!r} into rational functions")
