"""Free associative algebra over a coefficient model, with an ordered
rewriting normalizer driven by a :class:`Presentation`.

Words are tuples of generator names.  Every rewrite rule has a length-2
left side: either an inversion ``(y, x)`` with ``y`` after ``x`` in the
generator order, or a cancellation ``g * ginv``.  Normal forms are therefore
words free of reducible adjacent pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coeffring import (
    Model,
    PolyHW,
    PolynomialModel,
    RatHW,
    TruncSeriesHW,
    _fmt_mono,
    _fmt_rational,
    _glex_key,
    _is_scalar,
    subst_param,
)
from .report import Report

Word = tuple


class AlgebraError(Exception):
    pass


class NonTerminationError(AlgebraError):
    """Rewriting exceeded the configured step cap."""


class UnknownGeneratorError(AlgebraError, KeyError):
    pass


class UnsupportedLocalizationError(AlgebraError):
    pass


class IncompleteHomomorphismError(AlgebraError, KeyError):
    pass


@dataclass(frozen=True)
class GenSym:
    name: str
    inverse_of: str | None = None
    central: bool = False


def _acc(out: dict, key, c) -> None:
    s = out.get(key)
    s = c if s is None else s + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class NCElem:
    """Finite linear combination of words; multiplication is concatenation.

    Products here are taken in the free algebra.  Use
    :meth:`Presentation.mul` or :meth:`Presentation.normal_form` to reduce.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def gen(cls, name: str) -> "NCElem":
        return cls({(name,): 1})

    @classmethod
    def scalar(cls, c) -> "NCElem":
        return cls({(): c})

    @classmethod
    def one(cls) -> "NCElem":
        return cls({(): 1})

    @classmethod
    def word(cls, letters: Iterable[str], coeff=1) -> "NCElem":
        return cls({tuple(letters): coeff})

    @staticmethod
    def _lift(other):
        if isinstance(other, NCElem):
            return other
        if _is_scalar(other) or isinstance(other, (PolyHW, TruncSeriesHW, RatHW)):
            return NCElem({(): other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            _acc(out, k, v)
        return NCElem(out)

    __radd__ = __add__

    def __neg__(self):
        return NCElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCElem):
            out: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    _acc(out, u + v, a * b)
            return NCElem(out)
        if _is_scalar(other) or isinstance(other, (PolyHW, TruncSeriesHW, RatHW)):
            return NCElem({k: v * other for k, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, (PolyHW, TruncSeriesHW, RatHW)):
            return NCElem({k: other * v for k, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, n: int):
        out = NCElem.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.terms[k] == o.terms[k] for k in self.terms)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> object:
        return self.terms.get(tuple(word), 0)

    def letters(self) -> set:
        return {g for w in self.terms for g in w}

    def map_coefficients(self, f) -> "NCElem":
        return NCElem({k: f(v) for k, v in self.terms.items()})

    def __repr__(self):
        return f"NCElem({format_elem(self)})"

    def __str__(self):
        return format_elem(self)


def _word_str(word) -> str:
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        n = j - i
        parts.append(word[i] if n == 1 else f"{word[i]}^{n}")
        i = j
    return "*".join(parts)


def _expand_coefficient(c):
    """Split a coefficient into ``(sort_degree, glex, rational, mono_str)`` pieces."""
    if _is_scalar(c):
        return [((0, 0, 0), Fraction(c), "")]
    if isinstance(c, RatHW):
        if c.den.terms == {(0, 0): 1}:
            c = c.num
        else:
            deg = c.num.min_degree() or 0
            return [((deg, 0, 0), Fraction(1), f"({c})")]
    return [(_glex_key(m), Fraction(v), _fmt_mono(*m)) for m, v in c.terms.items()]


def iter_printed_terms(x: NCElem, order: Mapping[str, int] | None = None):
    """Yield ``(coefficient_rational, mono_str, word)`` in canonical print order.

    Order: ascending parameter degree, then words in descending deg-lex
    order under the generator order.
    """
    if order is None:
        order = {g: i for i, g in enumerate(sorted(x.letters()))}
    items = []
    for word, c in x.terms.items():
        for glex, rat, mono in _expand_coefficient(c):
            key = (glex[0], -len(word), tuple(-order[g] for g in word), glex)
            items.append((key, rat, mono, word))
    items.sort(key=lambda it: it[0])
    for _, rat, mono, word in items:
        yield rat, mono, word


def format_elem(x, order: Mapping[str, int] | None = None) -> str:
    if not isinstance(x, NCElem):
        return str(x)
    out = []
    for rat, mono, word in iter_printed_terms(x, order):
        neg = rat < 0
        mag = -rat if neg else rat
        parts = []
        if mag != 1 or (not mono and not word):
            parts.append(_fmt_rational(mag))
        if mono:
            parts.append(mono)
        if word:
            parts.append(_word_str(word))
        body = "*".join(parts)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


class Presentation:
    """Generators in a total order, length-2 rewrite rules, a coefficient model.

    Instances are treated as immutable; the normal-form cache is an
    implementation detail.
    """

    def __init__(self, generators: Sequence, rules: Mapping, model: Model | None = None,
                 name: str = "", max_steps: int = 10**6):
        gens = [g if isinstance(g, GenSym) else GenSym(g) for g in generators]
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise AlgebraError("generator names must be unique")
        self.generators = tuple(gens)
        self.names = tuple(names)
        self.order = {n: i for i, n in enumerate(names)}
        self.model = model or PolynomialModel()
        self.name = name
        self.max_steps = max_steps
        self._one = self.model.one()
        self.rules = {}
        for lhs, rhs in rules.items():
            lhs = tuple(lhs)
            if len(lhs) != 2:
                raise AlgebraError(f"rule left side must have length 2: {lhs}")
            for g in lhs:
                self._check_gen(g)
            rhs = rhs if isinstance(rhs, NCElem) else NCElem.scalar(rhs)
            for w in rhs.terms:
                for g in w:
                    self._check_gen(g)
            self.rules[lhs] = tuple((w, self.model.coerce(c)) for w, c in rhs.terms.items())
        self._word_cache: dict = {}
        self._insert_cache: dict = {}
        self._steps = 0
        self._depth = 0

    # -- basic accessors -------------------------------------------------

    def _check_gen(self, g):
        if g not in self.order:
            raise UnknownGeneratorError(f"{g!r} is not a generator of {self.name or 'this presentation'}")

    def gen(self, name: str) -> NCElem:
        self._check_gen(name)
        return NCElem({(name,): self._one})

    def gens(self, *names) -> list:
        return [self.gen(n) for n in names]

    def gensym(self, name: str) -> GenSym:
        self._check_gen(name)
        return self.generators[self.order[name]]

    def scalar(self, c) -> NCElem:
        return NCElem({(): self.model.coerce(c)})

    def one(self) -> NCElem:
        return NCElem({(): self._one})

    def zero(self) -> NCElem:
        return NCElem()

    @property
    def h(self):
        return self.model.h()

    @property
    def w(self):
        return self.model.w()

    def rule(self, lhs) -> NCElem | None:
        r = self.rules.get(tuple(lhs))
        return None if r is None else NCElem(dict(r))

    def is_normal_word(self, word) -> bool:
        return all((word[i], word[i + 1]) not in self.rules for i in range(len(word) - 1))

    def format(self, x) -> str:
        return format_elem(x, self.order)

    def __repr__(self):
        return f"Presentation({self.name or '?'}, gens={list(self.names)}, model={self.model!r})"

    # -- normal form -------------------------------------------------------

    def _insert(self, u: tuple, x: str) -> dict:
        """Normal form of ``u + (x,)`` for a normal word ``u``."""
        if not u or (u[-1], x) not in self.rules:
            return {u + (x,): self._one}
        key = (u, x)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        self._steps += 1
        if self._steps > self.max_steps:
            raise NonTerminationError(
                f"{self.name}: more than {self.max_steps} rewrite steps "
                f"(last pair {u[-1]}*{x}); rule set may not terminate")
        base = u[:-1]
        out: dict = {}
        for r, c in self.rules[(u[-1], x)]:
            part = {base: self._one}
            for letter in r:
                nxt: dict = {}
                for v, d in part.items():
                    for v2, d2 in self._insert(v, letter).items():
                        _acc(nxt, v2, d * d2)
                part = nxt
            for v, d in part.items():
                _acc(out, v, c * d)
        self._insert_cache[key] = out
        return out

    def _nf_word(self, word: tuple) -> dict:
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        if len(word) <= 1:
            out = {word: self._one}
        else:
            out = {}
            for u, c in self._nf_word(word[:-1]).items():
                for v, d in self._insert(u, word[-1]).items():
                    _acc(out, v, c * d)
        self._word_cache[word] = out
        return out

    def normal_form(self, x) -> NCElem:
        if not isinstance(x, NCElem):
            return self.scalar(x)
        coerce = self.model.coerce
        top = self._depth == 0
        if top:
            self._steps = 0
        self._depth += 1
        try:
            out: dict = {}
            for word, c in x.terms.items():
                for g in word:
                    self._check_gen(g)
                c = coerce(c)
                for v, d in self._nf_word(word).items():
                    _acc(out, v, c * d)
        except RecursionError as exc:
            raise NonTerminationError(f"{self.name}: rewriting recursion too deep") from exc
        finally:
            self._depth -= 1
        return NCElem(out)

    nf = normal_form

    def mul(self, *factors) -> NCElem:
        acc = self.one()
        for f in factors:
            acc = self.normal_form(acc * f)
        return acc

    def commutator(self, x, y) -> NCElem:
        return self.normal_form(x * y - y * x)

    def power(self, x, n: int) -> NCElem:
        acc = self.one()
        for _ in range(n):
            acc = self.normal_form(acc * x)
        return acc

    # -- derived presentations ---------------------------------------------

    def with_rules(self, updates: Mapping, remove: Iterable = (), name: str | None = None,
                   generators: Sequence | None = None, model: Model | None = None) -> "Presentation":
        rules = {k: NCElem(dict(v)) for k, v in self.rules.items()}
        for k in remove:
            rules.pop(tuple(k), None)
        for k, v in updates.items():
            rules[tuple(k)] = v
        return Presentation(generators or self.generators, rules, model or self.model,
                            name=name or self.name, max_steps=self.max_steps)

    def with_model(self, model: Model, name: str | None = None) -> "Presentation":
        return self.with_rules({}, model=model, name=name)

    def specialize(self, param: str, value, name: str | None = None,
                   model: Model | None = None) -> "Presentation":
        """Substitute a parameter value into every rule right side."""
        rules = {k: NCElem({w: subst_param(c, param, value) for w, c in v})
                 for k, v in self.rules.items()}
        return Presentation(self.generators, rules, model or self.model,
                            name=name or f"{self.name}|{param}={value}",
                            max_steps=self.max_steps)


def normal_form(x: NCElem, P: Presentation) -> NCElem:
    return P.normal_form(x)


def commutator(x: NCElem, y: NCElem, P: Presentation) -> NCElem:
    return P.commutator(x, y)


def local_confluence_check(P: Presentation, check_name: str | None = None) -> Report:
    """Resolve every overlap ``a*b*c`` whose two pairs are both reducible."""
    t0 = time.perf_counter()
    rep = Report(check_name or f"confluence[{P.name}]",
                 params={"algebra": P.name, "model": P.model.name,
                         **({"D": P.model.cap} if hasattr(P.model, "cap") else {})})
    firsts: dict = {}
    for a, b in P.rules:
        firsts.setdefault(a, []).append(b)
    n_overlaps = 0
    for (a, b) in sorted(P.rules, key=lambda k: (P.order[k[0]], P.order[k[1]])):
        for c in sorted(firsts.get(b, ()), key=P.order.get):
            n_overlaps += 1
            left = P.rule((a, b)) * P.gen(c)
            right = P.gen(a) * P.rule((b, c))
            diff = P.normal_form(left) - P.normal_form(right)
            if diff:
                rep.add_residual(f"{a}*{b}*{c}", P.format(diff))
    rep.note(f"{n_overlaps} overlaps examined")
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep


def _strip(word, g, side):
    if side == "right":
        return word[:-1] if word and word[-1] == g else None
    return word[1:] if word and word[0] == g else None


def adjoin_inverse(P: Presentation, g: str, inv_name: str | None = None) -> Presentation:
    """Localize at ``g``, which must be a normal element of ``P``.

    For each generator ``x`` the rule swapping ``g`` and ``x`` must read
    ``g*x -> x*g + (...)*g`` or ``x*g -> g*x + g*(...)``; the inverse then
    inherits the conjugated rule.  A central ``g`` is the zero-correction case.
    """
    P._check_gen(g)
    inv = inv_name or f"{g}inv"
    if inv in P.order:
        raise AlgebraError(f"{inv} already present")
    src = P.gensym(g)
    gens = []
    for s in P.generators:
        gens.append(s)
        if s.name == g:
            gens.append(GenSym(inv, inverse_of=g, central=src.central))
    one = P.one()
    G = NCElem.gen(g)
    I = NCElem.gen(inv)
    new_rules: dict = {(g, inv): one, (inv, g): one}
    for x in P.names:
        if x == g:
            continue
        X = NCElem.gen(x)
        if (g, x) in P.rules:
            corr = P.rule((g, x)) - X * G
            side, lhs = "right", (inv, x)
        elif (x, g) in P.rules:
            corr = P.rule((x, g)) - G * X
            side, lhs = "left", (x, inv)
        else:
            raise UnsupportedLocalizationError(
                f"{g} has no commutation rule with {x}; cannot localize")
        stripped = {}
        for word, c in corr.terms.items():
            u = _strip(word, g, side)
            if u is None:
                raise UnsupportedLocalizationError(
                    f"{g} is not a normal element: correction {P.format(corr)} "
                    f"of the {g}/{x} swap does not factor through {g}")
            stripped[u] = c
        U = NCElem(stripped)
        if side == "right":
            # g x = x g + U g  =>  ginv x = x ginv - ginv U
            new_rules[lhs] = X * I - I * U
        else:
            # x g = g x + g U  =>  x ginv = ginv x - U ginv
            new_rules[lhs] = I * X - U * I
    rules = {k: NCElem(dict(v)) for k, v in P.rules.items()}
    rules.update(new_rules)
    Q = Presentation(gens, rules, P.model, name=P.name, max_steps=P.max_steps)
    # store right sides in normal form
    normalized = {k: Q.normal_form(Q.rule(k)) for k in new_rules}
    return Q.with_rules(normalized)


def apply_hom(images: Mapping[str, NCElem], x: NCElem, source: Presentation | None,
              target: Presentation) -> NCElem:
    """Substitute generator images letterwise, then normal-form in ``target``."""
    cache: dict = {}
    out = target.zero()
    for word, c in x.terms.items():
        if source is not None:
            for g in word:
                source._check_gen(g)
        img = cache.get(word)
        if img is None:
            acc = target.one()
            for g in word:
                if g not in images:
                    raise IncompleteHomomorphismError(f"no image for generator {g!r}")
                acc = target.normal_form(acc * images[g])
            cache[word] = img = acc
        out = out + img * target.model.coerce(c)
    return target.normal_form(out)


def commuting_union(*parts: Presentation, name: str = "") -> Presentation:
    """Presentation whose generator blocks commute with each other."""
    gens, rules = [], {}
    model = parts[0].model
    for P in parts:
        if P.model != model:
            raise AlgebraError("all parts must share a coefficient model")
        gens.extend(P.generators)
        rules.update({k: NCElem(dict(v)) for k, v in P.rules.items()})
    for i, P in enumerate(parts):
        for Q in parts[:i]:
            for y in P.names:
                for x in Q.names:
                    rules[(y, x)] = NCElem({(x, y): 1})
    return Presentation(gens, rules, model, name=name or "*".join(p.name for p in parts),
                        max_steps=parts[0].max_steps)


def eliminate_central(P: Presentation, g: str, value, new_gens: Sequence = (),
                      name: str | None = None) -> Presentation:
    """Replace the central generator ``g`` by ``value``.

    ``value`` may mention generators listed in ``new_gens``; those take the
    place of ``g`` in the order and are central as well.
    """
    P._check_gen(g)
    for (x, y), rhs in P.rules.items():
        if g in (x, y) and dict(rhs) != {(y, x): P._one}:
            raise UnsupportedLocalizationError(f"{g} is not central: rule {x}*{y}")
    new_syms = [s if isinstance(s, GenSym) else GenSym(s, central=True) for s in new_gens]
    gens = []
    for s in P.generators:
        if s.name == g:
            gens.extend(new_syms)
        elif s.inverse_of == g:
            raise UnsupportedLocalizationError(f"{s.name} inverts {g}; eliminate it first")
        else:
            gens.append(s)
    value = NCElem._lift(value)
    rules: dict = {}
    for (x, y), rhs in P.rules.items():
        if g in (x, y):
            continue
        out = NCElem()
        for word, c in rhs:
            acc = NCElem.one()
            for letter in word:
                acc = acc * (value if letter == g else NCElem.gen(letter))
            out = out + acc * c
        rules[(x, y)] = out
    order = {s.name: i for i, s in enumerate(gens)}
    for s in new_syms:
        for x in order:
            if x == s.name:
                continue
            if order[x] > order[s.name]:
                rules[(x, s.name)] = NCElem.word((s.name, x))
            else:
                rules[(s.name, x)] = NCElem.word((x, s.name))
    Q = Presentation(gens, rules, P.model, name=name or f"{P.name}|{g}", max_steps=P.max_steps)
    return Q.with_rules({k: Q.normal_form(Q.rule(k)) for k in Q.rules})
