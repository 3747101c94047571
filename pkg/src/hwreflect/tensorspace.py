"""Rank-2 and rank-3 tensor products of a presented algebra.

Plain mode multiplies leg by leg.  Braided mode (rank 2 only) uses a
:class:`BraidTable` for the exchange ``(a x b)(c x d) = a psi(b x c) d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .coeffring import PolyHW, RatHW, TruncSeriesHW, _is_scalar
from .ncalg import AlgebraError, NCElem, Presentation, _acc, _word_str, format_elem

PLAIN = "plain"
BRAIDED = "braided"


class TensorError(AlgebraError):
    pass


class TensorElem:
    """Linear combination of tuples of words (one word per leg)."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping | None = None):
        if rank not in (1, 2, 3):
            raise TensorError(f"unsupported tensor rank {rank}")
        self.rank = rank
        self.terms = {}
        for k, v in (terms or {}).items():
            if not v:
                continue
            if len(k) != rank:
                raise TensorError(f"term {k} does not have {rank} legs")
            self.terms[tuple(tuple(w) for w in k)] = v

    @classmethod
    def pure(cls, *legs: NCElem) -> "TensorElem":
        """``legs[0] (x) legs[1] (x) ...`` expanded over words."""
        terms = {(): 1}
        for leg in legs:
            nxt: dict = {}
            for key, c in terms.items():
                for w, d in leg.terms.items():
                    _acc(nxt, key + (w,), c * d)
            terms = nxt
        return cls(len(legs), terms)

    def _check(self, other):
        if isinstance(other, TensorElem):
            if other.rank != self.rank:
                raise TensorError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            _acc(out, k, v)
        return TensorElem(self.rank, out)

    def __neg__(self):
        return TensorElem(self.rank, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, c):
        if _is_scalar(c) or isinstance(c, (PolyHW, TruncSeriesHW, RatHW)):
            return TensorElem(self.rank, {k: v * c for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        if self.rank != other.rank or self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, *legs):
        return self.terms.get(tuple(tuple(w) for w in legs), 0)

    def leg_elems(self):
        """Yield ``(coefficient, [NCElem per leg])`` for each term."""
        for k, c in self.terms.items():
            yield c, [NCElem({w: 1}) for w in k]

    def format(self, order: Mapping[str, int] | None = None) -> str:
        return format_tensor(self, order)

    def __str__(self):
        return format_tensor(self)

    def __repr__(self):
        return f"TensorElem({self})"


def _leg_str(w) -> str:
    s = _word_str(w) or "1"
    return f"({s})" if "*" in s else s


def format_tensor(t: TensorElem, order: Mapping[str, int] | None = None) -> str:
    """Render as a sum of ``coeff*(leg) (x) (leg)`` terms in a deterministic order.

    Legs that are products are parenthesized so the text parses back with
    ``(x)`` binding tighter than ``*``.
    """
    if not t.terms:
        return "0"
    if order is None:
        letters = sorted({g for k in t.terms for w in k for g in w})
        order = {g: i for i, g in enumerate(letters)}

    def key(k):
        return tuple((-len(w), tuple(-order[g] for g in w)) for w in k)

    out = []
    for k in sorted(t.terms, key=key):
        coeff = format_elem(NCElem({(): t.terms[k]}))
        legs = " (x) ".join(_leg_str(w) for w in k)
        if coeff == "1":
            body = legs
        elif coeff == "-1":
            body = "-" + legs
        else:
            body = f"({coeff})*{legs}"
        out.append(body)
    return " + ".join(out)


def tensor(*legs: NCElem) -> TensorElem:
    return TensorElem.pure(*legs)


def contract(t: TensorElem, P: Presentation) -> NCElem:
    """Multiplication map ``m``: concatenate the legs and normal-form."""
    out: dict = {}
    for k, c in t.terms.items():
        word = tuple(g for w in k for g in w)
        for v, d in P._nf_word(word).items():
            _acc(out, v, c * d)
    return NCElem(out)


class BraidTable:
    """Braiding ``psi`` on generator pairs, extended multiplicatively to words.

    An adjoined inverse ``ginv`` braids by plain transposition; this is only
    permitted when ``g`` itself braids trivially with every generator.
    """

    def __init__(self, P: Presentation, psi: Mapping):
        self.P = P
        self.psi = {}
        for (x, y), t in psi.items():
            P._check_gen(x)
            P._check_gen(y)
            t = TensorElem(2, {k: P.model.coerce(v) for k, v in t.terms.items()})
            self.psi[(x, y)] = t
        self._cache: dict = {}
        self._transparent = {g for g in P.names if self._is_transparent(g)}

    def _is_transparent(self, g: str) -> bool:
        for x in self.P.names:
            if self.P.gensym(x).inverse_of is not None:
                continue
            if (g, x) not in self.psi or (x, g) not in self.psi:
                return False
            if self.psi[(g, x)] != TensorElem(2, {((x,), (g,)): 1}):
                return False
            if self.psi[(x, g)] != TensorElem(2, {((g,), (x,)): 1}):
                return False
        return True

    def _swap_ok(self, letter: str) -> bool:
        sym = self.P.gensym(letter)
        return sym.inverse_of is not None and sym.inverse_of in self._transparent

    def _letter_pair(self, x: str, y: str) -> dict:
        t = self.psi.get((x, y))
        if t is not None:
            return t.terms
        if self._swap_ok(x) or self._swap_ok(y):
            return {((y,), (x,)): self.P._one}
        raise TensorError(f"no braiding defined for {x} (x) {y}")

    def words(self, u: tuple, v: tuple) -> dict:
        """``psi(u (x) v)`` for words ``u``, ``v`` as a term map of normal legs."""
        key = (u, v)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        P = self.P
        one = P._one
        out: dict = {}
        if not u or not v:
            for a, ca in P._nf_word(v).items():
                for b, cb in P._nf_word(u).items():
                    _acc(out, (a, b), ca * cb)
        elif len(u) == 1 and len(v) == 1:
            out = dict(self._letter_pair(u[0], v[0]))
        elif len(u) > 1:
            # psi(a b (x) c) = c'' (x) a' b'  with psi(b (x) c) = c' (x) b', psi(a (x) c') = c'' (x) a'
            head, last = u[:-1], u[-1:]
            for (c1, b1), k1 in self.words(last, v).items():
                for (c2, a1), k2 in self.words(head, c1).items():
                    for ab, k3 in P._nf_word(a1 + b1).items():
                        _acc(out, (c2, ab), k1 * k2 * k3)
        else:
            # psi(a (x) b c) = b' c' (x) a''  with psi(a (x) b) = b' (x) a', psi(a' (x) c) = c' (x) a''
            first, rest = v[:1], v[1:]
            for (b1, a1), k1 in self.words(u, first).items():
                for (c1, a2), k2 in self.words(a1, rest).items():
                    for bc, k3 in P._nf_word(b1 + c1).items():
                        _acc(out, (bc, a2), k1 * k2 * k3)
        self._cache[key] = out
        return out


def braid_psi(x: TensorElem, bt: BraidTable) -> TensorElem:
    if x.rank != 2:
        raise TensorError("psi acts on rank-2 tensors")
    out: dict = {}
    for (u, v), c in x.terms.items():
        for k, d in bt.words(u, v).items():
            _acc(out, k, c * d)
    return TensorElem(2, out)


class TensorAlgebra:
    """Algebra context for tensors over one presentation."""

    def __init__(self, P: Presentation, rank: int = 2, mode: str = PLAIN,
                 braid: BraidTable | None = None):
        if mode not in (PLAIN, BRAIDED):
            raise TensorError(f"unknown mode {mode!r}")
        if mode == BRAIDED:
            if braid is None:
                raise TensorError("braided multiplication needs a braid table")
            if rank != 2:
                raise TensorError("braided mode is only defined for rank 2")
        self.P = P
        self.rank = rank
        self.mode = mode
        self.braid = braid
        self._one = P.model.one()
        self._pair_cache: dict = {}

    def zero(self) -> TensorElem:
        return TensorElem(self.rank)

    def one(self) -> TensorElem:
        return TensorElem(self.rank, {((),) * self.rank: self._one})

    def scalar(self, c) -> TensorElem:
        return TensorElem(self.rank, {((),) * self.rank: self.P.model.coerce(c)})

    def embed(self, x: NCElem, leg: int) -> TensorElem:
        """``1 (x) ... x ... (x) 1`` with ``x`` in position ``leg`` (0-based)."""
        terms = {}
        for w, c in self.P.normal_form(x).terms.items():
            key = [()] * self.rank
            key[leg] = w
            terms[tuple(key)] = c
        return TensorElem(self.rank, terms)

    def pure(self, *legs: NCElem) -> TensorElem:
        return self.normalize(TensorElem.pure(*legs))

    def normalize(self, t: TensorElem) -> TensorElem:
        P = self.P
        coerce = P.model.coerce
        out: dict = {}
        for key, c in t.terms.items():
            parts = {(): coerce(c)}
            for w in key:
                nxt: dict = {}
                for k, d in parts.items():
                    for v, e in P._nf_word(w).items():
                        _acc(nxt, k + (v,), d * e)
                parts = nxt
            for k, d in parts.items():
                _acc(out, k, d)
        return TensorElem(self.rank, out)

    def _mul_keys(self, k1: tuple, k2: tuple) -> dict:
        key = (k1, k2)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        P = self.P
        if self.mode == PLAIN:
            parts = {(): self._one}
            for a, b in zip(k1, k2):
                nxt: dict = {}
                for k, d in parts.items():
                    for v, e in P._nf_word(a + b).items():
                        _acc(nxt, k + (v,), d * e)
                parts = nxt
            out = parts
        else:
            (a, b), (c, d) = k1, k2
            out = {}
            for (c1, b1), k in self.braid.words(b, c).items():
                for left, e1 in P._nf_word(a + c1).items():
                    for right, e2 in P._nf_word(b1 + d).items():
                        _acc(out, (left, right), k * e1 * e2)
        self._pair_cache[key] = out
        return out

    def mul(self, x: TensorElem, y: TensorElem) -> TensorElem:
        if x.rank != self.rank or y.rank != self.rank:
            raise TensorError(f"rank mismatch: expected {self.rank}")
        out: dict = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                c = c1 * c2
                if not c:
                    continue
                for k, d in self._mul_keys(k1, k2).items():
                    _acc(out, k, c * d)
        return TensorElem(self.rank, out)

    def add(self, x, y):
        return x + y

    def format(self, t: TensorElem) -> str:
        return format_tensor(t, self.P.order)


def tensor_mul(x: TensorElem, y: TensorElem, algebra: TensorAlgebra) -> TensorElem:
    return algebra.mul(x, y)


@dataclass
class HopfData:
    """Coproduct, counit and antipode on generators."""

    coproduct: dict
    counit: dict
    antipode: dict
    _delta_cache: dict = field(default_factory=dict, repr=False)


def coproduct_apply(x: NCElem, hd: HopfData, algebra: TensorAlgebra) -> TensorElem:
    """Extend the coproduct multiplicatively over the words of ``x``."""
    if algebra.rank != 2:
        raise TensorError("coproduct lands in rank-2 tensors")
    cache = hd._delta_cache.setdefault((id(algebra), algebra.mode), {})
    out = algebra.zero()
    coerce = algebra.P.model.coerce
    for word, c in x.terms.items():
        img = cache.get(word)
        if img is None:
            acc = algebra.one()
            for g in word:
                if g not in hd.coproduct:
                    raise TensorError(f"no coproduct for generator {g!r}")
                acc = algebra.mul(acc, hd.coproduct[g])
            cache[word] = img = acc
        out = out + img * coerce(c)
    return out


def counit_apply(x: NCElem, hd: HopfData, P: Presentation):
    """Counit extended multiplicatively; returns a coefficient."""
    total = P.model.zero()
    for word, c in x.terms.items():
        v = P.model.coerce(c)
        for g in word:
            v = v * P.model.coerce(hd.counit[g])
        total = total + v
    return total


def antipode_apply(x: NCElem, hd: HopfData, P: Presentation) -> NCElem:
    """Plain antipode, extended as an anti-homomorphism."""
    cache: dict = {}
    out = P.zero()
    for word, c in x.terms.items():
        img = cache.get(word)
        if img is None:
            acc = P.one()
            for g in reversed(word):
                acc = P.normal_form(acc * hd.antipode[g])
            cache[word] = img = acc
        out = out + img * P.model.coerce(c)
    return out


def braided_antipode(x: NCElem, hd: HopfData, bt: BraidTable) -> NCElem:
    """Braided antipode: ``S(G1 G2) = m psi(S(G1) (x) S(G2))``, nested from the left."""
    P = bt.P
    cache = hd._delta_cache.setdefault(("S~", id(bt)), {})

    def of_word(word: tuple) -> NCElem:
        hit = cache.get(word)
        if hit is not None:
            return hit
        if not word:
            res = P.one()
        elif len(word) == 1:
            res = P.normal_form(hd.antipode[word[0]])
        else:
            res = braided_product(of_word(word[:-1]), of_word(word[-1:]), bt)
        cache[word] = res
        return res

    out = P.zero()
    for word, c in x.terms.items():
        out = out + of_word(word) * P.model.coerce(c)
    return out


def braided_product(x: NCElem, y: NCElem, bt: BraidTable) -> NCElem:
    """``m psi(x (x) y)``."""
    return contract(braid_psi(TensorElem.pure(x, y), bt), bt.P)


def split_leg(t: TensorElem, leg: int, image) -> TensorElem:
    """Replace leg ``leg`` of every term by the rank-2 tensor ``image(word)``.

    No multiplication across legs happens, so the result is exact for any
    coproduct, braided or not.
    """
    if t.rank >= 3:
        raise TensorError("rank-4 tensors are not supported")
    out: dict = {}
    for key, c in t.terms.items():
        img = image(key[leg])
        for (a, b), d in img.terms.items():
            _acc(out, key[:leg] + (a, b) + key[leg + 1:], c * d)
    return TensorElem(t.rank + 1, out)
