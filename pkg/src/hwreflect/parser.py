"""Expression language for the command line.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := power ('(x)' power)*      (at most three legs)
    power  := atom ('^' uint)*
    atom   := number | name | '[' expr ',' expr ']' | '(' expr ')'

Numbers are integers or ``p/q``; names are generators, the parameters
``h`` and ``w``, or named elements of the chosen algebra (``C``, ``C1``, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ncalg import NCElem, Presentation
from .tensorspace import BRAIDED, PLAIN, TensorAlgebra, TensorElem

MAX_RANK = 3


class ParseError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int = 0):
        self.line = text.count("\n", 0, pos) + 1
        self.col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.msg = msg
        super().__init__(f"line {self.line}, column {self.col}: {msg}")


# -- AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Param:
    name: str


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, node), ...)


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class Tensor:
    legs: tuple


# -- tokens ----------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<tensor>\(x\))
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^,()\[\]])
""", re.VERBOSE)


def tokenize(text: str) -> list:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            val = m.group()
            out.append((kind if kind != "op" else val, val, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, names: dict):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.names = names  # name -> node factory

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        node = self.power()
        while self.peek()[0] == "tensor":
            pos = self.take()[2]
            legs = (node.legs if isinstance(node, Tensor) else (node,)) + (self.power(),)
            if len(legs) > MAX_RANK:
                raise ParseError(f"tensor rank {len(legs)} exceeds {MAX_RANK}", self.text, pos)
            node = Tensor(legs)
        return node

    def power(self):
        node = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            if "/" in tok[1]:
                raise ParseError("exponent must be a nonnegative integer", self.text, tok[2])
            node = Power(node, int(tok[1]))
        return node

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Num(Fraction(val))
        if kind == "name":
            self.take()
            make = self.names.get(val)
            if make is None:
                raise ParseError(f"unknown generator {val!r}", self.text, pos)
            return make(val)
        if kind == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "[":
            self.take()
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Commutator(left, right)
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)


def name_table(P: Presentation, named=()) -> dict:
    table = {g: Gen for g in P.names}
    for n in named:
        table.setdefault(n, Named)
    table["h"] = table["w"] = Param
    return table


def parse_expr(text: str, P: Presentation, named=()) -> object:
    """Parse ``text`` against the generators of ``P`` (plus ``named`` elements)."""
    p = _Parser(text, name_table(P, named))
    node = p.expr()
    p.take("end")
    return node


# -- printing --------------------------------------------------------------------

def _wrap(node, parent) -> str:
    s = to_text(node)
    if isinstance(node, Sum) or (isinstance(node, Num) and node.value.denominator != 1
                                 and parent is Power):
        return f"({s})"
    if parent is Power and isinstance(node, (Product, Power, Tensor)):
        return f"({s})"
    if parent is Tensor and isinstance(node, (Product, Tensor)):
        return f"({s})"
    if parent is Product and isinstance(node, (Product, Tensor)):
        return f"({s})"
    return s


def to_text(node) -> str:
    """Inverse of :func:`parse_expr` up to whitespace."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, (Param, Gen, Named)):
        return node.name
    if isinstance(node, Sum):
        parts = []
        for k, (sign, t) in enumerate(node.terms):
            s = _wrap(t, Sum)
            if k == 0:
                parts.append(f"-{s}" if sign < 0 else s)
            else:
                parts.append(f"{'-' if sign < 0 else '+'} {s}")
        return " ".join(parts)
    if isinstance(node, Product):
        return "*".join(_wrap(f, Product) for f in node.factors)
    if isinstance(node, Power):
        return f"{_wrap(node.base, Power)}^{node.exp}"
    if isinstance(node, Commutator):
        return f"[{to_text(node.left)}, {to_text(node.right)}]"
    if isinstance(node, Tensor):
        return " (x) ".join(_wrap(l, Tensor) for l in node.legs)
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------------

class Evaluator:
    """Turn an AST into an ``NCElem`` or ``TensorElem`` over ``P``."""

    def __init__(self, P: Presentation, named: dict | None = None, braid=None):
        self.P = P
        self.named = named or {}
        self.braid = braid
        self._tensor: dict = {}

    def tensor_algebra(self, rank: int) -> TensorAlgebra:
        if rank not in self._tensor:
            braided = self.braid is not None and rank == 2
            self._tensor[rank] = TensorAlgebra(self.P, rank, BRAIDED if braided else PLAIN,
                                               self.braid if braided else None)
        return self._tensor[rank]

    def _scalar_of(self, x: NCElem):
        if set(x.terms) <= {()}:
            return x.terms.get((), 0)
        return None

    def _lift(self, x, rank: int) -> TensorElem:
        if isinstance(x, TensorElem):
            if x.rank != rank:
                raise ValueError(f"cannot combine tensors of rank {x.rank} and {rank}")
            return x
        c = self._scalar_of(x)
        if c is None:
            raise ValueError("an algebra element can only multiply or add to a tensor "
                             "as a scalar; place it on a leg with (x)")
        return self.tensor_algebra(rank).scalar(c) if c else TensorElem(rank)

    def _add(self, x, y):
        if isinstance(x, TensorElem) or isinstance(y, TensorElem):
            rank = x.rank if isinstance(x, TensorElem) else y.rank
            return self._lift(x, rank) + self._lift(y, rank)
        return x + y

    def _mul(self, x, y):
        if isinstance(x, TensorElem) or isinstance(y, TensorElem):
            rank = x.rank if isinstance(x, TensorElem) else y.rank
            return self.tensor_algebra(rank).mul(self._lift(x, rank), self._lift(y, rank))
        return self.P.normal_form(x * y)

    def __call__(self, node):
        P = self.P
        if isinstance(node, Num):
            return P.scalar(node.value)
        if isinstance(node, Param):
            return P.one() * (P.h if node.name == "h" else P.w)
        if isinstance(node, Gen):
            return P.gen(node.name)
        if isinstance(node, Named):
            return self.named[node.name]
        if isinstance(node, Sum):
            out = P.zero()
            for sign, t in node.terms:
                v = self(t)
                out = self._add(out, -v if sign < 0 else v)
            return out
        if isinstance(node, Product):
            out = self(node.factors[0])
            for f in node.factors[1:]:
                out = self._mul(out, self(f))
            return out
        if isinstance(node, Power):
            base = self(node.base)
            out = P.one()
            for _ in range(node.exp):
                out = self._mul(out, base)
            if isinstance(base, TensorElem) and node.exp == 0:
                return self.tensor_algebra(base.rank).one()
            return out
        if isinstance(node, Commutator):
            a, b = self(node.left), self(node.right)
            return self._add(self._mul(a, b), -self._mul(b, a))
        if isinstance(node, Tensor):
            legs = [self(l) for l in node.legs]
            if any(isinstance(l, TensorElem) for l in legs):
                raise ValueError("tensor legs must be algebra elements")
            return self.tensor_algebra(len(legs)).pure(*legs)
        raise TypeError(f"not an expression node: {node!r}")


def reduce_text(text: str, P: Presentation, named: dict | None = None, braid=None) -> str:
    """Parse, evaluate and print the normal form of ``text``."""
    named = named or {}
    node = parse_expr(text, P, named)
    value = Evaluator(P, named, braid)(node)
    if isinstance(value, TensorElem):
        return value.format(P.order) if value else "0"
    return P.format(P.normal_form(value))


__all__ = [
    "Commutator",
    "Evaluator",
    "Gen",
    "Named",
    "Num",
    "Param",
    "ParseError",
    "Power",
    "Product",
    "Sum",
    "Tensor",
    "parse_expr",
    "reduce_text",
    "to_text",
    "tokenize",
]
