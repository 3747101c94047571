"""Dense matrices with noncommutative entries.

An :class:`NCMat` carries an *algebra context* that knows how to add and
multiply its entries: a :class:`~hwreflect.ncalg.Presentation` for
:class:`~hwreflect.ncalg.NCElem` entries, a
:class:`~hwreflect.tensorspace.TensorAlgebra` for tensor entries, or a
:class:`ScalarAlgebra` for plain coefficients.

Multi-leg indices are flattened row-major: on two legs of dimension 3 the
pair ``(i, j)`` (1-based) sits at position ``3*(i-1) + j``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .coeffring import Model
from .ncalg import AlgebraError, NCElem, Presentation
from .tensorspace import TensorAlgebra, TensorElem


class MatrixError(AlgebraError):
    pass


class NotUnitriangularError(MatrixError):
    pass


class ScalarAlgebra:
    """Entries are coefficients of ``model`` themselves."""

    def __init__(self, model: Model):
        self.model = model

    def zero(self):
        return self.model.zero()

    def one(self):
        return self.model.one()

    def scalar(self, c):
        return self.model.coerce(c)

    def mul(self, x, y):
        return x * y

    def format(self, x) -> str:
        return str(x)


def _algebra_ops(A):
    if isinstance(A, Presentation):
        return A.zero, A.scalar, (lambda x, y: A.normal_form(x * y)), A.format
    if isinstance(A, (TensorAlgebra, ScalarAlgebra)):
        return A.zero, A.scalar, A.mul, A.format
    raise MatrixError(f"unsupported algebra context {A!r}")


class NCMat:
    def __init__(self, entries: Sequence[Sequence], algebra):
        rows = [list(r) for r in entries]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise MatrixError("matrix must be rectangular and nonempty")
        self.algebra = algebra
        self._zero, self._scalar, self._mul, self._fmt = _algebra_ops(algebra)
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = [[self._coerce(x) for x in r] for r in rows]

    def _coerce(self, x):
        if isinstance(x, (NCElem, TensorElem)):
            return x
        if isinstance(self.algebra, ScalarAlgebra):
            return self.algebra.scalar(x)
        if not x:
            return self._zero()
        return self._scalar(x)

    @classmethod
    def identity(cls, n: int, algebra) -> "NCMat":
        zero, scalar, _, _ = _algebra_ops(algebra)
        return cls([[scalar(1) if i == j else zero() for j in range(n)] for i in range(n)], algebra)

    @classmethod
    def zeros(cls, rows: int, cols: int, algebra) -> "NCMat":
        zero = _algebra_ops(algebra)[0]
        return cls([[zero() for _ in range(cols)] for _ in range(rows)], algebra)

    def lift(self, algebra) -> "NCMat":
        """Reinterpret a coefficient matrix inside another algebra."""
        return NCMat([[x for x in r] for r in self.entries], algebra)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry(self, i: int, j: int):
        """1-based accessor matching the usual matrix-unit notation."""
        return self.entries[i - 1][j - 1]

    def _same_shape(self, other: "NCMat"):
        if self.shape != other.shape:
            raise MatrixError(f"shape mismatch {self.shape} vs {other.shape}")
        if self.algebra is not other.algebra:
            raise MatrixError("matrices live over different algebras")

    def __add__(self, other: "NCMat") -> "NCMat":
        self._same_shape(other)
        return NCMat([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                     self.algebra)

    def __sub__(self, other: "NCMat") -> "NCMat":
        self._same_shape(other)
        return NCMat([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                     self.algebra)

    def __neg__(self) -> "NCMat":
        return NCMat([[-a for a in r] for r in self.entries], self.algebra)

    def scale(self, c) -> "NCMat":
        return NCMat([[a * c for a in r] for r in self.entries], self.algebra)

    def __matmul__(self, other: "NCMat") -> "NCMat":
        return mat_mul(self, other)

    def map(self, f: Callable, algebra=None) -> "NCMat":
        return NCMat([[f(a) for a in r] for r in self.entries], algebra or self.algebra)

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def nonzero_entries(self):
        """Yield ``((i, j), entry)`` with 1-based indices for nonzero entries."""
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if a:
                    yield (i + 1, j + 1), a

    def __eq__(self, other):
        if not isinstance(other, NCMat):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    __hash__ = None

    def format_entry(self, i: int, j: int) -> str:
        return self._fmt(self.entries[i - 1][j - 1])

    def __str__(self):
        return "\n".join("[" + ", ".join(self._fmt(a) for a in r) + "]" for r in self.entries)

    def __repr__(self):
        return f"NCMat({self.rows}x{self.cols})"


def mat_mul(A: NCMat, B: NCMat) -> NCMat:
    """Matrix product; entry products keep left-to-right order."""
    if A.cols != B.rows:
        raise MatrixError(f"inner dimensions differ: {A.shape} @ {B.shape}")
    if A.algebra is not B.algebra:
        raise MatrixError("matrices live over different algebras")
    mul = A._mul
    zero = A._zero
    out = []
    bcols = [[B.entries[k][j] for k in range(B.rows)] for j in range(B.cols)]
    for i in range(A.rows):
        row = A.entries[i]
        nz = [(k, a) for k, a in enumerate(row) if a]
        out_row = []
        for j in range(B.cols):
            col = bcols[j]
            acc = None
            for k, a in nz:
                b = col[k]
                if not b:
                    continue
                p = mul(a, b)
                acc = p if acc is None else acc + p
            out_row.append(zero() if acc is None else acc)
        out.append(out_row)
    return NCMat(out, A.algebra)


def chain(*mats: NCMat) -> NCMat:
    acc = mats[0]
    for m in mats[1:]:
        acc = mat_mul(acc, m)
    return acc


def unitriangular_inverse(M: NCMat) -> NCMat:
    """Inverse of ``I + Nil`` with ``Nil`` nilpotent, as ``I - Nil + Nil^2 - ...``."""
    if M.rows != M.cols:
        raise MatrixError("only square matrices can be inverted")
    I = NCMat.identity(M.rows, M.algebra)
    nil = M - I
    acc = I
    power = I
    for k in range(1, M.rows + 1):
        power = mat_mul(power, nil)
        if power.is_zero():
            return acc
        acc = acc - power if k % 2 else acc + power
    raise NotUnitriangularError(
        f"M - I is not nilpotent after {M.rows} powers")


def _placement(placement) -> tuple:
    if isinstance(placement, str):
        return tuple(int(ch) - 1 for ch in placement)
    if isinstance(placement, int):
        return (placement,)
    return tuple(placement)


def leg_embed(M: NCMat, placement, legs: int, dim: int = 3) -> NCMat:
    """Place ``M`` on the legs in ``placement`` (``"12"``, ``"13"``, ``"23"``,
    or 0-based indices), identity on the others."""
    pos = _placement(placement)
    k = len(pos)
    if M.rows != dim ** k or M.cols != dim ** k:
        raise MatrixError(f"expected a {dim ** k}x{dim ** k} matrix for {k} legs")
    if len(set(pos)) != k or any(p < 0 or p >= legs for p in pos):
        raise MatrixError(f"bad placement {placement!r} for {legs} legs")
    n = dim ** legs
    idx = list(itertools.product(range(dim), repeat=legs))
    rest = [p for p in range(legs) if p not in pos]
    zero = M._zero

    def sub(t):
        v = 0
        for p in pos:
            v = v * dim + t[p]
        return v

    grid = [[None] * n for _ in range(n)]
    for r, I in enumerate(idx):
        for c, J in enumerate(idx):
            if all(I[p] == J[p] for p in rest):
                grid[r][c] = M.entries[sub(I)][sub(J)]
            else:
                grid[r][c] = zero()
    return NCMat(grid, M.algebra)


def permute_conj(M: NCMat, dim: int = 3) -> NCMat:
    """``P M P`` for the flip ``P`` of two legs of dimension ``dim``."""
    if M.rows != dim * dim or M.cols != dim * dim:
        raise MatrixError(f"expected a {dim * dim}x{dim * dim} matrix")

    def flip(x):
        return (x % dim) * dim + x // dim

    return NCMat([[M.entries[flip(r)][flip(c)] for c in range(M.cols)] for r in range(M.rows)],
                 M.algebra)


def matrix_unit(i: int, j: int, algebra, dim: int = 3) -> NCMat:
    """``e_ij`` with 1-based indices."""
    zero, scalar, _, _ = _algebra_ops(algebra)
    return NCMat([[scalar(1) if (r, c) == (i - 1, j - 1) else zero() for c in range(dim)]
                  for r in range(dim)], algebra)


def kron(A: NCMat, B: NCMat) -> NCMat:
    """Kronecker product of two coefficient matrices over a commutative algebra."""
    if A.algebra is not B.algebra:
        raise MatrixError("matrices live over different algebras")
    mul = A._mul
    zero = A._zero
    grid = []
    for i in range(A.rows):
        for k in range(B.rows):
            row = []
            for j in range(A.cols):
                for l in range(B.cols):
                    a, b = A.entries[i][j], B.entries[k][l]
                    row.append(mul(a, b) if a and b else zero())
            grid.append(row)
    return NCMat(grid, A.algebra)
