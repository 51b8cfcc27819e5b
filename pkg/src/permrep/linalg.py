"""Exact dense matrices over QQ, F_p and rational function fields.

Over QQ, elimination is fraction-free (Bareiss forward pass, content-reduced
back substitution); other fields use plain Gauss-Jordan with a
smallest-entry pivot to limit expression swell.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .exact import QQ, BaseField, MultiRational, RationalFunctionField


class SingularMatrixError(ValueError):
    pass


def field_of(x):
    if isinstance(x, MultiRational):
        return x.field
    if isinstance(x, (int, Fraction)):
        return QQ
    p = getattr(x, "mod", None)
    if p:
        return BaseField(p)
    raise TypeError(f"no exact field for {x!r}")


class Matrix:
    """Immutable r x c matrix; ``field`` supplies zero, one and conversion."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows, field=None, ncols=None):
        rows = [list(r) for r in rows]
        if field is None:
            field = next((field_of(x) for r in rows for x in r), QQ)
        self.field = field
        self.rows = tuple(tuple(field.convert(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Matrix":
        return cls([[field.one if i == j else field.zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, r: int, c: int, field=QQ) -> "Matrix":
        return cls([[field.zero] * c for _ in range(r)], field, ncols=c)

    @classmethod
    def from_columns(cls, cols, field=None, nrows=None) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            return cls([[] for _ in range(nrows or 0)], field or QQ)
        return cls([list(r) for r in zip(*cols)], field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)) if self.rows else [], self.field, ncols=self.nrows)

    T = property(transpose)

    def map(self, fn, field=None) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows], field or self.field, ncols=self.ncols)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        _check_same(self, other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field, self.ncols)

    def __sub__(self, other):
        _check_same(self, other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field, self.ncols)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            zero = self.field.zero
            out = []
            for r in self.rows:
                out.append([_dot(r, c, zero) for c in cols])
            return Matrix(out, self.field, ncols=other.ncols)
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, vec, self.field.zero) for r in self.rows)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: x * c)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def rank(self) -> int:
        return rank(self)

    def kernel(self):
        return kernel_basis(self)

    def inverse(self) -> "Matrix":
        return inverse(self)

    def det(self):
        return det(self)

    def to_json(self):
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, field) -> "Matrix":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([[_convert(field, x) for x in r] for r in data], field)

    def __repr__(self):
        return f"Matrix({self.to_json()!r})"


def _convert(field, x):
    if isinstance(x, str) and not isinstance(field, RationalFunctionField):
        return field.convert(Fraction(x))
    return field.convert(x)


def _dot(r, c, zero):
    acc = zero
    for a, b in zip(r, c):
        if a and b:
            acc = acc + a * b
    return acc


def _check_same(a, b):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def as_matrix(M) -> Matrix:
    return M if isinstance(M, Matrix) else Matrix(M)


# elimination over QQ ----------------------------------------------------------


def _integer_rows(M: Matrix):
    out = []
    for r in M.rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss_rank(rows, ncols):
    """Fraction-free forward elimination; returns rank."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            rows[i] = [(p * row_i[j] - a * row_r[j]) // prev if j > c else 0 for j in range(ncols)]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _ff_rref(rows, ncols):
    """Integer Gauss-Jordan with content removal; returns (rref Fractions, pivots)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        best = None
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (best is None or abs(v) < best):
                piv, best = i, abs(v)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(nrows):
            if i != r and rows[i][c]:
                a = rows[i][c]
                new = [p * x - a * y for x, y in zip(rows[i], prow)]
                g = 0
                for x in new:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                rows[i] = [x // g for x in new] if g > 1 else new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rref = []
    for i, c in enumerate(pivots):
        p = rows[i][c]
        rref.append([Fraction(x, p) for x in rows[i]])
    return rref, pivots


# generic elimination -------------------------------------------------------------


def _pivot_key(x):
    return x.size() if isinstance(x, MultiRational) else 0


def _generic_rref(rows, ncols, field):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, nrows) if rows[i][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: _pivot_key(rows[i][c]))
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv if x else x for x in rows[r]]
        rows[r][c] = field.one
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                a = rows[i][c]
                rows[i] = [x - a * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[: len(pivots)], pivots


def rref(M) -> tuple[list, list]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    M = as_matrix(M)
    if M.field.is_rational:
        return _ff_rref(_integer_rows(M), M.ncols)
    return _generic_rref(M.rows, M.ncols, M.field)


def rank(M) -> int:
    M = as_matrix(M)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.field.is_rational:
        rows = _integer_rows(M)
        if M.nrows > M.ncols:
            rows = [list(c) for c in zip(*rows)]
            return _bareiss_rank(rows, M.nrows)
        return _bareiss_rank(rows, M.ncols)
    return len(rref(M)[1])


def kernel_basis(M) -> list[tuple]:
    """Basis of {v : M v = 0}; each vector is scaled so its first nonzero entry is 1."""
    M = as_matrix(M)
    field = M.field
    rows, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        v = [field.zero] * M.ncols
        v[f] = field.one
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -field.convert(row[f]) if field.is_rational else -row[f]
        lead = next(x for x in v if x)
        if lead != field.one:
            inv = field.one / lead
            v = [x * inv for x in v]
        basis.append(tuple(v))
    return basis


def solve(M, b):
    """A solution x of M x = b, or ``None`` when the system is inconsistent."""
    M = as_matrix(M)
    b = list(b)
    if len(b) != M.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.nrows} rows")
    field = M.field
    aug = Matrix([list(r) + [field.convert(x)] for r, x in zip(M.rows, b)], field, ncols=M.ncols + 1)
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [field.zero] * M.ncols
    for row, p in zip(rows, pivots):
        x[p] = field.convert(row[-1]) if field.is_rational else row[-1]
    return tuple(x)


def inverse(M) -> Matrix:
    M = as_matrix(M)
    n = M.nrows
    if n != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    field = M.field
    aug = Matrix(
        [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(M.rows)],
        field,
        ncols=2 * n,
    )
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return Matrix([row[n:] for row in rows[:n]], field, ncols=n)


def det(M):
    M = as_matrix(M)
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    field = M.field
    rows = [list(r) for r in M.rows]
    result = field.one
    for c in range(n):
        cands = [i for i in range(c, n) if rows[i][c]]
        if not cands:
            return field.zero
        piv = min(cands, key=lambda i: _pivot_key(rows[i][c]))
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        p = rows[c][c]
        result = result * p
        inv = field.one / p
        for i in range(c + 1, n):
            if rows[i][c]:
                a = rows[i][c] * inv
                rows[i] = [x - a * y for x, y in zip(rows[i], rows[c])]
    return result


def specialize(M: Matrix, point: Sequence) -> Matrix:
    """Evaluate a function-field matrix at a scalar point (raises PoleError at poles)."""
    base = M.field.base
    out = []
    for r in M.rows:
        row = []
        for x in r:
            v = x.compose(list(point))
            row.append(v.constant_value())
        out.append(row)
    return Matrix(out, base, ncols=M.ncols)
