"""Multivariate rational functions in canonical reduced form.

Numerator and denominator are sparse sympy polynomials in a ring with
graded-lexicographic order.  Canonical form: ``gcd(num, den) == 1`` and the
grlex-leading coefficient of ``den`` is 1, so equal values have identical
representations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from .fields import QQ, BaseField


class PoleError(ZeroDivisionError):
    """A substitution makes a denominator vanish."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class RationalFunctionField:
    """k(v1, ..., vn) for a fixed, ordered list of variable names."""

    def __init__(self, names: Sequence[str], base: BaseField = QQ):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",") if s.strip()]
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.base = base
        self.ring = PolyRing(self.names, base.domain, grlex)
        self._index = {name: i for i, name in enumerate(self.names)}

    @classmethod
    def standard(cls, n: int, base: BaseField = QQ, prefix: str = "x") -> "RationalFunctionField":
        return cls([f"{prefix}{i}" for i in range(1, n + 1)], base)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and self.names == other.names and self.base == other.base

    def __hash__(self):
        return hash((self.names, self.base))

    def __repr__(self):
        return f"RationalFunctionField({list(self.names)!r}, {self.base})"

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def is_rational(self) -> bool:
        # the linear-algebra layer uses this to pick fraction-free elimination
        return False

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}; field has {', '.join(self.names)}") from None

    @cached_property
    def zero(self) -> "MultiRational":
        return MultiRational._raw(self, self.ring.zero, self.ring.one)

    @cached_property
    def one(self) -> "MultiRational":
        return MultiRational._raw(self, self.ring.one, self.ring.one)

    def var(self, name_or_index) -> "MultiRational":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return MultiRational._raw(self, self.ring.gens[i], self.ring.one)

    @property
    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def convert(self, x) -> "MultiRational":
        if isinstance(x, MultiRational):
            if x.field != self:
                raise ValueError(f"element of {x.field!r} used in {self!r}")
            return x
        if isinstance(x, str):
            from .parse import parse_expr

            return parse_expr(x, self)
        if isinstance(x, Fraction):
            return MultiRational._raw(
                self,
                self.ring.ground_new(self.base.domain.convert(x.numerator) / self.base.domain.convert(x.denominator)),
                self.ring.one,
            )
        if isinstance(x, int):
            return MultiRational._raw(self, self.ring.ground_new(x), self.ring.one)
        if getattr(x, "mod", None) == self.base.p and self.base.p:
            return MultiRational._raw(self, self.ring.ground_new(int(x)), self.ring.one)
        raise TypeError(f"cannot convert {x!r} into {self!r}")

    __call__ = convert

    def from_polys(self, num, den=None) -> "MultiRational":
        den = self.ring.one if den is None else den
        return MultiRational(self, num, den)

    def monomials(self, max_degree: int):
        """Monomials of total degree <= max_degree in graded-lex order (ascending degree)."""
        from itertools import combinations_with_replacement

        out = []
        for d in range(max_degree + 1):
            block = []
            for combo in combinations_with_replacement(range(self.nvars), d):
                exp = [0] * self.nvars
                for i in combo:
                    exp[i] += 1
                block.append(tuple(exp))
            block.sort(reverse=True)  # lex-descending inside a degree: x1 before x2
            for exp in block:
                out.append(MultiRational._raw(self, self.ring({exp: 1}), self.ring.one))
        return out


class MultiRational:
    """Immutable element of a :class:`RationalFunctionField`."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: RationalFunctionField, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.field = field
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, field, num, den):
        obj = cls.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiRational):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixed fields in rational-function arithmetic")
            return other
        try:
            return self.field.convert(other)
        except TypeError:
            return NotImplemented

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return MultiRational(self.field, self.num + other.num, self.den)
        if self.den.is_ground and other.den.is_ground:
            return MultiRational(self.field, self.num * other.den + other.num * self.den, self.den * other.den)
        g = self.den.gcd(other.den)
        a = other.den.exquo(g)
        b = self.den.exquo(g)
        return MultiRational(self.field, self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __neg__(self):
        return MultiRational._raw(self.field, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.field.zero
        g1 = self.num.gcd(other.den) if not other.den.is_ground else None
        g2 = other.num.gcd(self.den) if not self.den.is_ground else None
        a, d = (self.num, other.den) if g1 is None or g1 == 1 else (self.num.exquo(g1), other.den.exquo(g1))
        c, b = (other.num, self.den) if g2 is None or g2 == 1 else (other.num.exquo(g2), self.den.exquo(g2))
        num, den = a * c, b * d
        lc = den.LC
        if lc != 1:
            num, den = num.quo_ground(lc), den.monic()
        return MultiRational._raw(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero rational function")
        return MultiRational._raw(self.field, *_monic(self.den, self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return MultiRational._raw(self.field, self.num**k, self.den**k)

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiRational):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.names, frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_polynomial(self) -> bool:
        return self.den == 1

    @property
    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def constant_value(self):
        """The scalar value of a constant function (Fraction over QQ)."""
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        c = self.num.LC if self.num else self.field.base.domain.zero
        if self.field.base.is_rational:
            return Fraction(int(c.numerator), int(c.denominator))
        return self.field.base.convert(int(c))

    def total_degree(self) -> int:
        return max(_degree(self.num), _degree(self.den))

    def size(self) -> int:
        """Term count; used as a pivoting heuristic."""
        return len(self.num) + len(self.den)

    def variables(self) -> set:
        used = set()
        for poly in (self.num, self.den):
            for exp in poly.keys():
                used.update(i for i, e in enumerate(exp) if e)
        return {self.field.names[i] for i in used}

    # actions ------------------------------------------------------------
    def permute(self, perm) -> "MultiRational":
        """Relabel variables: ``perm`` maps variable i to variable perm(i).

        ``perm`` is a sequence of 1-based images (length nvars) or a dict of
        names/indices.
        """
        images = _perm_images(self.field, perm)
        if images is None:
            return self
        ring = self.field.ring
        n = self.field.nvars

        def move(poly):
            out = {}
            for exp, c in poly.items():
                new = [0] * n
                for i, e in enumerate(exp):
                    if e:
                        new[images[i]] = e
                out[tuple(new)] = c
            return ring.from_dict(out)

        num, den = move(self.num), move(self.den)
        return MultiRational._raw(self.field, *_monic(num, den))

    def compose(self, images: Sequence, target: RationalFunctionField | None = None) -> "MultiRational":
        """Simultaneously substitute ``images[i]`` for variable i.

        Images are elements of ``target`` (or scalars).  Raises
        :class:`PoleError` when the denominator vanishes.
        """
        target = target or _infer_target(images) or self.field
        vals = [target.convert(v) for v in images]
        if len(vals) != self.field.nvars:
            raise ValueError(f"expected {self.field.nvars} images, got {len(vals)}")
        if all(v.den == 1 for v in vals):
            polys = [v.num for v in vals]
            num = _eval_poly(self.num, polys, target.ring)
            den = _eval_poly(self.den, polys, target.ring)
            if not den:
                raise PoleError(f"denominator {_fmt_poly(self.den, self.field.names)} vanishes", self._vanishing_factor(vals))
            return MultiRational(target, num, den)
        num = _eval_field(self.num, vals, target)
        den = _eval_field(self.den, vals, target)
        if not den:
            raise PoleError(f"denominator {_fmt_poly(self.den, self.field.names)} vanishes", self._vanishing_factor(vals))
        return num / den

    def _vanishing_factor(self, vals):
        _, factors = self.den.factor_list()
        for fac, _ in factors:
            part = MultiRational._raw(self.field, fac, self.field.ring.one)
            try:
                if not part.compose(vals).num:
                    return _fmt_poly(fac, self.field.names)
            except PoleError:
                pass
        return None

    def substitute(self, assignment: Mapping) -> "MultiRational":
        """Partial substitution; keys are names or 0-based indices, values scalars,
        variable names or elements of this field."""
        images = list(self.field.gens)
        for key, val in assignment.items():
            i = key if isinstance(key, int) else self.field.index(key)
            if isinstance(val, str) and val in self.field._index:
                val = self.field.var(val)
            images[i] = self.field.convert(val)
        try:
            return self.compose(images, self.field)
        except PoleError as err:
            if err.factor:
                raise PoleError(f"denominator factor {err.factor} vanishes under {dict(assignment)}", err.factor) from None
            raise

    def numerator(self) -> "MultiRational":
        return MultiRational._raw(self.field, self.num, self.field.ring.one)

    def denominator(self) -> "MultiRational":
        return MultiRational._raw(self.field, self.den, self.field.ring.one)

    def coefficients(self) -> dict:
        """Numerator coefficients keyed by exponent tuple (only for polynomials)."""
        if self.den != 1:
            raise ValueError("not a polynomial")
        return dict(self.num.items())

    def __str__(self):
        names = self.field.names
        if self.den == 1:
            return _fmt_poly(self.num, names)
        num = _fmt_poly(self.num, names)
        den = _fmt_poly(self.den, names)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1 or not self.den.is_monomial:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"MultiRational({str(self)!r})"


# helpers -------------------------------------------------------------------


def _degree(poly) -> int:
    return max((sum(exp) for exp in poly.keys()), default=0)


def _monic(num, den):
    lc = den.LC
    if lc != 1:
        return num.quo_ground(lc), den.monic()
    return num, den


def _canonical(num, den):
    if not num:
        return num.ring.zero, num.ring.one
    if not den.is_ground:
        g = num.gcd(den)
        if g != 1 and not g.is_ground:
            num, den = num.exquo(g), den.exquo(g)
    return _monic(num, den)


def _perm_images(field, perm):
    n = field.nvars
    if isinstance(perm, Mapping):
        images = list(range(n))
        for k, v in perm.items():
            i = k if isinstance(k, int) else field.index(k)
            j = v if isinstance(v, int) else field.index(v)
            images[i] = j
    else:
        perm = list(perm)
        if len(perm) != n:
            raise ValueError(f"permutation of length {len(perm)} for {n} variables")
        images = [p - 1 for p in perm]
    if sorted(images) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of the variables")
    if images == list(range(n)):
        return None
    return images


def _infer_target(images):
    for v in images:
        if isinstance(v, MultiRational):
            return v.field
    return None


def _eval_poly(poly, values, ring):
    result = ring.zero
    cache = {}
    for exp, c in poly.items():
        term = ring.ground_new(c)
        for i, e in enumerate(exp):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = values[i] ** e
                term = term * cache[key]
        result += term
    return result


def _eval_field(poly, values, target):
    result = target.zero
    cache = {}
    for exp, c in poly.items():
        term = MultiRational._raw(target, target.ring.ground_new(c), target.ring.one)
        for i, e in enumerate(exp):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = values[i] ** e
                term = term * cache[key]
        result = result + term
    return result


def _fmt_poly(poly, names) -> str:
    if not poly:
        return "0"
    parts = []
    for exp, c in poly.terms():
        mono = "*".join(
            (names[i] if e == 1 else f"{names[i]}^{e}") for i, e in enumerate(exp) if e
        )
        if hasattr(c, "numerator"):
            num, den = int(c.numerator), int(c.denominator)
        else:
            num, den = int(c), 1
        neg = num < 0
        num = abs(num)
        coef = str(num) if den == 1 else f"{num}/{den}"
        if mono:
            body = mono if coef == "1" else f"{coef}*{mono}"
        else:
            body = coef
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
