"""Scalar fields: the rationals, prime fields, and tiny Galois fields for models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import GF, QQ as _SYMPY_QQ
from sympy.ntheory import isprime


@dataclass(frozen=True)
class BaseField:
    """The rationals (``p == 0``) or the prime field F_p.

    Scalars are :class:`fractions.Fraction` over the rationals and sympy
    ``GF(p)`` elements over F_p.
    """

    p: int = 0

    def __post_init__(self):
        if self.p and not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @cached_property
    def domain(self):
        return _SYMPY_QQ if self.p == 0 else GF(self.p, symmetric=False)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def convert(self, x):
        if self.p == 0:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot convert {x!r} to a rational")
        if isinstance(x, Fraction):
            return self.domain(x.numerator) / self.domain(x.denominator)
        if isinstance(x, int):
            return self.domain(x)
        if getattr(x, "mod", None) == self.p:
            return x
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    __call__ = convert

    def to_int(self, x) -> int:
        return int(x) % self.p if self.p else int(x)

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> "BaseField":
        text = text.strip().upper().replace(" ", "")
        if text in ("QQ", "Q"):
            return cls(0)
        if text.startswith("GF(") and text.endswith(")"):
            return cls(int(text[3:-1]))
        raise ValueError(f"unknown base field {text!r}")


QQ = BaseField(0)


def PrimeField(p: int) -> BaseField:
    return BaseField(p)


class SmallGF:
    """Arithmetic in F_q for q in {2, 3, 4, 5, 7}; elements are ints 0..q-1.

    F_4 is F_2[w]/(w^2 + w + 1) with w encoded as 2.
    """

    _PRIMES = (2, 3, 5, 7)

    def __init__(self, q: int):
        if q not in (2, 3, 4, 5, 7):
            raise ValueError(f"unsupported field size {q}")
        self.q = q
        if q in self._PRIMES:
            self.p = q
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            self.p = 2
            self.add_table = [[a ^ b for b in range(4)] for a in range(4)]
            # 1, w, w^2 = w + 1
            log = {1: 0, 2: 1, 3: 2}
            exp = [1, 2, 3]
            self.mul_table = [
                [0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % 3] for b in range(4)]
                for a in range(4)
            ]
        self.neg_table = [next(b for b in range(q) if self.add_table[a][b] == 0) for a in range(q)]
        self.inv_table = [0] + [next(b for b in range(q) if self.mul_table[a][b] == 1) for a in range(1, q)]
        self.elements = tuple(range(q))
        self.units = tuple(range(1, q))
        # a generator of the multiplicative group
        self.primitive = next(
            a for a in self.units if len({self._pow(a, k) for k in range(q - 1)}) == q - 1
        )

    def _pow(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul_table[r][a]
        return r

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.inv_table[a]

    def __repr__(self):
        return f"SmallGF({self.q})"
