"""Morphisms between weight-N generators: rational functions symmetric in two blocks.

Q in S_{M,N} acts by [T] -> sum_{J in T, |J| = M} Q(J in T) [J], where
Q(J in T) puts the elements of J into the first M slots and T \\ J into the
remaining ones.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations, permutations

from ..exact import QQ, BaseField, MultiRational, RationalFunctionField


class WeightError(ValueError):
    pass


def slot_field(N: int, base: BaseField = QQ) -> RationalFunctionField:
    return RationalFunctionField.standard(N, base)


@dataclass(frozen=True)
class BiSymFunction:
    M: int
    N: int
    f: MultiRational

    def __post_init__(self):
        if not 0 <= self.M <= self.N:
            raise WeightError(f"need 0 <= M <= N, got M={self.M}, N={self.N}")
        if self.f.field.nvars != self.N:
            raise WeightError(f"function lives in {self.f.field.nvars} variables, expected {self.N}")
        for i in list(range(1, self.M)) + list(range(self.M + 1, self.N)):
            swap = list(range(1, self.N + 1))
            swap[i - 1], swap[i] = i + 1, i
            if self.f.permute(swap) != self.f:
                raise WeightError(f"{self.f} is not symmetric under x{i} <-> x{i + 1}")

    @classmethod
    def parse(cls, M: int, N: int, expr, base: BaseField = QQ) -> "BiSymFunction":
        return cls(M, N, slot_field(N, base).convert(expr))

    @classmethod
    def from_json(cls, data, base: BaseField = QQ) -> "BiSymFunction":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.parse(int(data["M"]), int(data["N"]), str(data["expr"]), base)

    def to_json(self) -> dict:
        return {"M": self.M, "N": self.N, "expr": str(self.f)}

    @classmethod
    def identity(cls, N: int, base: BaseField = QQ) -> "BiSymFunction":
        return cls(N, N, slot_field(N, base).one)

    def evaluate(self, J, rest, target: RationalFunctionField) -> MultiRational:
        """Q(J in T) with J in the first M slots, T \\ J in the others."""
        images = [target.var(j - 1) for j in J] + [target.var(t - 1) for t in rest]
        return self.f.compose(images, target)

    def __str__(self):
        return str(self.f)


def symmetrized_monomial(M: int, N: int, exponents, base: BaseField = QQ) -> BiSymFunction:
    """Orbit sum of x^exponents under Sym(first M) x Sym(last N - M)."""
    field = slot_field(N, base)
    exponents = tuple(exponents)
    if len(exponents) != N:
        raise WeightError(f"need {N} exponents")
    seen = set()
    for a in permutations(exponents[:M]):
        for b in permutations(exponents[M:]):
            seen.add(a + b)
    total = field.zero
    for exp in sorted(seen):
        term = field.one
        for x, e in zip(field.gens, exp):
            term = term * x**e
        total = total + term
    return BiSymFunction(M, N, total)


def random_monomial_bisym(M: int, N: int, rng: random.Random, max_exp: int = 2, base: BaseField = QQ) -> BiSymFunction:
    return symmetrized_monomial(M, N, [rng.randint(0, max_exp) for _ in range(N)], base)


@dataclass(frozen=True)
class WeightedElement:
    """A finite sum of coefficient * [subobject] with every subobject of size ``level``."""

    level: int
    terms: tuple  # ((subobject tuple, coefficient), ...) sorted, coefficients nonzero

    @classmethod
    def build(cls, level: int, pairs, field: RationalFunctionField) -> "WeightedElement":
        acc = {}
        for sub, c in pairs:
            key = tuple(sorted(int(t) for t in sub))
            if len(key) != level or len(set(key)) != level:
                raise WeightError(f"subobject {key} is not a {level}-subset")
            acc[key] = acc.get(key, field.zero) + field.convert(c)
        return cls(level, tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def basis(cls, level: int, sub, field: RationalFunctionField) -> "WeightedElement":
        return cls.build(level, [(sub, field.one)], field)

    @classmethod
    def from_json(cls, data, field: RationalFunctionField) -> "WeightedElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.build(int(data["level"]), [(t["subobject"], str(t["coef"])) for t in data["terms"]], field)

    def to_json(self) -> dict:
        return {"level": self.level, "terms": [{"coef": str(c), "subobject": list(s)} for s, c in self.terms]}

    def as_dict(self) -> dict:
        return dict(self.terms)

    def support(self) -> set:
        return {t for s, _ in self.terms for t in s}

    def permute(self, perm) -> "WeightedElement":
        """Semilinear action: relabel subobjects and permute the coefficient variables."""
        return WeightedElement(
            self.level, tuple(sorted((tuple(sorted(perm[t - 1] for t in s)), c.permute(perm)) for s, c in self.terms))
        )

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})[{','.join(map(str, s))}]" for s, c in self.terms)


def hom_apply(Q: BiSymFunction, w: WeightedElement, field: RationalFunctionField) -> WeightedElement:
    if w.level != Q.N:
        raise WeightError(f"element of level {w.level} fed to a morphism from level {Q.N}")
    if w.support() and max(w.support()) > field.nvars:
        raise WeightError(f"support {sorted(w.support())} exceeds the truncation x1..x{field.nvars}")
    pairs = []
    for T, c in w.terms:
        for J in combinations(T, Q.M):
            rest = [t for t in T if t not in J]
            pairs.append((J, c * Q.evaluate(J, rest, field)))
    return WeightedElement.build(Q.M, pairs, field)


def hom_compose(Q: BiSymFunction, R: BiSymFunction) -> BiSymFunction:
    """Q o R for R : level N -> level M and Q : level M -> level L.

    (Q o R)(J0 in T) = sum over J0 in J in T of R(J in T) Q(J0 in J).
    """
    if Q.N != R.M:
        raise WeightError(f"cannot compose S_{{{Q.M},{Q.N}}} after S_{{{R.M},{R.N}}}")
    L, M, N = Q.M, R.M, R.N
    field = R.f.field
    T = list(range(1, N + 1))
    J0 = T[:L]
    total = field.zero
    for extra in combinations(T[L:], M - L):
        J = J0 + list(extra)
        r = R.evaluate(J, [t for t in T if t not in J], field)
        q = Q.evaluate(J0, list(extra), field)
        total = total + r * q
    return BiSymFunction(L, N, total)
