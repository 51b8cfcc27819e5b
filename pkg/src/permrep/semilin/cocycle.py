"""Semilinear representations of finite symmetric groups over k(x1..xn).

A permutation sigma acts on a column vector by ``v -> F(sigma) . sigma(v)``
where sigma is applied entrywise, so the cocycle rule reads
``F(tau sigma) = F(tau) . tau(F(sigma))``.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from math import factorial

from .. import linalg
from ..exact import QQ, BaseField, MultiRational, RationalFunctionField
from ..linalg import Matrix


class CocycleError(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    def __init__(self, message, partial_rank=0):
        super().__init__(message)
        self.partial_rank = partial_rank


def compose_perm(g, h):
    return tuple(g[x - 1] for x in h)


def act_matrix(g, A: Matrix) -> Matrix:
    return A.map(lambda x: x.permute(g))


def act_vector(g, v):
    return tuple(x.permute(g) for x in v)


@dataclass(frozen=True)
class ActionField:
    """k(x1..xn) with the symmetric group on ``acting`` (contiguous 1-based indices)."""

    field: RationalFunctionField
    acting: tuple

    def __post_init__(self):
        a = tuple(self.acting)
        if a and (a != tuple(range(a[0], a[0] + len(a))) or a[0] < 1 or a[-1] > self.field.nvars):
            raise ValueError(f"acting variables {a} must be a contiguous range inside 1..{self.field.nvars}")
        object.__setattr__(self, "acting", a)

    @classmethod
    def standard(cls, n: int, acting=None, base: BaseField = QQ) -> "ActionField":
        acting = tuple(range(1, n + 1)) if acting is None else tuple(acting)
        return cls(RationalFunctionField.standard(n, base), acting)

    @property
    def n(self) -> int:
        return self.field.nvars

    def identity(self):
        return tuple(range(1, self.n + 1))

    def transposition(self, i, j):
        g = list(range(1, self.n + 1))
        g[i - 1], g[j - 1] = j, i
        return tuple(g)

    @property
    def generator_pairs(self) -> list:
        return [(a, a + 1) for a in self.acting[:-1]]

    @property
    def generators(self) -> list:
        return [self.transposition(i, j) for i, j in self.generator_pairs]

    @property
    def order(self) -> int:
        return factorial(len(self.acting))

    def relation_words(self) -> list:
        """Coxeter relations of the acting symmetric group, as tuples of generator pairs."""
        s = self.generator_pairs
        words = []
        for i, a in enumerate(s):
            words.append((a, a))
            if i + 1 < len(s):
                b = s[i + 1]
                words.append((a, b) * 3)
            for b in s[i + 2 :]:
                words.append((a, b) * 2)
        return words


@dataclass
class SemilinRep:
    action: ActionField
    dim: int
    cocycle: dict  # generator pair (i, i+1) -> Matrix over action.field

    def __post_init__(self):
        for pair in self.action.generator_pairs:
            if pair not in self.cocycle:
                raise CocycleError(f"missing cocycle value for transposition {pair}")
            A = self.cocycle[pair]
            if A.shape != (self.dim, self.dim):
                raise CocycleError(f"cocycle value for {pair} has shape {A.shape}")

    @property
    def field(self) -> RationalFunctionField:
        return self.action.field

    @classmethod
    def trivial(cls, action: ActionField, dim: int) -> "SemilinRep":
        I = Matrix.identity(dim, action.field)
        return cls(action, dim, {p: I for p in action.generator_pairs})

    @cached_property
    def group_values(self) -> dict:
        """F(sigma) for every sigma of the acting group, built from the generators."""
        act = self.action
        e = act.identity()
        values = {e: Matrix.identity(self.dim, self.field)}
        queue = deque([e])
        gens = [(act.transposition(*p), self.cocycle[p]) for p in act.generator_pairs]
        while queue:
            g = queue.popleft()
            Fg = values[g]
            for s, Fs in gens:
                h = compose_perm(s, g)
                if h not in values:
                    values[h] = Fs @ act_matrix(s, Fg)
                    queue.append(h)
        return values

    def act(self, g, v):
        """sigma . v = F(sigma) sigma(v)."""
        return self.group_values[g] @ act_vector(g, v)

    def is_fixed(self, v, elements=None) -> bool:
        elements = self.action.generators if elements is None else elements
        v = tuple(v)
        return all(self.act(g, v) == v for g in elements)

    def to_json(self) -> dict:
        return {
            "vars": self.action.n,
            "acting": list(self.action.acting),
            "dim": self.dim,
            "field": str(self.field.base),
            "generators": [
                {"transposition": list(p), "matrix": self.cocycle[p].to_json()} for p in self.action.generator_pairs
            ],
        }


def load_cocycle(data) -> SemilinRep:
    if isinstance(data, str):
        data = json.loads(data)
    base = BaseField.parse(data.get("field", "QQ"))
    n = int(data["vars"])
    action = ActionField.standard(n, data["acting"], base)
    d = int(data["dim"])
    cocycle = {}
    for entry in data["generators"]:
        pair = tuple(int(x) for x in entry["transposition"])
        if pair not in action.generator_pairs:
            raise CocycleError(f"{pair} is not an adjacent transposition of the acting variables")
        cocycle[pair] = Matrix.from_json(entry["matrix"], action.field)
    return SemilinRep(action, d, cocycle)


@dataclass
class CocycleCheck:
    valid: bool
    violations: list = field(default_factory=list)


def cocycle_check(R: SemilinRep) -> CocycleCheck:
    """Check F on the Coxeter relations: accumulated F(a1) a1(F(a2)) ... must be I."""
    act = R.action
    for pair, A in R.cocycle.items():
        if linalg.rank(A) < R.dim:
            raise CocycleError(f"F{pair} is not invertible")
    I = Matrix.identity(R.dim, R.field)
    bad = []
    for word in act.relation_words():
        P = I
        g = act.identity()
        for pair in word:
            P = P @ act_matrix(g, R.cocycle[pair])
            g = compose_perm(g, act.transposition(*pair))
        if P != I:
            bad.append(word)
    return CocycleCheck(not bad, bad)


def coboundary_from(g: Matrix, action: ActionField) -> SemilinRep:
    """F(sigma) = g^-1 sigma(g), a cocycle trivialized by the columns of g^-1."""
    ginv = linalg.inverse(g)
    cocycle = {p: ginv @ act_matrix(action.transposition(*p), g) for p in action.generator_pairs}
    return SemilinRep(action, g.nrows, cocycle)


def random_invertible(field: RationalFunctionField, d: int, rng: random.Random, degree: int = 1, coeff: int = 3) -> Matrix:
    """Random d x d matrix with polynomial entries of total degree <= degree, retried until invertible."""
    monos = field.monomials(degree)
    while True:
        rows = [
            [sum((rng.randint(-coeff, coeff) * m for m in monos), field.zero) for _ in range(d)] for _ in range(d)
        ]
        M = Matrix(rows, field)
        if linalg.rank(M) == d:
            return M


# averaging -------------------------------------------------------------------------


def _subgroup_elements(R: SemilinRep, gens) -> list:
    e = R.action.identity()
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose_perm(s, g)
            if h not in seen:
                if h not in R.group_values:
                    raise ValueError(f"{h} is not in the acting group")
                seen.add(h)
                out.append(h)
                queue.append(h)
    return out


def _average(R: SemilinRep, elements, u):
    field = R.field
    acc = [field.zero] * R.dim
    for g in elements:
        w = R.act(g, u)
        acc = [a + b for a, b in zip(acc, w)]
    order = len(elements)
    if field.base.is_rational or order % field.base.p:
        inv = field.convert(Fraction(1, order)) if field.base.is_rational else field.one / order
        acc = [a * inv for a in acc]
    return tuple(acc)


def _candidates(R: SemilinRep, rng: random.Random, max_degree: int, random_tries: int):
    field = R.field
    d = R.dim
    for mono in field.monomials(max_degree):
        for i in range(d):
            yield tuple(mono if j == i else field.zero for j in range(d))
    monos = field.monomials(1)
    for _ in range(random_tries):
        yield tuple(sum((rng.randint(-3, 3) * m for m in monos), field.zero) for _ in range(d))


def _collect_fixed(R: SemilinRep, elements, budget: int, seed: int, random_tries: int = 16):
    rng = random.Random(seed)
    cols = []
    tried = 0
    max_degree = 0
    # enough monomials to fill the budget
    while len(R.field.monomials(max_degree)) * R.dim < budget and max_degree < 6:
        max_degree += 1
    for u in _candidates(R, rng, max_degree, random_tries):
        if tried >= budget + random_tries:
            break
        tried += 1
        c = _average(R, elements, u)
        if not any(c):
            continue
        trial = cols + [c]
        if linalg.rank(Matrix.from_columns(trial, R.field)) == len(trial):
            cols = trial
            if len(cols) == R.dim:
                return cols, tried
    raise BudgetExhausted(f"found {len(cols)} of {R.dim} independent fixed vectors after {tried} candidates", len(cols))


@dataclass
class H90Result:
    matrix: Matrix
    tried: int
    verified: bool


def h90_trivialize(R: SemilinRep, budget: int = 64, seed: int = 0) -> H90Result:
    """An invertible C whose columns are fixed vectors, found by averaging over the group."""
    check = cocycle_check(R)
    if not check.valid:
        raise CocycleError(f"not a cocycle; violated relations {check.violations}")
    elements = list(R.group_values)
    cols, tried = _collect_fixed(R, elements, budget, seed)
    C = Matrix.from_columns(cols, R.field)
    verified = linalg.rank(C) == R.dim and all(R.is_fixed(c) for c in cols)
    return H90Result(C, tried, verified)


def fixed_vectors(R: SemilinRep, subgroup_gens=(), budget: int = 64, seed: int = 0) -> list:
    """A K-basis of the vectors fixed by the subgroup generated by ``subgroup_gens``."""
    elements = _subgroup_elements(R, [tuple(g) for g in subgroup_gens])
    cols, _ = _collect_fixed(R, elements, budget, seed)
    assert linalg.rank(Matrix.from_columns(cols, R.field)) == len(cols)
    return cols


# cyclic vectors ---------------------------------------------------------------------


def words_up_to(action: ActionField, length: int) -> list:
    """Group elements expressible as words of length <= ``length`` in the generators."""
    e = action.identity()
    seen = {e}
    frontier = [e]
    out = [e]
    for _ in range(length):
        nxt = []
        for g in frontier:
            for s in action.generators:
                h = compose_perm(g, s)
                if h not in seen:
                    seen.add(h)
                    out.append(h)
                    nxt.append(h)
        frontier = nxt
    return out


def orbit_rank(R: SemilinRep, v, elements=None) -> int:
    elements = words_up_to(R.action, R.dim) if elements is None else elements
    return linalg.rank(Matrix.from_columns([R.act(g, tuple(v)) for g in elements], R.field))


def _cyclic_candidates(R: SemilinRep, rng: random.Random):
    field = R.field
    d = R.dim
    zero, one = field.zero, field.one
    for i in range(d):
        yield tuple(one if j == i else zero for j in range(d))
    acting = [field.var(a - 1) for a in R.action.acting] or list(field.gens)
    for x in acting:
        yield tuple(x**j for j in range(d))
    if len(acting) >= d - 1:
        yield (one,) + tuple(acting[: d - 1])
    monos = field.monomials(1)
    while True:
        yield tuple(sum((rng.randint(-3, 3) * m for m in monos), field.zero) for _ in range(d))


def find_cyclic_vector(R: SemilinRep, budget: int = 32, seed: int = 0):
    """A vector whose translates under words of length <= dim span K^dim, or None."""
    rng = random.Random(seed)
    elements = words_up_to(R.action, R.dim)
    for tried, v in enumerate(_cyclic_candidates(R, rng)):
        if tried >= budget:
            return None
        if any(v) and orbit_rank(R, v, elements) == R.dim:
            return v
    return None
