"""Generator tests for weight-one submodules of K[Psi], K = k(x1, x2, ...).

An element sum_t q_t [t] fails to generate when some nonzero Q in k(T)
kills it: sum_t q_t Q(x_t) = 0.  Two-variable maps [{a,b}] -> q(a,b)[a] +
q(b,a)[b] are surjective exactly when the determinant D below is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .. import linalg
from ..exact import QQ, BaseField, MultiRational, PoleError, RationalFunctionField
from ..linalg import Matrix
from .bisym import WeightedElement


def to_base(c, base: BaseField):
    if base.is_rational:
        return Fraction(int(c.numerator), int(c.denominator))
    return base.convert(int(c))


def linear_relations(exprs, base: BaseField) -> list:
    """k-linear relations sum_i a_i exprs[i] = 0 among elements of one function field."""
    if not exprs:
        return []
    ring = exprs[0].field.ring
    den = ring.one
    for e in exprs:
        den = den.lcm(e.den)
    nums = [e.num * den.exquo(e.den) for e in exprs]
    monos = sorted({m for p in nums for m in p.keys()})
    if not monos:
        return [tuple(base.one if j == i else base.zero for j in range(len(exprs))) for i in range(len(exprs))]
    rows = [[to_base(p.get(m, ring.domain.zero), base) for p in nums] for m in monos]
    return linalg.kernel_basis(Matrix(rows, base, ncols=len(exprs)))


def _univariate(base: BaseField, name="T") -> RationalFunctionField:
    return RationalFunctionField([name], base)


def denominators(kT: RationalFunctionField, rational: bool, pool=(0, 1, -1), max_exp: int = 2) -> list:
    """1, then products of (T - beta)^e for beta in the pool, e <= max_exp."""
    T = kT.var(0)
    out = [kT.one]
    if rational:
        for exps in product(range(max_exp + 1), repeat=len(pool)):
            if any(exps):
                h = kT.one
                for beta, e in zip(pool, exps):
                    h = h * (T - beta) ** e
                out.append(h)
        out[1:] = sorted(out[1:], key=lambda h: (h.total_degree(), str(h)))
    return out


@dataclass
class GeneratorVerdict:
    generator: bool  # no witness found within the bound
    witness: MultiRational | None
    degree_bound: int
    rational: bool
    denominators_tried: int

    def __str__(self):
        if self.witness is not None:
            return f"NotGenerator, witness Q={self.witness}"
        mode = "rational" if self.rational else "polynomial"
        return f"NoWitnessUpTo({self.degree_bound}, {mode})"


def generator_test_weight1(alpha: WeightedElement, K: RationalFunctionField, degree: int = 3, rational: bool = True) -> GeneratorVerdict:
    if alpha.level != 1:
        raise ValueError("generator test needs a level-one element")
    if not alpha.terms:
        raise ValueError("alpha must be nonzero")
    base = K.base
    kT = _univariate(base)
    T = kT.var(0)
    hs = denominators(kT, rational)
    points = [(K.var(s[0] - 1), c) for s, c in alpha.terms]
    for count, h in enumerate(hs, start=1):
        hvals = [h.compose([x], K) for x, _ in points]
        exprs = []
        for i in range(degree + 1):
            exprs.append(sum((c * x**i / hv for (x, c), hv in zip(points, hvals)), K.zero))
        for rel in linear_relations(exprs, base):
            Q = sum((kT.convert(a) * T**i for i, a in enumerate(rel) if a), kT.zero) / h
            if Q and not sum((c * Q.compose([x], K) for x, c in points), K.zero):
                return GeneratorVerdict(False, Q, degree, rational, count)
    return GeneratorVerdict(True, None, degree, rational, len(hs))


# two variables -------------------------------------------------------------------------


def determinant_D(q: MultiRational) -> MultiRational:
    """q(a0,a1) q(a1,a2) q(a2,a0) + q(a1,a0) q(a2,a1) q(a0,a2) in k(a0, a1, a2)."""
    A = RationalFunctionField(["a0", "a1", "a2"], q.field.base)
    a = A.gens

    def qq(i, j):
        return q.compose([a[i], a[j]], A)

    return qq(0, 1) * qq(1, 2) * qq(2, 0) + qq(1, 0) * qq(2, 1) * qq(0, 2)


def satisfies_condition(q: MultiRational, S: MultiRational) -> bool:
    """q(a,b) S(a) + q(b,a) S(b) == 0 identically."""
    B = RationalFunctionField(["a", "b"], q.field.base)
    a, b = B.gens
    try:
        lhs = q.compose([a, b], B) * S.compose([a], B) + q.compose([b, a], B) * S.compose([b], B)
    except PoleError:
        return False
    return bool(S) and not lhs


def _witness_polynomial(q: MultiRational, degree: int):
    base = q.field.base
    B = RationalFunctionField(["a", "b"], base)
    a, b = B.gens
    qab, qba = q.compose([a, b], B), q.compose([b, a], B)
    exprs = [qab * a**i + qba * b**i for i in range(degree + 1)]
    kT = _univariate(base)
    T = kT.var(0)
    for rel in linear_relations(exprs, base):
        S = sum((kT.convert(c) * T**i for i, c in enumerate(rel) if c), kT.zero)
        if satisfies_condition(q, S):
            return S
    return None


def _witness_specialized(q: MultiRational, tries: int = 9):
    # set b = b0 with S(b0) = 1 in the condition: S(T) = -q(b0, T) / q(T, b0)
    kT = _univariate(q.field.base)
    T = kT.var(0)
    for k in range(tries):
        b0 = kT.convert((k + 1) // 2 * (1 if k % 2 else -1))
        try:
            num, den = q.compose([b0, T], kT), q.compose([T, b0], kT)
        except PoleError:
            continue
        if not den:
            continue
        S = -num / den
        if satisfies_condition(q, S):
            return S
    return None


def weight1_image_matrix(q: MultiRational, n: int = 4) -> Matrix:
    """Matrix of [{a,b}] -> q(a,b)[a] + q(b,a)[b] on the truncation with n points."""
    K = RationalFunctionField.standard(n, q.field.base)
    x = K.gens
    pairs = list(combinations(range(n), 2))
    rows = [[K.zero] * len(pairs) for _ in range(n)]
    for j, (a, b) in enumerate(pairs):
        rows[a][j] = q.compose([x[a], x[b]], K)
        rows[b][j] = q.compose([x[b], x[a]], K)
    return Matrix(rows, K, ncols=len(pairs))


@dataclass
class Q2Verdict:
    q: MultiRational
    D: MultiRational
    surjective: bool
    witness: MultiRational | None = None
    witness_method: str = ""
    corank: int | None = None
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        if self.corank is None:
            return True
        if self.surjective:
            return self.corank == 0 and self.witness is None
        return self.corank == 1 and self.witness is not None

    def __str__(self):
        if self.surjective:
            return "Surjective"
        if self.witness is None:
            return "NotSurjective, no witness found"
        return f"NotSurjective, witness S={self.witness}"


def q2_surjectivity(q: MultiRational, degree: int | None = None, oracle_n: int | None = 4) -> Q2Verdict:
    if q.field.nvars != 2:
        raise ValueError("q must be a function of two variables")
    if not q:
        raise ValueError("q must be nonzero")
    D = determinant_D(q)
    verdict = Q2Verdict(q, D, bool(D))
    if not verdict.surjective:
        degree = q.total_degree() + 1 if degree is None else degree
        S = _witness_polynomial(q, degree)
        if S is not None:
            verdict.witness, verdict.witness_method = S, f"polynomial, degree <= {degree}"
        else:
            S = _witness_specialized(q)
            if S is not None:
                verdict.witness, verdict.witness_method = S, "specialization"
    if oracle_n:
        M = weight1_image_matrix(q, oracle_n)
        verdict.corank = oracle_n - linalg.rank(M)
    return verdict


def q2_corpus(base: BaseField = QQ) -> list:
    """Products P(X) S(Y) (X-Y)^e R(X,Y) with symmetric R of degree <= 2, plus a few unstructured q."""
    F = RationalFunctionField(["X", "Y"], base)
    X, Y = F.gens
    Ps = [F.one, X + 1]
    Ss = [F.one, Y, Y - 2]
    Rs = [F.one, X + Y, X * Y + 1, X**2 + Y**2 + 1]
    out = []
    for P in Ps:
        for S in Ss:
            for e in (0, 1):
                for R in Rs:
                    out.append(P * S * (X - Y) ** e * R)
    out += [X + 2 * Y, X**2 - Y, X - Y + 1, (X - Y) ** 3, X * Y, X, 1 / (X + Y), (X - Y) / (X + Y + 1)]
    return out
