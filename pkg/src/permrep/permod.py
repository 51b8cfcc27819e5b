"""Permutation modules k[subobjects of length s] and their equivariant maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, factorial

import numpy as np

from . import linalg
from .exact import QQ, BaseField
from .linalg import Matrix
from .models import (
    FiniteModel,
    SetModel,
    Subgroup,
    below_stable_range,
    double_cosets,
    fixed_cosets,
)
from .specht import (
    Partition,
    centralizer_order,
    character_value,
    hook_length_dimension,
    partitions,
    permutation_of_type,
)


class PermModule:
    """Free module over ``base`` on the length-``level`` subobjects of ``model``."""

    def __init__(self, model: FiniteModel, level: int, base: BaseField = QQ):
        self.model = model
        self.level = level
        self.base = base
        self.basis = model.subobjects(level)
        self.index = {obj: i for i, obj in enumerate(self.basis)}

    def __repr__(self):
        return f"PermModule({self.model!r}, level={self.level})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def perm(self, g) -> np.ndarray:
        """Index permutation p with g[basis[i]] = basis[p[i]]."""
        act, index = self.model.act, self.index
        return np.fromiter((index[act(g, b)] for b in self.basis), dtype=np.int64, count=self.dim)

    @cached_property
    def generator_perms(self) -> list:
        return [self.perm(g) for g in self.model.generators]

    def matrix(self, g) -> np.ndarray:
        P = np.zeros((self.dim, self.dim), dtype=np.int64)
        P[self.perm(g), np.arange(self.dim)] = 1
        return P


@dataclass
class EquivariantMap:
    source: PermModule
    target: PermModule
    matrix: np.ndarray  # target.dim x source.dim, integer entries
    label: str = ""

    def is_equivariant(self) -> bool:
        A = self.matrix
        for ps, pt in zip(self.source.generator_perms, self.target.generator_perms):
            # A[pt[j], ps[i]] must equal A[j, i]
            moved = np.empty_like(A)
            moved[np.ix_(pt, ps)] = A
            if not np.array_equal(moved, A):
                return False
        return True

    def exact(self, base: BaseField | None = None) -> Matrix:
        base = base or self.source.base
        return Matrix(self.matrix.tolist(), base, ncols=self.source.dim)

    def rank(self, base: BaseField | None = None) -> int:
        return linalg.rank(self.exact(base))


def boundary(model: FiniteModel, s: int, base: BaseField = QQ) -> EquivariantMap:
    """[T] -> sum of its colength-one subobjects, from level s to level s - 1."""
    if not 1 <= s <= model.length:
        raise ValueError(f"boundary level {s} out of range 1..{model.length}")
    src = PermModule(model, s, base)
    tgt = PermModule(model, s - 1, base)
    A = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    if isinstance(model, SetModel):
        for i, T in enumerate(src.basis):
            for sub in combinations(T, s - 1):
                A[tgt.index[sub], i] = 1
    else:
        for i, T in enumerate(src.basis):
            for j, S in enumerate(tgt.basis):
                if model.contains(T, S):
                    A[j, i] = 1
    return EquivariantMap(src, tgt, A, label=f"boundary_{s}")


def _pair_orbits(M: PermModule, N: PermModule):
    """Union-find over basis pairs (i in M, j in N) under the group generators."""
    parent = list(range(M.dim * N.dim))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nd = N.dim
    for ps, pt in zip(M.generator_perms, N.generator_perms):
        for i in range(M.dim):
            pi = int(ps[i])
            base_a, base_b = i * nd, pi * nd
            for j in range(nd):
                a, b = find(base_a + j), find(base_b + int(pt[j]))
                if a != b:
                    parent[max(a, b)] = min(a, b)
    orbits = {}
    for x in range(M.dim * nd):
        orbits.setdefault(find(x), []).append(x)
    return [orbits[r] for r in sorted(orbits)]


def hom_basis(M: PermModule, N: PermModule) -> list[EquivariantMap]:
    """Basis of Hom_G(M, N): one orbital 0/1 matrix per G-orbit on basis pairs.

    Since G is transitive on the basis of M, these correspond to the orbits
    of a point stabilizer on the basis of N.
    """
    if M.model != N.model:
        raise ValueError("modules over different models")
    maps = []
    nd = N.dim
    for orbit in _pair_orbits(M, N):
        A = np.zeros((nd, M.dim), dtype=np.int64)
        for x in orbit:
            i, j = divmod(x, nd)
            A[j, i] = 1
        i0, j0 = divmod(orbit[0], nd)
        label = ""
        if isinstance(M.model, SetModel):
            label = f"|T cap T'| = {len(set(M.basis[i0]) & set(N.basis[j0]))}"
        maps.append(EquivariantMap(M, N, A, label))
    return maps


def hom_dimension_by_commutation(M: PermModule, N: PermModule) -> int:
    """dim Hom_G(M, N) from the linear system A P_M(g) = P_N(g) A (independent check)."""
    rows = []
    nm, nn = M.dim, N.dim
    for ps, pt in zip(M.generator_perms, N.generator_perms):
        # (P_N A - A P_M)[pt[j], ps[i]] = A[j, i] - A[pt[j], ps[i]]
        for i in range(nm):
            for j in range(nn):
                r = [0] * (nm * nn)
                r[j * nm + i] += 1
                r[int(pt[j]) * nm + int(ps[i])] -= 1
                if any(r):
                    rows.append(r)
    if not rows:
        return nm * nn
    return nm * nn - linalg.rank(Matrix(rows, QQ))


@dataclass
class LengthResult:
    value: int | None
    certificate: str
    end_dimension: int


def length_multiplicity_free(M: PermModule) -> LengthResult:
    """Length of M when End(M) is commutative (multiplicity-free case)."""
    basis = [h.matrix for h in hom_basis(M, M)]
    for a, b in combinations(basis, 2):
        if not np.array_equal(a @ b, b @ a):
            return LengthResult(None, "unknown: End(M) not commutative", len(basis))
    return LengthResult(len(basis), "multiplicity-free", len(basis))


@dataclass
class Submodule:
    module: PermModule
    basis: list  # vectors (tuples of exact scalars) in the module's coordinates
    note: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def full(cls, module: PermModule) -> "Submodule":
        one, zero = module.base.one, module.base.zero
        return cls(module, [tuple(one if i == j else zero for i in range(module.dim)) for j in range(module.dim)])

    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.basis, self.module.base, nrows=self.module.dim)

    def is_stable(self, perms=None) -> bool:
        """Stability under the given index permutations (default: group generators)."""
        perms = self.module.generator_perms if perms is None else perms
        if not self.basis:
            return True
        B = self.matrix()
        r = linalg.rank(B)
        for p in perms:
            for b in self.basis:
                moved = [None] * len(b)
                for i, x in enumerate(b):
                    moved[int(p[i])] = x
                if linalg.rank(Matrix.from_columns(list(self.basis) + [moved], self.module.base)) != r:
                    return False
        return True


def socle_V_T(model: FiniteModel, s: int, base: BaseField = QQ, maps: str = "boundary") -> Submodule:
    """V_T inside k[level s]: common kernel of the maps to level s - 1.

    ``maps="boundary"`` uses the colength-one projections only; ``maps="all"``
    stacks every equivariant map to level s - 1.
    """
    M = PermModule(model, s, base)
    if s == 0:
        return Submodule.full(M)
    if model.length < 2 * s:
        below_stable_range(f"socle at level {s} needs length >= {2 * s}, have {model.length}")
    if maps == "boundary":
        stack = boundary(model, s, base).matrix
    elif maps == "all":
        stack = np.vstack([h.matrix for h in hom_basis(M, PermModule(model, s - 1, base))])
    else:
        raise ValueError("maps must be 'boundary' or 'all'")
    kernel = linalg.kernel_basis(Matrix(stack.tolist(), base, ncols=M.dim))
    return Submodule(M, kernel, note=f"kernel of {maps} maps to level {s - 1}")


# symmetric-group decomposition -------------------------------------------------


def _trace_on(sub: Submodule, perm_idx, pivots) -> Fraction:
    # coordinates w.r.t. a basis normalized so that b_i[pivots[j]] = delta_ij
    total = Fraction(0)
    for i, b in enumerate(sub.basis):
        p = pivots[i]
        # (g b)[perm_idx[k]] = b[k]; need (g b)[p]
        k = perm_idx[p]
        total += b[k]
    return total


@dataclass
class IsotypicComponent:
    partition: Partition
    multiplicity: int
    dimension: int


def isotypic_decompose(W: Submodule, m_aut: int | None = None) -> list[IsotypicComponent]:
    """Decompose W under Sym({1..m_aut}) (default: the whole truncated group) by characters."""
    model = W.module.model
    if not isinstance(model, SetModel):
        raise ValueError("isotypic decomposition is only available for set models")
    if not W.module.base.is_rational:
        raise ValueError("isotypic decomposition needs characteristic zero")
    m = model.n if m_aut is None else m_aut
    if not 0 <= m <= model.n:
        raise ValueError(f"m_aut = {m} outside 0..{model.n}")
    if not W.basis:
        return []
    rows, pivots = linalg.rref(Matrix([list(b) for b in W.basis], QQ, ncols=W.module.dim))
    normalized = Submodule(W.module, [tuple(r) for r in rows])
    chars = {}
    for mu in partitions(m):
        g = permutation_of_type(mu, model.n)
        p = W.module.perm(g)
        inv = np.empty_like(p)
        inv[p] = np.arange(len(p))
        chars[mu] = _trace_on(normalized, inv, pivots)
    out = []
    total = 0
    for lam in partitions(m):
        mult = sum(chars[mu] * character_value(lam, mu) / centralizer_order(mu) for mu in chars)
        if mult.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {mult} for {lam}; W is not stable")
        if mult:
            dim = hook_length_dimension(lam)
            out.append(IsotypicComponent(lam, int(mult), dim))
            total += int(mult) * dim
    if total != W.dim:
        raise ArithmeticError(f"decomposition accounts for {total} of {W.dim} dimensions")
    return out


def permutation_character(model: SetModel, s: int, mu) -> int:
    """Number of s-subsets fixed by a permutation of cycle type mu."""
    g = permutation_of_type(mu, model.n)
    return sum(1 for T in combinations(range(1, model.n + 1), s) if model.act(g, T) == T)


# coinduction and restriction ---------------------------------------------------


@dataclass
class CoinductionReport:
    lhs: int
    rhs: int
    terms: list = field(default_factory=list)  # (Lambda, count) pairs
    formula_terms: list = field(default_factory=list)
    stable: bool = True

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _closed_subobjects_of(model: FiniteModel, J):
    J = tuple(J)
    if isinstance(model, SetModel):
        return [sub for r in range(len(J) + 1) for sub in combinations(J, r)]
    out = []
    for s in range(model.subobject_length(J) + 1):
        out.extend(L for L in model.subobjects(s) if model.contains(J, L))
    return out


def coinduction_count_check(model: FiniteModel, J, T) -> CoinductionReport:
    """#(G_J \\ G / G_T) against the sum over closed Lambda in J of U-fixed cosets in G/G_Lambda."""
    J, T = tuple(J), tuple(T)
    lj, lt = model.subobject_length(J), model.subobject_length(T)
    stable = model.length >= lj + lt
    if not stable:
        below_stable_range(f"coinduction count needs length >= {lj + lt}, have {model.length}")
    H = Subgroup(model, "pointwise", J)
    U = Subgroup(model, "pointwise", T)
    lhs = double_cosets(H, U).count
    terms, formula = [], []
    for L in _closed_subobjects_of(model, J):
        count = len(fixed_cosets(Subgroup(model, "pointwise", L), U))
        terms.append((L, count))
        ll = model.subobject_length(L)
        if isinstance(model, SetModel):
            formula.append((L, factorial(lt) // factorial(lt - ll) if ll <= lt else 0))
        else:
            # injective linear maps L -> T that are the identity on the marked subspace
            q, v = model.q, model.v
            formula.append((L, q ** (v * ll) * model.embedding_count(ll, lt) if ll <= lt else 0))
    return CoinductionReport(lhs, sum(c for _, c in terms), terms, formula, stable)


def restriction_decompose(M: PermModule, J) -> dict:
    """Blocks M_Lambda: basis indices grouped by Lambda = closure(basis element cap J)."""
    model = M.model
    J = tuple(J)
    blocks = {}
    for i, obj in enumerate(M.basis):
        blocks.setdefault(model.intersect(obj, J), []).append(i)
    return dict(sorted(blocks.items(), key=lambda kv: (model.subobject_length(kv[0]), kv[0])))


def blocks_are_stable(M: PermModule, J, blocks: dict) -> bool:
    gens = Subgroup(M.model, "pointwise", tuple(J)).generators
    where = {i: key for key, idx in blocks.items() for i in idx}
    for g in gens:
        p = M.perm(g)
        if any(where[int(p[i])] != where[i] for i in range(M.dim)):
            return False
    return True


# growth ----------------------------------------------------------------------


@dataclass
class GrowthRow:
    N: int
    value: int
    embedding_bound: int
    power_bound: int

    @property
    def ok(self) -> bool:
        return self.value <= self.embedding_bound <= self.power_bound


def growth_profile(sub: Submodule, N_values) -> list[GrowthRow]:
    """d_M(N) = dim(M cap span of basis subobjects inside Psi_N), with both upper bounds."""
    M = sub.module
    model = M.model
    n0 = M.level
    rows = []
    B = sub.matrix()
    k = sub.dim
    for N in N_values:
        if N > model.length:
            raise ValueError(f"N = {N} exceeds the truncation length {model.length}")
        psi = model.standard_subobject(N)
        outside = [i for i, obj in enumerate(M.basis) if not model.contains(psi, obj)]
        if k == 0:
            d = 0
        elif outside:
            d = k - linalg.rank(Matrix([B.rows[i] for i in outside], M.base, ncols=k))
        else:
            d = k
        twist = model.q ** (model.v * n0)
        rows.append(
            GrowthRow(
                N,
                d,
                twist * model.embedding_count(n0, N),
                twist * model.q_bracket(N) ** n0,
            )
        )
    return rows


def kernel_submodule(model: FiniteModel, s: int, base: BaseField = QQ) -> Submodule:
    """ker(boundary_s); the whole module at level 0."""
    M = PermModule(model, s, base)
    if s == 0:
        return Submodule.full(M)
    kernel = linalg.kernel_basis(boundary(model, s, base).exact())
    return Submodule(M, kernel, note=f"kernel of boundary_{s}")


def expected_length(n: int, s: int) -> int:
    return min(s, n - s) + 1


def expected_socle_dimension(n: int, s: int) -> int:
    return comb(n, s) - (comb(n, s - 1) if s else 0)
