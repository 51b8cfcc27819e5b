"""Finite truncations of permutation-group universes.

``SetModel(n)`` is {1..n} under the symmetric group; ``VecModel(q, n, v)`` is
F_q^n under the matrices fixing the first ``v`` standard basis vectors.
Subobjects of length s are s-subsets, respectively subspaces of dimension
v + s containing the marked subspace.

Group elements are tuples: 1-based image tuples for permutations, row tuples
for matrices.  Composition ``compose(g, h)`` is ``g o h``.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb, prod

from .exact import SmallGF


class StableRangeWarning(UserWarning):
    """A finite computation is below the range where it matches the infinite model."""


class GroupTooLargeError(ValueError):
    pass


def below_stable_range(message: str) -> None:
    warnings.warn(message, StableRangeWarning, stacklevel=3)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    if q == 1:
        return comb(n, k)
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


ENUMERATION_LIMIT = 50000


class FiniteModel:
    kind: str
    n: int
    q: int
    v: int = 0

    @property
    def length(self) -> int:
        return self.n - self.v

    # group layer (implemented by subclasses) -------------------------------
    def identity(self):
        raise NotImplementedError

    def compose(self, g, h):
        raise NotImplementedError

    def inverse(self, g):
        raise NotImplementedError

    def act_point(self, g, p):
        raise NotImplementedError

    def act(self, g, obj):
        raise NotImplementedError

    @cached_property
    def generators(self) -> tuple:
        return tuple(self._generators())

    def _generators(self):
        raise NotImplementedError

    def group_order(self) -> int:
        raise NotImplementedError

    def elements(self, limit: int = ENUMERATION_LIMIT) -> list:
        if self.group_order() > limit:
            raise GroupTooLargeError(f"group of order {self.group_order()} exceeds enumeration limit {limit}")
        return closure_of(self, self.generators, limit=limit)

    # subobjects ---------------------------------------------------------------
    def subobjects(self, s: int) -> list:
        if not 0 <= s <= self.length:
            raise ValueError(f"length {s} out of range 0..{self.length}")
        return list(self._subobjects(s))

    def subobject_length(self, obj) -> int:
        raise NotImplementedError

    def contains(self, big, small) -> bool:
        raise NotImplementedError

    def standard_subobject(self, N: int):
        """Psi_N, the first-N standard subobject."""
        raise NotImplementedError

    def basis_points(self, obj) -> tuple:
        """Points whose pointwise stabilizer is the pointwise stabilizer of ``obj``."""
        raise NotImplementedError

    def serialize(self, obj):
        raise NotImplementedError

    def describe(self) -> dict:
        return {"model": self.kind, "q": self.q, "n": self.n, "marked": self.v}

    # counting -----------------------------------------------------------------
    def q_bracket(self, N: int) -> int:
        """[N]_q, the size of Psi_N in the infinite model: N for sets, q^N for spaces."""
        if N < 0:
            raise ValueError("N must be nonnegative")
        return N if self.q == 1 else self.q**N

    def embedding_count(self, n: int, N: int) -> int:
        """d_n(N) = ([N]_q - [0]_q) ... ([N]_q - [n-1]_q)."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if self.q == 1:
            return prod(N - i for i in range(n)) if n <= N else 0
        return prod(self.q**N - self.q**i for i in range(n))

    def gaussian(self, s: int) -> int:
        return gaussian_binomial(self.length, s, self.q)


# ---------------------------------------------------------------------------------


class SetModel(FiniteModel):
    kind = "set"
    q = 1
    v = 0

    def __init__(self, n: int):
        if not 0 <= n <= 8:
            raise ValueError("set models support 0 <= n <= 8")
        self.n = n

    def __repr__(self):
        return f"SetModel({self.n})"

    def __eq__(self, other):
        return isinstance(other, SetModel) and other.n == self.n

    def __hash__(self):
        return hash(("set", self.n))

    @property
    def points(self):
        return tuple(range(1, self.n + 1))

    def identity(self):
        return tuple(range(1, self.n + 1))

    def compose(self, g, h):
        return tuple(g[x - 1] for x in h)

    def inverse(self, g):
        inv = [0] * self.n
        for i, x in enumerate(g, start=1):
            inv[x - 1] = i
        return tuple(inv)

    def act_point(self, g, p):
        return g[p - 1]

    def act(self, g, obj):
        return tuple(sorted(g[p - 1] for p in obj))

    def _generators(self):
        return [transposition(self.n, i, i + 1) for i in range(1, self.n)]

    def group_order(self) -> int:
        return prod(range(1, self.n + 1))

    def elements(self, limit: int = ENUMERATION_LIMIT) -> list:
        from itertools import permutations

        if self.group_order() > limit:
            raise GroupTooLargeError(f"S_{self.n} exceeds enumeration limit {limit}")
        return [tuple(p) for p in permutations(range(1, self.n + 1))]

    def _subobjects(self, s):
        return combinations(range(1, self.n + 1), s)

    def subobject_length(self, obj) -> int:
        return len(obj)

    def contains(self, big, small) -> bool:
        return set(small) <= set(big)

    def intersect(self, a, b):
        return tuple(sorted(set(a) & set(b)))

    def standard_subobject(self, N: int):
        return tuple(range(1, N + 1))

    def basis_points(self, obj):
        return tuple(obj)

    def closure(self, pts):
        pts = tuple(sorted(set(pts)))
        if any(not 1 <= p <= self.n for p in pts):
            raise ValueError(f"points {pts} outside 1..{self.n}")
        if self.n < len(pts) + 2:
            below_stable_range(f"closure of {len(pts)} points needs n >= {len(pts) + 2}, have n = {self.n}")
        return pts

    def serialize(self, obj):
        return list(obj)

    def deserialize(self, data):
        return tuple(sorted(int(x) for x in data))

    def pointwise_generators(self, obj):
        rest = [p for p in self.points if p not in obj]
        return [transposition(self.n, a, b) for a, b in zip(rest, rest[1:])]

    def setwise_generators(self, obj):
        inside = sorted(obj)
        return self.pointwise_generators(obj) + [transposition(self.n, a, b) for a, b in zip(inside, inside[1:])]


def transposition(n, a, b):
    g = list(range(1, n + 1))
    g[a - 1], g[b - 1] = b, a
    return tuple(g)


# ---------------------------------------------------------------------------------


class VecModel(FiniteModel):
    kind = "vec"

    def __init__(self, q: int, n: int, v: int = 0):
        if q not in (2, 3, 4):
            raise ValueError("vector models support q in {2, 3, 4}")
        if not 0 <= v <= n:
            raise ValueError("marked dimension must satisfy 0 <= v <= n")
        self.q, self.n, self.v = q, n, v
        self.F = SmallGF(q)

    def __repr__(self):
        return f"VecModel(q={self.q}, n={self.n}, v={self.v})"

    def __eq__(self, other):
        return isinstance(other, VecModel) and (other.q, other.n, other.v) == (self.q, self.n, self.v)

    def __hash__(self):
        return hash(("vec", self.q, self.n, self.v))

    # vectors ------------------------------------------------------------------
    def unit(self, i):
        return tuple(1 if j == i else 0 for j in range(self.n))

    @cached_property
    def marked_basis(self):
        return tuple(self.unit(i) for i in range(self.v))

    def vectors(self):
        return list(product(range(self.q), repeat=self.n))

    def rref(self, rows):
        F = self.F
        rows = [list(r) for r in rows]
        out = []
        col = 0
        r = 0
        while r < len(rows) and col < self.n:
            piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
            if piv is None:
                col += 1
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = F.inv(rows[r][col])
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    a = rows[i][col]
                    rows[i] = [F.sub(x, F.mul(a, y)) for x, y in zip(rows[i], rows[r])]
            r += 1
            col += 1
        for row in rows[:r]:
            out.append(tuple(row))
        return tuple(out)

    def span(self, vecs):
        return self.rref(list(vecs))

    def dim(self, obj) -> int:
        return len(obj)

    def in_span(self, basis, vec) -> bool:
        return len(self.rref(list(basis) + [vec])) == len(basis)

    def span_elements(self, basis):
        F = self.F
        out = set()
        for coeffs in product(range(self.q), repeat=len(basis)):
            vec = [0] * self.n
            for c, b in zip(coeffs, basis):
                if c:
                    vec = [F.add(x, F.mul(c, y)) for x, y in zip(vec, b)]
            out.add(tuple(vec))
        return out

    # group --------------------------------------------------------------------
    def identity(self):
        return tuple(self.unit(i) for i in range(self.n))

    def compose(self, g, h):
        F = self.F
        cols = list(zip(*h))
        out = []
        for row in g:
            out.append(tuple(_fdot(F, row, c) for c in cols))
        return tuple(out)

    def act_point(self, g, p):
        F = self.F
        return tuple(_fdot(F, row, p) for row in g)

    def act(self, g, obj):
        return self.rref([self.act_point(g, b) for b in obj])

    def inverse(self, g):
        F = self.F
        n = self.n
        rows = [list(r) + list(self.unit(i)) for i, r in enumerate(g)]
        for c in range(n):
            piv = next(i for i in range(c, n) if rows[i][c])
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = F.inv(rows[c][c])
            rows[c] = [F.mul(inv, x) for x in rows[c]]
            for i in range(n):
                if i != c and rows[i][c]:
                    a = rows[i][c]
                    rows[i] = [F.sub(x, F.mul(a, y)) for x, y in zip(rows[i], rows[c])]
        return tuple(tuple(r[n:]) for r in rows)

    def from_columns(self, cols):
        return tuple(tuple(c[i] for c in cols) for i in range(self.n))

    def _elementary(self, fixed: int, allowed=None):
        """Transvections and scalings fixing the first ``fixed`` basis vectors."""
        F = self.F
        gens = []
        for j in range(fixed, self.n):
            for i in range(self.n):
                if i == j or (allowed is not None and not allowed(i, j)):
                    continue
                for a in F.units if self.q == 4 else (1,):
                    g = [list(self.unit(r)) for r in range(self.n)]
                    g[i][j] = a
                    gens.append(tuple(tuple(r) for r in g))
            if self.q > 2:
                g = [list(self.unit(r)) for r in range(self.n)]
                g[j][j] = F.primitive
                gens.append(tuple(tuple(r) for r in g))
        return gens

    def _generators(self):
        return self._elementary(self.v)

    def group_order(self) -> int:
        q, n, v = self.q, self.n, self.v
        return q ** (v * (n - v)) * prod(q ** (n - v) - q**i for i in range(n - v))

    def elements(self, limit: int = ENUMERATION_LIMIT) -> list:
        if self.group_order() > limit:
            raise GroupTooLargeError(f"group of order {self.group_order()} exceeds enumeration limit {limit}")
        out = []
        vecs = self.vectors()

        def extend(cols):
            if len(cols) == self.n:
                out.append(self.from_columns(cols))
                return
            for w in vecs:
                if any(w) and not self.in_span(cols, w):
                    extend(cols + [w])

        extend(list(self.marked_basis))
        return out

    def adapted_basis(self, obj):
        cols = list(self.marked_basis)
        for b in list(obj) + [self.unit(i) for i in range(self.n)]:
            if not self.in_span(cols, b):
                cols.append(b)
        return cols

    def _conjugated(self, gens, cols):
        P = self.from_columns(cols)
        Pinv = self.inverse(P)
        return [self.compose(P, self.compose(g, Pinv)) for g in gens]

    def pointwise_generators(self, obj):
        cols = self.adapted_basis(obj)
        return self._conjugated(self._elementary(len(obj)), cols)

    def setwise_generators(self, obj):
        t = len(obj)
        cols = self.adapted_basis(obj)
        gens = self._elementary(self.v, allowed=lambda i, j: j >= t or i < t)
        return self._conjugated(gens, cols)

    # subobjects ---------------------------------------------------------------
    def _all_subspaces(self, k):
        n, q = self.n, self.q
        for pivots in combinations(range(n), k):
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
            for vals in product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), x in zip(free, vals):
                    rows[r][c] = x
                yield tuple(tuple(r) for r in rows)

    def _subobjects(self, s):
        k = self.v + s
        found = [W for W in self._all_subspaces(k) if all(self.in_span(W, e) for e in self.marked_basis)]
        return sorted(found)

    def subobject_length(self, obj) -> int:
        return len(obj) - self.v

    def contains(self, big, small) -> bool:
        return all(self.in_span(big, b) for b in small)

    def intersect(self, a, b):
        common = [w for w in self.span_elements(a) if self.in_span(b, w)]
        return self.rref(common)

    def standard_subobject(self, N: int):
        return self.rref([self.unit(i) for i in range(self.v + N)])

    def basis_points(self, obj):
        return tuple(obj)

    def closure(self, pts):
        pts = [tuple(p) for p in pts]
        if any(len(p) != self.n or any(not 0 <= x < self.q for x in p) for p in pts):
            raise ValueError("points must be vectors of F_q^n")
        return self.rref(list(self.marked_basis) + pts)

    def serialize(self, obj):
        return [list(r) for r in obj]

    def deserialize(self, data):
        return self.rref([tuple(int(x) for x in r) for r in data])


def _fdot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def model_from(kind: str, n: int, q: int = 2, marked: int = 0) -> FiniteModel:
    if kind == "set":
        return SetModel(n)
    if kind == "vec":
        return VecModel(q, n, marked)
    raise ValueError(f"unknown model kind {kind!r}")


def closure_of(model: FiniteModel, gens, limit: int = ENUMERATION_LIMIT) -> list:
    """All elements of the subgroup generated by ``gens`` (breadth-first)."""
    e = model.identity()
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = model.compose(s, g)
            if h not in seen:
                seen.add(h)
                out.append(h)
                queue.append(h)
                if len(out) > limit:
                    raise GroupTooLargeError(f"subgroup exceeds enumeration limit {limit}")
    return out


# subgroups and cosets ------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """The full group, or the pointwise / setwise stabilizer of a subobject."""

    model: FiniteModel
    kind: str = "full"
    obj: tuple = ()

    def __post_init__(self):
        if self.kind not in ("full", "pointwise", "setwise"):
            raise ValueError(f"unknown subgroup kind {self.kind!r}")

    @cached_property
    def generators(self) -> tuple:
        if self.kind == "full":
            return self.model.generators
        if self.kind == "pointwise":
            return tuple(self.model.pointwise_generators(self.obj))
        return tuple(self.model.setwise_generators(self.obj))

    def contains(self, g) -> bool:
        m = self.model
        if self.kind == "full":
            return True
        if self.kind == "pointwise":
            return all(m.act_point(g, p) == p for p in m.basis_points(self.obj))
        return m.act(g, self.obj) == self.obj

    def coset_key(self, g):
        """Label of the left coset g U."""
        m = self.model
        if self.kind == "full":
            return ()
        if self.kind == "pointwise":
            return tuple(m.act_point(g, p) for p in m.basis_points(self.obj))
        return m.act(g, self.obj)

    def act_on_key(self, g, key):
        m = self.model
        if self.kind == "full":
            return key
        if self.kind == "pointwise":
            return tuple(m.act_point(g, p) for p in key)
        return m.act(g, key)

    def elements(self, limit: int = ENUMERATION_LIMIT) -> list:
        return closure_of(self.model, self.generators, limit)

    def conjugate(self, g) -> "Subgroup":
        """g U g^-1, which is again a stabilizer (of g(obj))."""
        if self.kind == "full":
            return self
        return Subgroup(self.model, self.kind, self.model.act(g, self.obj))

    def __str__(self):
        if self.kind == "full":
            return "full"
        return f"{self.kind}:{self.model.serialize(self.obj)}"


def coset_space(U: Subgroup, limit: int = ENUMERATION_LIMIT) -> dict:
    """Map coset key -> representative g for every coset in G/U."""
    m = U.model
    e = m.identity()
    reps = {U.coset_key(e): e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        key = U.coset_key(g)
        for s in m.generators:
            h = m.compose(s, g)
            k2 = U.act_on_key(s, key)
            if k2 not in reps:
                reps[k2] = h
                queue.append(h)
                if len(reps) > limit:
                    raise GroupTooLargeError(f"coset space exceeds enumeration limit {limit}")
    return reps


@dataclass
class DoubleCosets:
    count: int
    representatives: list
    orbits: list  # lists of coset keys of G/V, one per double coset


def double_cosets(U: Subgroup, V: Subgroup, limit: int = ENUMERATION_LIMIT) -> DoubleCosets:
    """U \\ G / V as the U-orbits on G/V."""
    reps = coset_space(V, limit)
    seen = set()
    orbits = []
    out_reps = []
    for key in reps:
        if key in seen:
            continue
        orbit = [key]
        seen.add(key)
        queue = deque([key])
        while queue:
            k = queue.popleft()
            for u in U.generators:
                k2 = V.act_on_key(u, k)
                if k2 not in seen:
                    seen.add(k2)
                    orbit.append(k2)
                    queue.append(k2)
        orbits.append(orbit)
        out_reps.append(reps[key])
    return DoubleCosets(len(orbits), out_reps, orbits)


def fixed_cosets(U: Subgroup, V: Subgroup, limit: int = ENUMERATION_LIMIT) -> dict:
    """(G/U)^V: the cosets gU with V g U = g U, as key -> representative."""
    reps = coset_space(U, limit)
    return {k: g for k, g in reps.items() if all(U.act_on_key(v, k) == k for v in V.generators)}


@dataclass
class AutQuotient:
    """N_G(G_T)/G_T realized through representatives and their restrictions to T."""

    model: FiniteModel
    T: tuple
    representatives: list
    restrictions: list

    @property
    def order(self) -> int:
        return len(self.representatives)


def aut_quotient(model: FiniteModel, T) -> AutQuotient:
    if isinstance(model, SetModel) and 0 < len(T) < model.n < len(T) + 2:
        below_stable_range(f"Aut(T) for |T| = {len(T)} needs n >= {len(T) + 2}, have n = {model.n}")
    U = Subgroup(model, "pointwise", tuple(T))
    fixed = fixed_cosets(U, U)
    reps = list(fixed.values())
    return AutQuotient(model, tuple(T), reps, list(fixed.keys()))


def aut_action_is_regular(model: FiniteModel, T) -> bool:
    """Brute-force check that N(U)/U acts freely and transitively on (G/U)^U (U = G_T)."""
    U = Subgroup(model, "pointwise", tuple(T))
    fixed = fixed_cosets(U, U)
    keys = list(fixed)
    reps = list(fixed.values())
    if not keys:
        return False
    for g in reps:
        # right action gU . n = g n U
        images = {U.coset_key(model.compose(g, nrep)) for nrep in reps}
        if images != set(keys) or len(images) != len(reps):
            return False
    return True


def double_coset_count_bruteforce(U: Subgroup, V: Subgroup, limit: int = ENUMERATION_LIMIT) -> int:
    """#(U \\ G / V) by union-find on the enumerated group."""
    m = U.model
    elems = m.elements(limit)
    index = {g: i for i, g in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g, i in index.items():
        for u in U.generators:
            parent[find(index[m.compose(u, g)])] = find(i)
        for v in V.generators:
            parent[find(index[m.compose(g, v)])] = find(i)
    return len({find(i) for i in range(len(elems))})
