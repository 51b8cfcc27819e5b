"""Partitions and irreducible characters of symmetric groups."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        return cls(sorted((int(x) for x in text.split(",") if x.strip()), reverse=True))


def partitions(n: int, max_part: int | None = None):
    """All partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest)


def hook_length_dimension(lam) -> int:
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.weight) // hooks


def centralizer_order(mu) -> int:
    """z_mu = prod_i i^{m_i} m_i!, so the class of type mu has n!/z_mu elements."""
    counts = Counter(mu)
    return prod(i**m * factorial(m) for i, m in counts.items())


def class_size(mu) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def cycle_type(perm) -> Partition:
    """Cycle type of a 1-based image tuple."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
                length += 1
            lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def permutation_of_type(mu, n: int | None = None) -> tuple:
    """A permutation of {1..n} with cycle type mu on the first |mu| points."""
    n = sum(mu) if n is None else n
    perm = list(range(1, n + 1))
    start = 0
    for length in mu:
        block = list(range(start + 1, start + length + 1))
        for a, b in zip(block, block[1:] + block[:1]):
            perm[a - 1] = b
        start += length
    return tuple(perm)


def character_value(lam, mu) -> int:
    """chi_lambda on the class of cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weights differ: |{lam}| = {lam.weight}, |{mu}| = {mu.weight}")
    if lam.weight > 12:
        raise ValueError("character tables are limited to weight <= 12")
    k = len(lam)
    beta = frozenset(lam[i] + (k - 1 - i) for i in range(k))
    return _mn(beta, tuple(mu))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    # beta-set (abacus) form: a rim hook of length r moves a bead b to b - r
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        total += (-1) ** height * _mn((beta - {b}) | {c}, rest)
    return total
