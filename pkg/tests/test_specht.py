from itertools import permutations
from math import factorial

import pytest

from permrep.specht import (
    Partition,
    centralizer_order,
    character_value,
    class_size,
    cycle_type,
    hook_length_dimension,
    partitions,
    permutation_of_type,
)


def test_examples():
    for m in range(1, 7):
        for mu in partitions(m):
            assert character_value((m,), mu) == 1
    assert character_value((1, 1), (2,)) == -1
    assert character_value((2, 1), (1, 1, 1)) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality_and_dimensions(n):
    lams = list(partitions(n))
    assert sum(class_size(mu) for mu in lams) == factorial(n)
    assert sum(hook_length_dimension(l) ** 2 for l in lams) == factorial(n)
    for lam in lams:
        assert character_value(lam, (1,) * n) == hook_length_dimension(lam)
        for nu in lams:
            inner = sum(character_value(lam, mu) * character_value(nu, mu) * class_size(mu) for mu in lams)
            assert inner == (factorial(n) if lam == nu else 0)


def test_sign_character_via_conjugate():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                sign = (-1) ** (n - len(mu))
                assert character_value(lam.conjugate(), mu) == sign * character_value(lam, mu)


def test_cycle_types():
    for n in range(1, 6):
        counts = {}
        for g in permutations(range(1, n + 1)):
            mu = cycle_type(g)
            counts[mu] = counts.get(mu, 0) + 1
        for mu, c in counts.items():
            assert c == class_size(mu) == factorial(n) // centralizer_order(mu)
            assert cycle_type(permutation_of_type(mu)) == mu


def test_partition_parsing():
    assert Partition.parse("(3,2)") == Partition((3, 2))
    assert str(Partition((3, 2))) == "(3,2)"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        character_value((2,), (1,))
