from itertools import combinations, permutations
from math import comb, factorial

import numpy as np
import pytest

from permrep.exact import PrimeField
from permrep.models import SetModel, Subgroup, VecModel, double_coset_count_bruteforce
from permrep.permod import (
    PermModule,
    Submodule,
    blocks_are_stable,
    boundary,
    coinduction_count_check,
    growth_profile,
    hom_basis,
    hom_dimension_by_commutation,
    isotypic_decompose,
    kernel_submodule,
    length_multiplicity_free,
    permutation_character,
    restriction_decompose,
    socle_V_T,
)
from permrep.specht import Partition, character_value, cycle_type, hook_length_dimension, partitions


def test_boundary_examples():
    d = boundary(SetModel(3), 1)
    assert d.matrix.tolist() == [[1, 1, 1]]
    assert d.rank() == 1
    assert boundary(SetModel(5), 2).rank() == 5
    d = boundary(VecModel(2, 4), 2)
    assert d.matrix.shape == (15, 35)
    assert d.rank() == 15


@pytest.mark.parametrize("model", [SetModel(5), VecModel(2, 3), VecModel(3, 2), VecModel(2, 3, 1)], ids=repr)
def test_boundary_and_homs_are_equivariant(model):
    for s in range(1, model.length + 1):
        d = boundary(model, s)
        src, tgt = PermModule(model, s), PermModule(model, s - 1)
        for g in model.generators:
            assert np.array_equal(d.matrix @ src.matrix(g), tgt.matrix(g) @ d.matrix)
        for h in hom_basis(src, tgt):
            assert h.is_equivariant()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_boundary_rank_over_prime_field(p):
    import sympy
    from sympy.polys.matrices import DomainMatrix

    for n in range(2, 7):
        for s in range(1, n + 1):
            d = boundary(SetModel(n), s)
            oracle = DomainMatrix.from_Matrix(sympy.Matrix(d.matrix.tolist())).convert_to(sympy.GF(p)).rank()
            assert d.rank(PrimeField(p)) == oracle


def test_hom_examples():
    m5 = SetModel(5)
    assert len(hom_basis(PermModule(m5, 1), PermModule(m5, 2))) == 2
    m4 = SetModel(4)
    assert len(hom_basis(PermModule(m4, 2), PermModule(m4, 2))) == 3
    assert len(hom_basis(PermModule(m4, 0), PermModule(m4, 0))) == 1


@pytest.mark.parametrize("model", [SetModel(4), SetModel(5), VecModel(2, 3)], ids=repr)
def test_hom_dimension_matches_commutation_oracle(model):
    for s in range(model.length + 1):
        for t in range(model.length + 1):
            M, N = PermModule(model, s), PermModule(model, t)
            assert len(hom_basis(M, N)) == hom_dimension_by_commutation(M, N)


def test_length_examples():
    assert length_multiplicity_free(PermModule(SetModel(4), 2)).value == 3
    assert length_multiplicity_free(PermModule(SetModel(8), 3)).value == 4
    res = length_multiplicity_free(PermModule(VecModel(2, 4), 2))
    assert res.value == 3 and res.certificate == "multiplicity-free"


def test_socle_examples():
    assert socle_V_T(SetModel(5), 2).dim == 5
    assert socle_V_T(SetModel(6), 3).dim == 5
    for model in (SetModel(4), VecModel(2, 3)):
        W = socle_V_T(model, 0)
        assert W.dim == 1 and W.is_stable()


@pytest.mark.parametrize("n", range(2, 9))
def test_socle_type_and_all_maps_agree(n):
    for s in range(0, n // 2 + 1):
        W = socle_V_T(SetModel(n), s)
        assert W.dim == comb(n, s) - (comb(n, s - 1) if s else 0)
        lam = Partition([p for p in (n - s, s) if p])
        assert W.dim == hook_length_dimension(lam)
        comps = isotypic_decompose(W)
        assert [(c.partition, c.multiplicity) for c in comps] == [(lam, 1)]
        if n <= 6:
            assert socle_V_T(SetModel(n), s, maps="all").dim == W.dim


def test_socle_is_stable():
    assert socle_V_T(SetModel(5), 2).is_stable()
    assert socle_V_T(VecModel(2, 4), 2).is_stable()


def test_isotypic_examples():
    comps = isotypic_decompose(Submodule.full(PermModule(SetModel(4), 2)))
    assert [(tuple(c.partition), c.multiplicity) for c in comps] == [((4,), 1), ((3, 1), 1), ((2, 2), 1)]
    comps = isotypic_decompose(Submodule.full(PermModule(SetModel(5), 0)))
    assert [(tuple(c.partition), c.multiplicity) for c in comps] == [((5,), 1)]
    comps = isotypic_decompose(socle_V_T(SetModel(5), 2))
    assert [(tuple(c.partition), c.multiplicity) for c in comps] == [((3, 2), 1)]


@pytest.mark.parametrize("n,s", [(4, 1), (5, 2), (6, 2), (6, 3)])
def test_isotypic_matches_character_oracle(n, s):
    # multiplicity of lambda = (1/n!) sum_g #fixed s-subsets(g) chi_lambda(g), summed over all of S_n
    model = SetModel(n)
    subsets = list(combinations(range(1, n + 1), s))
    fix_by_type = {}
    for g in permutations(range(1, n + 1)):
        mu = cycle_type(g)
        if mu not in fix_by_type:
            fix_by_type[mu] = [0, 0]
        fix_by_type[mu][0] += 1
        fix_by_type[mu][1] = sum(1 for T in subsets if tuple(sorted(g[t - 1] for t in T)) == T)
    oracle = {}
    for lam in partitions(n):
        total = sum(cnt * fix * character_value(lam, mu) for mu, (cnt, fix) in fix_by_type.items())
        if total:
            oracle[lam] = total // factorial(n)
    comps = isotypic_decompose(Submodule.full(PermModule(model, s)))
    assert {c.partition: c.multiplicity for c in comps} == oracle
    for mu, (_, fix) in fix_by_type.items():
        assert permutation_character(model, s, mu) == fix


def test_isotypic_restricted_group():
    comps = isotypic_decompose(socle_V_T(SetModel(5), 2), m_aut=2)
    assert {tuple(c.partition): c.multiplicity for c in comps} == {(2,): 3, (1, 1): 2}


def test_coinduction_examples():
    rep = coinduction_count_check(SetModel(5), (1, 2), (3,))
    assert (rep.lhs, rep.rhs) == (3, 3)
    assert [c for _, c in rep.terms] == [1, 1, 1, 0]
    rep = coinduction_count_check(SetModel(4), (), (1, 2))
    assert rep.lhs == rep.rhs == 1
    rep = coinduction_count_check(SetModel(4), (1,), (1,))
    assert rep.lhs == rep.rhs == 2


def test_coinduction_lhs_bruteforce():
    for n, J, T in [(5, (1, 2), (2, 3)), (6, (1, 2, 3), (3, 4)), (5, (1,), (2, 3))]:
        m = SetModel(n)
        rep = coinduction_count_check(m, J, T)
        brute = double_coset_count_bruteforce(Subgroup(m, "pointwise", J), Subgroup(m, "pointwise", T))
        assert rep.lhs == brute == rep.rhs


def test_coinduction_vector_model():
    m = VecModel(2, 4)
    line = m.subobjects(1)[0]
    rep = coinduction_count_check(m, line, line)
    assert rep.holds
    assert [c for _, c in rep.terms] == [c for _, c in rep.formula_terms]


def test_restriction_examples():
    M = PermModule(SetModel(5), 2)
    blocks = restriction_decompose(M, (1,))
    assert {k: len(v) for k, v in blocks.items()} == {(): 6, (1,): 4}
    assert blocks_are_stable(M, (1,), blocks)
    assert len(restriction_decompose(M, ())) == 1
    m = VecModel(2, 3)
    line = m.subobjects(1)[0]
    M = PermModule(m, 1)
    blocks = restriction_decompose(M, line)
    assert sorted(len(v) for v in blocks.values()) == [1, 6]
    assert blocks_are_stable(M, line, blocks)


def test_restriction_blocks_partition_the_basis():
    for model in (SetModel(6), VecModel(2, 3, 1)):
        for s in range(model.length + 1):
            M = PermModule(model, s)
            for J in model.subobjects(min(2, model.length)):
                blocks = restriction_decompose(M, J)
                assert sum(len(v) for v in blocks.values()) == M.dim
                assert blocks_are_stable(M, J, blocks)


def test_growth_examples():
    full = Submodule.full(PermModule(SetModel(8), 2))
    row = growth_profile(full, [4])[0]
    assert row.value == 6 and row.embedding_bound == 12 and row.ok
    ker = kernel_submodule(SetModel(8), 2)
    assert growth_profile(ker, [4])[0].value == 2
    assert [r.value for r in growth_profile(ker, [0, 1])] == [0, 0]


def test_growth_vector_model_within_bounds():
    m = VecModel(2, 4, 1)
    for level in range(m.length + 1):
        for sub in (Submodule.full(PermModule(m, level)), kernel_submodule(m, level)):
            assert all(r.ok for r in growth_profile(sub, range(m.length + 1)))
