import random
import warnings
from itertools import combinations, permutations
from math import comb, factorial, prod

import pytest

from permrep.models import (
    SetModel,
    StableRangeWarning,
    Subgroup,
    VecModel,
    aut_action_is_regular,
    aut_quotient,
    closure_of,
    double_coset_count_bruteforce,
    double_cosets,
    fixed_cosets,
    gaussian_binomial,
)


def gl_order(q, n):
    return prod(q**n - q**i for i in range(n))


def subspace_count(q, n, k):
    # number of k-dim subspaces via ordered bases / |GL_k|
    return prod(q**n - q**i for i in range(k)) // gl_order(q, k)


def test_subobject_examples():
    assert len(SetModel(4).subobjects(2)) == 6
    assert len(VecModel(2, 2).subobjects(1)) == 3
    assert len(VecModel(2, 4).subobjects(2)) == 35


@pytest.mark.parametrize("q,n,v", [(2, 2, 0), (2, 3, 0), (2, 4, 0), (3, 2, 0), (4, 2, 0), (2, 3, 1), (3, 3, 1)])
def test_subobject_counts_and_orders(q, n, v):
    m = VecModel(q, n, v)
    for s in range(m.length + 1):
        assert len(m.subobjects(s)) == subspace_count(q, n - v, s) == gaussian_binomial(n - v, s, q)
        assert all(m.subobject_length(W) == s for W in m.subobjects(s))
    # the group fixing the marked basis vectors: q^{v(n-v)} |GL_{n-v}|
    assert m.group_order() == q ** (v * (n - v)) * gl_order(q, n - v)
    if m.group_order() <= 2000:
        assert len(closure_of(m, m.generators)) == m.group_order()


def test_set_model_order():
    for n in range(0, 7):
        assert len(closure_of(SetModel(n), SetModel(n).generators)) == factorial(n)


def test_closure_examples():
    assert SetModel(6).closure({1, 3}) == (1, 3)
    m = VecModel(2, 3)
    line = m.closure([(1, 1, 0)])
    assert len(line) == 1 and m.in_span(line, (1, 1, 0))
    mk = VecModel(2, 3, 1)
    plane = mk.closure([(0, 1, 0)])
    assert len(plane) == 2 and mk.in_span(plane, (1, 0, 0)) and mk.in_span(plane, (0, 1, 0))


def test_closure_below_stable_range_warns():
    with pytest.warns(StableRangeWarning):
        SetModel(3).closure({1, 2})


def test_closure_idempotent_and_intersection_closed():
    m = VecModel(2, 4)
    rng = random.Random(1)
    vecs = list(m.vectors())
    for _ in range(20):
        a = m.closure(rng.sample(vecs, 2))
        b = m.closure(rng.sample(vecs, 2))
        assert m.closure(a) == a
        c = m.intersect(a, b)
        assert m.closure(c) == c
        assert m.contains(a, c) and m.contains(b, c)


def test_q_bracket_and_embeddings():
    assert SetModel(8).q_bracket(5) == 5
    assert VecModel(2, 4).q_bracket(3) == 8
    assert SetModel(8).q_bracket(0) == 0
    assert SetModel(8).embedding_count(2, 4) == 12
    assert VecModel(2, 4).embedding_count(1, 2) == 3
    assert SetModel(8).embedding_count(0, 5) == 1


def _brute_stabilizer(m, obj, kind):
    if kind == "pointwise":
        return {g for g in m.elements() if all(m.act_point(g, p) == p for p in m.basis_points(obj))}
    return {g for g in m.elements() if m.act(g, obj) == obj}


@pytest.mark.parametrize("model", [SetModel(5), VecModel(2, 3), VecModel(3, 2), VecModel(2, 3, 1)], ids=repr)
def test_stabilizer_generators_generate_stabilizer(model):
    for s in range(model.length + 1):
        for obj in model.subobjects(s)[:3]:
            for kind in ("pointwise", "setwise"):
                U = Subgroup(model, kind, obj)
                assert set(U.elements()) == _brute_stabilizer(model, obj, kind)


def test_double_coset_examples():
    m3 = SetModel(3)
    U = Subgroup(m3, "pointwise", (1,))
    assert double_cosets(U, U).count == 2
    m6 = SetModel(6)
    U = Subgroup(m6, "setwise", (1, 2))
    assert double_cosets(U, U).count == 3
    assert double_cosets(Subgroup(m6, "full"), U).count == 1


@pytest.mark.parametrize("model", [SetModel(5), VecModel(2, 3), VecModel(2, 3, 1)], ids=repr)
def test_double_cosets_match_bruteforce(model):
    rng = random.Random(4)
    subs = [o for s in range(model.length + 1) for o in model.subobjects(s)]
    for _ in range(8):
        U = Subgroup(model, rng.choice(["pointwise", "setwise"]), rng.choice(subs))
        V = Subgroup(model, rng.choice(["pointwise", "setwise", "full"]), rng.choice(subs))
        count = double_cosets(U, V).count
        assert count == double_coset_count_bruteforce(U, V)
        g = rng.choice(model.elements())
        assert double_cosets(U.conjugate(g), V.conjugate(g)).count == count


def test_fixed_coset_examples():
    m5 = SetModel(5)
    U = Subgroup(m5, "pointwise", (1, 2))
    assert len(fixed_cosets(U, U)) == 2
    assert len(fixed_cosets(Subgroup(m5, "full"), U)) == 1


def test_setwise_self_fixed_cosets():
    # both T and its complement are stable under the setwise stabilizer when n = 2|T|
    for n, expected in ((6, 2), (7, 1)):
        m = SetModel(n)
        U = Subgroup(m, "setwise", (1, 2, 3))
        assert len(fixed_cosets(U, U)) == expected
        brute = {m.act(g, (1, 2, 3)) for g in m.elements()}
        stable = [S for S in brute if all(m.act(u, S) == S for u in U.generators)]
        assert len(stable) == expected


def _brute_fixed(m, U, V):
    cosets = {}
    for g in m.elements():
        cosets.setdefault(U.coset_key(g), g)
    Vel = V.elements()
    return {k for k, g in cosets.items() if all(U.contains(m.compose(m.inverse(g), m.compose(v, g))) for v in Vel)}


@pytest.mark.parametrize("model", [SetModel(5), VecModel(2, 3)], ids=repr)
def test_fixed_cosets_match_bruteforce(model):
    for s in range(model.length + 1):
        for obj in model.subobjects(s)[:2]:
            for kind in ("pointwise", "setwise"):
                U = Subgroup(model, kind, obj)
                assert set(fixed_cosets(U, U)) == _brute_fixed(model, U, U)


def test_aut_quotient_examples():
    assert aut_quotient(SetModel(5), (1, 2)).order == 2
    assert aut_quotient(SetModel(5), ()).order == 1
    m = VecModel(2, 4)
    plane = m.subobjects(2)[0]
    assert aut_quotient(m, plane).order == 6
    assert aut_action_is_regular(m, plane)


def test_aut_is_regular_in_stable_range():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for n in range(2, 7):
            for t in range(0, min(3, n - 2) + 1):
                T = tuple(range(1, t + 1))
                assert aut_quotient(SetModel(n), T).order == factorial(t)
                assert aut_action_is_regular(SetModel(n), T)


def test_aut_warns_below_stable_range():
    with pytest.warns(StableRangeWarning):
        aut_quotient(SetModel(3), (1, 2))


def test_set_double_cosets_of_setwise_stabilizers():
    for n in range(0, 7):
        m = SetModel(n)
        for s in range(n + 1):
            U = Subgroup(m, "setwise", tuple(range(1, s + 1)))
            assert double_cosets(U, U).count == min(s, n - s) + 1
