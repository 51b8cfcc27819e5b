import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from permrep import linalg
from permrep.exact import PrimeField, QQ, RationalFunctionField
from permrep.linalg import Matrix
from permrep.models import SetModel
from permrep.permod import boundary


def test_rank_examples():
    assert linalg.rank(Matrix.identity(3)) == 3
    assert linalg.rank(Matrix.zeros(3, 4)) == 0
    d2 = boundary(SetModel(4), 2).exact()
    assert d2.shape == (4, 6)
    assert linalg.rank(d2) == 4
    assert linalg.rank(d2.T) == 4


def test_kernel_examples():
    assert linalg.kernel_basis(Matrix.identity(3)) == []
    assert linalg.kernel_basis(Matrix([[1, 1]])) == [(Fraction(1), Fraction(-1))]
    d2 = boundary(SetModel(4), 2).exact()
    ker = linalg.kernel_basis(d2)
    assert len(ker) == 2
    for v in ker:
        assert not any(d2 @ v)


def test_solve_examples():
    b = (Fraction(1), Fraction(2), Fraction(-3))
    assert linalg.solve(Matrix.identity(3), b) == b
    assert linalg.solve(Matrix([[1, 1], [1, 1]]), (1, 2)) is None


def test_solve_and_inverse_over_f5():
    F = PrimeField(5)
    rng = random.Random(3)
    while True:
        M = Matrix([[F.convert(rng.randrange(5)) for _ in range(4)] for _ in range(4)], F)
        if linalg.rank(M) == 4:
            break
    b = tuple(F.convert(rng.randrange(5)) for _ in range(4))
    assert M @ linalg.solve(M, b) == b
    assert M @ linalg.inverse(M) == Matrix.identity(4, F)


def test_function_field_inverse_and_det():
    K = RationalFunctionField.standard(2)
    x1, x2 = K.gens
    M = Matrix([[x1, 1], [x2, x1 * x2]], K)
    assert linalg.det(M) == x1**2 * x2 - x2
    assert M @ linalg.inverse(M) == Matrix.identity(2, K)
    with pytest.raises(linalg.SingularMatrixError):
        linalg.inverse(Matrix([[x1, x2], [x1 * x2, x2**2]], K))


def test_function_field_rank_agrees_with_specialization():
    K = RationalFunctionField.standard(2)
    x1, x2 = K.gens
    M = Matrix([[x1, x2, x1 + x2], [x1**2, x1 * x2, x1**2 + x1 * x2], [1, x2, 1 + x2]], K)
    r = linalg.rank(M)
    assert r == 2
    rng = random.Random(0)
    for _ in range(5):
        pt = [rng.randint(2, 50), rng.randint(2, 50)]
        assert linalg.rank(linalg.specialize(M, pt)) <= r
    assert max(linalg.rank(linalg.specialize(M, [rng.randint(2, 50), rng.randint(2, 50)])) for _ in range(5)) == r


small = st.integers(-5, 5)
mats = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
)


@settings(max_examples=80, deadline=None)
@given(mats)
def test_rank_matches_sympy(rows):
    M = Matrix(rows)
    assert linalg.rank(M) == sympy.Matrix(rows).rank()
    assert linalg.rank(M) == linalg.rank(M.T)
    assert len(linalg.rref(M)[1]) == linalg.rank(M)


@settings(max_examples=60, deadline=None)
@given(mats, mats)
def test_rank_of_product(a, b):
    A, B = Matrix(a), Matrix(b)
    if A.ncols != B.nrows:
        B = Matrix([[1] * B.ncols for _ in range(A.ncols)])
    assert linalg.rank(A @ B) <= min(linalg.rank(A), linalg.rank(B))


@settings(max_examples=60, deadline=None)
@given(mats)
def test_kernel_vectors_vanish(rows):
    M = Matrix(rows)
    ker = linalg.kernel_basis(M)
    assert len(ker) == M.ncols - linalg.rank(M)
    for v in ker:
        assert not any(M @ v)
        assert next(x for x in v if x) == 1


@settings(max_examples=40, deadline=None)
@given(mats)
def test_rank_over_f7_matches_sympy(rows):
    F = PrimeField(7)
    M = Matrix([[F.convert(x) for x in r] for r in rows], F)
    oracle = sympy.Matrix(rows).applyfunc(lambda x: x % 7)
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix.from_Matrix(oracle).convert_to(sympy.GF(7))
    assert linalg.rank(M) == dm.rank()


def test_json_roundtrip():
    K = RationalFunctionField.standard(2)
    M = Matrix([["x1/x2", "1"], ["0", "x1^2-1"]], K)
    assert Matrix.from_json(M.to_json(), K) == M
    Q = Matrix.from_json([["1/2", "3"]], QQ)
    assert Q[0, 0] == Fraction(1, 2)
