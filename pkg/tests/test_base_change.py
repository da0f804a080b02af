import random

import pytest

from hopfconst.axioms import verify_all
from hopfconst.base_change import (
    NotRepresentable,
    TransitionData,
    congruence_diagonalize,
    gram_factorize,
    normalize_to_FeqG,
    transform_presentation,
    transport_witness,
)
from hopfconst.catalog import group_algebra, group_selfdual_witness, taft, taft2_witness
from hopfconst.duality import selfduality_reports
from hopfconst.errors import HopfError
from hopfconst.linalg import identity, inverse, is_invertible, matmul, matrix, matvec, transpose
from hopfconst.presentation import comultiply, extend_scalars, multiply
from hopfconst.scalars import QQ, CyclotomicField, PrimeField
from oracles import random_matrix

F8 = CyclotomicField(8)


def _col(T, j):
    return tuple(T[r][j] for r in range(len(T)))


def check_against_element_arithmetic(P, T, Q):
    """Products and coproducts of the new basis, computed in old coordinates."""
    n = P.dim
    for a in range(n):
        for b in range(n):
            old = multiply(P, _col(T, a), _col(T, b))
            new = matvec(T, tuple(Q.F[a, b, c] for c in range(n)))
            assert old == new
    for c in range(n):
        old = comultiply(P, _col(T, c))
        G_c = tuple(tuple(Q.G[a, b, c] for b in range(n)) for a in range(n))
        assert old == matmul(matmul(T, G_c), transpose(T))
    assert Q.mu == tuple(sum((P.mu[r] * T[r][a] for r in range(n)), P.field.zero) for a in range(n))
    assert matvec(T, Q.lam) == P.lam


@pytest.mark.parametrize("P", [group_algebra(2), taft(2)], ids=["dim2", "dim4"])
def test_random_transitions(P):
    rng = random.Random(17)
    n = P.dim
    I = TransitionData(identity(QQ, n))
    assert transform_presentation(P, I) == P
    for _ in range(10):
        T1 = TransitionData(random_matrix(QQ, n, rng, invertible=True))
        T2 = TransitionData(random_matrix(QQ, n, rng, invertible=True))
        Q = transform_presentation(P, T1)
        check_against_element_arithmetic(P, T1.T, Q)
        assert transform_presentation(Q, T1.inverted()) == P
        assert transform_presentation(Q, T2) == transform_presentation(P, T1.then(T2))
        assert [bool(r) for r in verify_all(Q)] == [bool(r) for r in verify_all(P)]


def test_axiom_failures_survive_base_change():
    P = taft(2)
    broken = P.replace(lam=[QQ(1), QQ(1), QQ(0), QQ(0)])
    T = TransitionData(random_matrix(QQ, 4, random.Random(2), invertible=True))
    before = [r.name for r in verify_all(broken) if not r]
    after = [r.name for r in verify_all(transform_presentation(broken, T)) if not r]
    assert before == after and "unit" in before


def test_transported_witness_still_works():
    P, W = taft(2), taft2_witness()
    T = TransitionData(random_matrix(QQ, 4, random.Random(8), invertible=True))
    assert all(selfduality_reports(transform_presentation(P, T), transport_witness(W, T)))


def test_congruence_example():
    S = matrix(QQ, [[1, 1], [1, -1]])
    P, D = congruence_diagonalize(S)
    assert P == matrix(QQ, [[1, 1], [0, 1]])
    assert D == matrix(QQ, [[1, 0], [0, -2]])


@pytest.mark.parametrize("field", [QQ, PrimeField(5)], ids=str)
def test_congruence_random(field):
    rng = random.Random(23)
    for trial in range(25):
        n = rng.randint(1, 5)
        S = [list(r) for r in random_matrix(field, n, rng, symmetric=True)]
        if trial % 3 == 0:
            for i in range(n):
                S[i][i] = field.zero
        S = tuple(tuple(r) for r in S)
        P, D = congruence_diagonalize(S)
        assert is_invertible(P)
        assert all(D[i][j] == 0 for i in range(n) for j in range(n) if i != j)
        assert matmul(matmul(transpose(P), D), P) == S


def test_congruence_zero_diagonal():
    S = matrix(QQ, [[0, 1], [1, 0]])
    P, D = congruence_diagonalize(S)
    assert matmul(matmul(transpose(P), D), P) == S


def test_gram_factor():
    S = taft2_witness(F8).S
    T = gram_factorize(S)
    assert matmul(transpose(T), T) == S
    miss = gram_factorize(taft2_witness(QQ).S)
    assert isinstance(miss, NotRepresentable) and not miss
    assert miss.index == 1 and miss.value == -2


def test_normalize_taft2():
    P = extend_scalars(taft(2), F8)
    Q, TD = normalize_to_FeqG(P, taft2_witness(F8))
    assert Q.F == Q.G
    assert all(verify_all(Q))
    assert transform_presentation(Q, TD.inverted()) == P
    assert isinstance(normalize_to_FeqG(taft(2), taft2_witness()), NotRepresentable)


def test_normalize_group_algebra():
    P = group_algebra(2, F8)
    Q, _ = normalize_to_FeqG(P, group_selfdual_witness(2, F8))
    assert Q.F == Q.G and all(verify_all(Q))


def test_normalize_rejects_bad_witness():
    with pytest.raises(HopfError):
        normalize_to_FeqG(taft(2), matrix(QQ, [[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_transition_validation():
    with pytest.raises(HopfError):
        TransitionData(matrix(QQ, [[1, 0], [0, 1]]), matrix(QQ, [[2, 0], [0, 1]]))
    T = matrix(QQ, [[1, 2], [3, 4]])
    assert TransitionData(T).Tinv == inverse(T)
