import random
from itertools import product

import pytest

from hopfconst.axioms import verify_associativity, verify_unit
from hopfconst.base_change import TransitionData, transform_F, transform_presentation, transport_witness
from hopfconst.catalog import group_algebra, group_selfdual_witness, taft, taft2_witness
from hopfconst.errors import ConstructionError, HypothesisError
from hopfconst.ihopf import (
    IAlgebra,
    i_construct_general,
    i_construct_scaled,
    i_construct_simple,
    is_commutative,
    verify_cyclic_witness,
)
from hopfconst.linalg import diagonal, identity, matrix
from hopfconst.presentation import StructureTensor, extend_scalars
from hopfconst.scalars import QQ, CyclotomicField
from ihopf_fixtures import F8, feqg_fixtures, scaled_fixtures
from oracles import associativity_failures, dense, diamond_general, diamond_simple, random_matrix

FEQG = feqg_fixtures()
SCALED = scaled_fixtures()


def diamond_scaled(P, a):
    n, F, G, zero = P.dim, P.F, P.G, P.field.zero
    out = {}
    for i, j, k in product(range(n), repeat=3):
        s = zero
        for ip, jp, kp in product(range(n), repeat=3):
            s = s + G[ip, kp, j] * G[kp, jp, i] * F[jp, ip, k] / a[kp]
        out[(i, j, k)] = s
    return out


@pytest.mark.parametrize("name", sorted(FEQG))
def test_simple_matches_brute_force(name):
    Q = FEQG[name][0]
    assert dense(i_construct_simple(Q).F) == diamond_simple(Q.F)


def test_general_matches_brute_force():
    P, W = taft(2), taft2_witness()
    assert dense(i_construct_general(P, W).F) == diamond_general(P, W.S)


@pytest.mark.parametrize("name", sorted(SCALED))
def test_scaled_matches_brute_force(name):
    R, a = SCALED[name]
    assert dense(i_construct_scaled(R, a).F) == diamond_scaled(R, [R.field(x) for x in a])


@pytest.mark.parametrize("name", sorted(FEQG))
def test_general_with_identity_is_simple(name):
    Q = FEQG[name][0]
    assert i_construct_general(Q, identity(Q.field, Q.dim)) == i_construct_simple(Q)


@pytest.mark.parametrize("name", sorted(SCALED))
def test_general_with_diagonal_is_scaled(name):
    R, a = SCALED[name]
    S = diagonal(R.field, [x.inverse() for x in a])
    assert i_construct_general(R, S) == i_construct_scaled(R, a)


@pytest.mark.parametrize("name", sorted(FEQG))
def test_scaled_with_ones_is_simple(name):
    Q = FEQG[name][0]
    assert i_construct_scaled(Q, [1] * Q.dim).F == i_construct_simple(Q).F


@pytest.mark.parametrize("name", sorted(FEQG))
def test_general_agrees_with_normalized_simple(name):
    Q, TD, P, W = FEQG[name]
    assert transport_witness(W, TD).S == identity(F8, P.dim)
    expected = transform_F(i_construct_simple(Q).F, TD.inverted())
    assert i_construct_general(P, W).F == expected


def test_base_change_equivariance():
    Q = FEQG["H2"][0]
    rng = random.Random(31)
    for _ in range(3):
        T = extend_scalars(random_matrix(QQ, 4, rng, invertible=True), F8)
        TD = TransitionData(T)
        moved = transform_presentation(Q, TD)
        W = transport_witness(identity(F8, 4), TD)
        assert i_construct_general(moved, W).F == transform_F(i_construct_simple(Q).F, TD)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_group_algebras(n):
    F = CyclotomicField(n)
    I = i_construct_general(group_algebra(n, F), group_selfdual_witness(n, F))
    assert verify_associativity(I.F) and verify_unit(I.F, I.lam)
    assert is_commutative(I)


def test_hypotheses_enforced():
    P = taft(2)
    with pytest.raises(HypothesisError):
        i_construct_simple(P)
    with pytest.raises(HypothesisError):
        i_construct_scaled(P, [1, 1, 1, 1])
    R, a = SCALED["kZ2"]
    with pytest.raises(HypothesisError):
        i_construct_scaled(R, [0, 1])
    with pytest.raises(HypothesisError):
        i_construct_general(P, matrix(QQ, [[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    with pytest.raises(HypothesisError):
        i_construct_general(P, identity(QQ, 4))


def test_ialgebra_rejects_nonassociative():
    unit = {(0, m, m): 1 for m in range(3)} | {(m, 0, m): 1 for m in range(3)}
    # (x x) x = y x = x but x (x x) = x y = 0
    T = StructureTensor(QQ, 3, unit | {(1, 1, 2): 1, (2, 1, 1): 1})
    with pytest.raises(ConstructionError):
        IAlgebra(("1", "x", "y"), T, [1, 0, 0])
    ok = StructureTensor(QQ, 3, unit)
    IAlgebra(("1", "x", "y"), ok, [1, 0, 0])
    with pytest.raises(ConstructionError):
        IAlgebra(("1", "x", "y"), ok, [0, 1, 0])


def test_weight_must_sit_on_the_shared_index():
    # weighting by the index shared with F instead gives a non-associative product
    R, a = SCALED["H2"]
    n, F, G, zero = R.dim, R.F, R.G, R.field.zero
    entries = {}
    for i, j, k in product(range(n), repeat=3):
        s = zero
        for ip, jp, kp in product(range(n), repeat=3):
            s = s + G[ip, kp, j] * G[kp, jp, i] * F[jp, ip, k] / a[jp]
        entries[(i, j, k)] = s
    assert associativity_failures(StructureTensor(R.field, n, entries))
    assert not associativity_failures(i_construct_scaled(R, a).F)


def test_cyclic_witness():
    I = i_construct_general(extend_scalars(taft(2), F8), taft2_witness(F8), ["d1", "d2", "d3", "d4"])
    z, o = F8.zeta, F8.zero
    assert verify_cyclic_witness(I, [o, o, z, o], 4)
    bad = verify_cyclic_witness(I, [o, F8.one, o, o], 4)
    assert not bad and bad.note == "powers dependent"
    # d3 alone: d3^2 = d2, d3^4 = -d1
    wrong = verify_cyclic_witness(I, [o, o, F8.one, o], 4)
    assert not wrong and wrong.note == "x^m != 1" and wrong.lhs == -1
    with pytest.raises(HypothesisError):
        verify_cyclic_witness(I, [o, o, z, o], 3)
