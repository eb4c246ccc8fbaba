from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from shimura_cert.arith import class_number, kronecker
from shimura_cert.quaternion import (
    brandt_matrices,
    brandt_matrix,
    build_algebra,
    class_permutation,
    eichler_order,
    eisenstein_weights,
    embedding_counts,
    hilbert_symbol,
    maximal_classes,
    maximal_order,
    optimal_embedding_count,
    right_ideal_classes,
    atkin_lehner_ideal,
)
from shimura_cert.quaternion.atkin_lehner import square_is_principal
from shimura_cert.quaternion.classes import _eichler_from
from shimura_cert.quaternion.lattice import determinant, gram_matrix, hnf, lll_gram, short_vectors
from shimura_cert.shimura_graph.modular import label_classes


@lru_cache(maxsize=None)
def classes(q):
    return tuple(maximal_classes(maximal_order(build_algebra(q))))


def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


# -- algebra -------------------------------------------------------------------

@pytest.mark.parametrize("q", [7, 11, 251])
def test_algebra_ramification(q):
    alg = build_algebra(q)
    assert (alg.a, alg.b) == (-1, -q)
    assert hilbert_symbol(-1, -q, "inf") == -1
    assert hilbert_symbol(-1, -q, q) == -1
    for ell in (2, 3, 5, 13, 137):
        if ell != q:
            assert hilbert_symbol(-1, -q, ell) == 1


def test_build_algebra_rejects_q_1_mod_4():
    with pytest.raises(ValueError):
        build_algebra(13)


@given(st.lists(st.integers(-50, 50), min_size=4, max_size=4), st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_norm_is_multiplicative(x, y):
    alg = build_algebra(251)
    assert alg.norm(alg.mul(x, y)) == alg.norm(x) * alg.norm(y)
    assert alg.mul(x, alg.conj(x)) == (alg.norm(x), 0, 0, 0)
    a, b = alg.element(*x), alg.element(*y)
    assert (a * b).conjugate().coords == (b.conjugate() * a.conjugate()).coords


@pytest.mark.parametrize("q", [7, 11, 23, 251])
def test_maximal_order_discriminant(q):
    O = maximal_order(build_algebra(q))
    assert O.reduced_discriminant == q
    assert O.level == 1


# -- lattice helpers --------------------------------------------------------------

@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_lll_preserves_determinant_and_short_vectors(rows):
    if determinant(rows) == 0:
        return
    G = gram_matrix(rows, (1, 1, 1))
    T, G2 = lll_gram(G)
    assert abs(determinant(T)) == 1
    assert determinant(G2) == determinant(G)
    # the shortest vector is found by enumeration in both bases
    def qf(M, x):
        return sum(x[i] * M[i][j] * x[j] for i in range(3) for j in range(3))

    m1 = min(qf(G, x) for x in short_vectors(G, G[0][0]))
    m2 = min(qf(G2, x) for x in short_vectors(G2, G2[0][0]))
    assert m1 == m2
    # brute force over a box that certainly contains a shortest vector
    box = range(-3, 4)
    brute = min(qf(G, (a, b, c)) for a in box for b in box for c in box if (a, b, c) != (0, 0, 0))
    assert m1 <= brute


def test_hnf_is_triangular():
    H = hnf([[2, 4, 6], [1, 1, 1], [0, 3, 9]])
    for i, row in enumerate(H):
        assert all(x == 0 for x in row[:i])


# -- class sets --------------------------------------------------------------------

@pytest.mark.parametrize("q, weights", [(7, [2]), (11, [2, 3]), (23, [1, 2, 3])])
def test_small_class_sets(q, weights):
    cl = classes(q)
    assert sorted(c.unit_weight for c in cl) == weights
    assert sum(Fraction(1, 2 * c.unit_weight) for c in cl) == Fraction(q - 1, 24)


def test_q11_two_classes():
    assert sorted(c.unit_weight for c in classes(11)) == [2, 3]


def test_q251_class_set():
    cl = classes(251)
    ws = sorted(c.unit_weight for c in cl)
    assert len(cl) == 22
    assert ws == [1] * 20 + [2, 3]
    assert sum(Fraction(1, 2 * w) for w in ws) == Fraction(250, 24)


def test_level_two_classes_q11():
    O = maximal_order(build_algebra(11))
    R = _eichler_from(O, 2)
    assert sorted(c.unit_weight for c in right_ideal_classes(R)) == [1, 1, 2]


@pytest.mark.parametrize("q, p", [(11, 3), (11, 13), (23, 5)])
def test_eichler_order_and_mass(q, p):
    O = maximal_order(build_algebra(q))
    R = eichler_order(O, p)
    assert R.reduced_discriminant == p * q
    assert R.level == p
    cl = right_ideal_classes(R)
    assert sum(Fraction(1, 2 * c.unit_weight) for c in cl) == Fraction((p + 1) * (q - 1), 24)


def test_eichler_order_rejects_bad_levels():
    O = maximal_order(build_algebra(11))
    with pytest.raises(ValueError):
        eichler_order(O, 11)
    with pytest.raises(ValueError):
        eichler_order(O, 2)


# -- Brandt matrices ---------------------------------------------------------------

NS = [2, 3, 5, 7, 11, 13]


@pytest.mark.parametrize("q", [11, 23, 251])
def test_brandt_consistency(q):
    cl = list(classes(q))
    ns = [n for n in NS if n != q]
    prods = sorted({m * n for m in ns for n in ns if m < n and m * n <= 30})
    B = brandt_matrices(cl, ns + prods)
    E = eisenstein_weights(cl)
    h = len(cl)
    for n in ns:
        M = B[n].as_lists()
        assert all(x >= 0 for row in M for x in row)
        assert all(sum(row) == n + 1 for row in M)
        assert [sum(E[i] * M[i][j] for i in range(h)) for j in range(h)] == [(n + 1) * e for e in E]
        # self-adjoint for the pairing diag(1/w)
        assert all(E[i] * M[i][j] == E[j] * M[j][i] for i in range(h) for j in range(h))
    for m in ns:
        for n in ns:
            if m < n and m * n in B:
                assert mat_mul(B[m].as_lists(), B[n].as_lists()) == B[m * n].as_lists()
                assert mat_mul(B[m].as_lists(), B[n].as_lists()) == mat_mul(B[n].as_lists(), B[m].as_lists())


def test_brandt_rejects_non_coprime_index():
    with pytest.raises(ValueError):
        brandt_matrix(list(classes(11)), 11)


# -- embeddings ----------------------------------------------------------------------

def _labels_251():
    cl = list(classes(251))
    B = brandt_matrices(cl, [2, 3])
    labels, _ = label_classes({n: b.as_lists() for n, b in B.items()}, [c.unit_weight for c in cl], 251)
    return cl, labels


def test_embedding_supports_match_class_polynomials():
    cl, labels = _labels_251()
    want = {4: {1728 % 251}, 28: {64}, 36: {64, (-19) % 251}, 267: {(-19) % 251, (-29) % 251}}
    for D, roots in want.items():
        support = {i for i, c in enumerate(cl) if optimal_embedding_count(c, D)}
        assert {labels[i].a0 for i in support} == roots
        assert all(labels[i].is_rational() for i in support)
    # Z[i] embeds only into the order with extra units
    assert [c.unit_weight for c in cl if optimal_embedding_count(c, 4)] == [2]


@pytest.mark.parametrize("q", [11, 23, 251])
def test_embedding_sum_formula(q):
    cl = classes(q)
    for D in (3, 4, 7, 8, 11, 15, 19, 20, 23, 24, 28, 36, 43, 267):
        total = sum(optimal_embedding_count(c, D) for c in cl)
        assert total == class_number(D) * (1 - kronecker(-D, q)), (q, D)


def test_embedding_counts_vanish_when_q_splits():
    O = maximal_order(build_algebra(251))
    for D, n in embedding_counts(O, [3, 4, 7, 8, 11, 15, 19, 20]).items():
        if kronecker(-D, 251) == 1:
            assert n == 0


# -- Atkin-Lehner ---------------------------------------------------------------------

def test_atkin_lehner_ideal_q11_p3():
    O = maximal_order(build_algebra(11))
    R = eichler_order(O, 3)
    for ell in (3, 11):
        I = atkin_lehner_ideal(R, ell)
        assert I.index_in(R) == ell * ell
        assert square_is_principal(R, ell)
    with pytest.raises(ValueError):
        atkin_lehner_ideal(R, 5)


def test_w_q_on_maximal_classes_is_frobenius():
    cl, labels = _labels_251()
    perm = class_permutation(cl, 251)
    assert all(perm[perm[i]] == i for i in range(len(cl)))
    for i, k in enumerate(perm):
        assert labels[k] == labels[i].frobenius()
