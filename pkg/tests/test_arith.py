from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st
from sympy import factorint, jacobi_symbol, primerange

from shimura_cert.arith import (
    PolyFq,
    QuadDiscriminant,
    QuadExtElem,
    class_number,
    expected_supersingular_count,
    kronecker,
    poly_roots_in_Fq2,
    reduced_forms,
    supersingular_polynomial,
)
from shimura_cert.arith.fields import PrimeFieldElem

from reference import LINEAR_ROOTS_251, QUADRATIC_FACTORS_251

ODD_PRIMES = list(primerange(3, 400))


# -- kronecker ---------------------------------------------------------------

def test_kronecker_examples():
    assert kronecker(251, 137) == -1
    assert kronecker(-7, 137) == 1
    assert all(kronecker(a, 1) == 1 for a in range(-20, 20))
    with pytest.raises(ValueError):
        kronecker(3, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.sampled_from(ODD_PRIMES))
def test_kronecker_multiplicative_in_top(a, b, n):
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


@given(st.integers(-10**4, 10**4), st.integers(-500, 500).filter(bool), st.integers(-500, 500).filter(bool))
def test_kronecker_multiplicative_in_bottom(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@given(st.integers(-10**6, 10**6), st.integers(1, 5000).map(lambda k: 2 * k + 1))
def test_kronecker_matches_jacobi_for_odd_moduli(a, n):
    assert kronecker(a, n) == jacobi_symbol(a % n, n)


def test_kronecker_at_two():
    for a in range(-50, 50):
        expect = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        assert kronecker(a, 2) == expect


# -- class numbers -------------------------------------------------------------

def _chi_table(d: int, upto: int) -> list[int]:
    """chi_d(n) = (d/n) for n <= upto, d a negative fundamental discriminant, by multiplicativity."""
    spf = list(range(upto + 1))
    for i in range(2, int(upto ** 0.5) + 1):
        if spf[i] == i:
            for k in range(i * i, upto + 1, i):
                if spf[k] == k:
                    spf[k] = i
    chi = [0] * (upto + 1)
    if upto >= 1:
        chi[1] = 1
    for n in range(2, upto + 1):
        ell = spf[n]
        if ell == n:
            if ell == 2:
                chi[n] = 0 if d % 2 == 0 else (1 if d % 8 in (1, 7) else -1)
            else:
                r = d % ell
                chi[n] = 0 if r == 0 else (1 if pow(r, (ell - 1) // 2, ell) == 1 else -1)
        else:
            chi[n] = chi[ell] * chi[n // ell]
    return chi


def _fundamental_h(d: int) -> int:
    """Dirichlet's class number formula for a negative fundamental discriminant -d."""
    if d == 3:
        return 1
    if d == 4:
        return 1
    chi = _chi_table(-d, d)
    s = sum(chi[n] * n for n in range(1, d))
    h = Fraction(-s, d)
    assert h.denominator == 1
    return int(h)


def _is_fundamental(d: int) -> bool:
    if d % 4 == 3:
        return all(e == 1 for e in factorint(d).values())
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (1, 2) and all(e == 1 for e in factorint(m).values())
    return False


def _split(D: int):
    for c in sorted({c for c in range(1, int(D ** 0.5) + 1) if D % (c * c) == 0}, reverse=True):
        d = D // (c * c)
        if _is_fundamental(d):
            return d, c
    raise AssertionError(D)


def oracle_class_number(D: int, cache={}) -> int:
    d, c = _split(D)
    if d not in cache:
        cache[d] = _fundamental_h(d)
    h = Fraction(cache[d])
    if c == 1:
        return int(h)
    units = {3: 3, 4: 2}.get(d, 1)  # [O_K^* : O^*]
    h *= c
    h /= units
    for ell in factorint(c):
        h *= 1 - Fraction(kronecker(-d, ell), ell)
    assert h.denominator == 1
    return int(h)


def test_class_number_examples():
    assert class_number(QuadDiscriminant(4)) == 1
    assert class_number(QuadDiscriminant(28)) == 1
    assert class_number(QuadDiscriminant(251)) == 7
    assert class_number(163) == 1
    with pytest.raises(ValueError):
        class_number(5)


def test_class_numbers_agree_with_dirichlet_formula_up_to_10000():
    for D in range(3, 10001):
        if (-D) % 4 in (0, 1):
            assert class_number(D) == oracle_class_number(D), D


def test_reduced_forms_are_reduced():
    for D in (3, 4, 23, 47, 251, 1000, 9999):
        for a, b, c in reduced_forms(D):
            assert b * b - 4 * a * c == -D
            assert abs(b) <= a <= c and gcd(gcd(a, b), c) == 1


def test_discriminant_decomposition():
    q = QuadDiscriminant(36)
    assert (q.fundamental, q.conductor) == (4, 3)
    q = QuadDiscriminant(28)
    assert (q.fundamental, q.conductor) == (7, 2)
    assert QuadDiscriminant(267).conductor == 1
    with pytest.raises(ValueError):
        QuadDiscriminant(6)


@given(st.integers(3, 20000).filter(lambda D: (-D) % 4 in (0, 1)))
def test_discriminant_invariant(D):
    q = QuadDiscriminant(D)
    assert q.fundamental * q.conductor ** 2 == D
    assert _is_fundamental(q.fundamental)


# -- finite fields and polynomials ------------------------------------------------

@given(st.sampled_from([11, 23, 251]), st.integers(0, 10**6), st.integers(0, 10**6),
       st.integers(0, 10**6), st.integers(0, 10**6))
def test_quadratic_extension_norm_and_frobenius(q, a, b, c, d):
    x, y = QuadExtElem(a, b, q), QuadExtElem(c, d, q)
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.frobenius().frobenius() == x
    assert x ** q == x.frobenius()
    assert (x * y).frobenius() == x.frobenius() * y.frobenius()


@given(st.sampled_from([7, 11, 251]), st.integers(0, 10**4), st.integers(0, 10**4), st.integers(0, 10**4))
def test_prime_field_ring_axioms(q, a, b, c):
    x, y, z = (PrimeFieldElem(v, q) for v in (a, b, c))
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if x.value:
        assert x * x.inverse() == PrimeFieldElem(1, q)


def test_supersingular_polynomial_251_factorisation():
    ss = supersingular_polynomial(251)
    assert ss.degree == 22 == expected_supersingular_count(251)
    # linear factors (j - r) with r the negated displayed constants
    want_roots = sorted((-c) % 251 for c in [0, 29, 19, -64, -4, -24, -30, -35, -101, 112, 66, 52, 44, 38])
    assert sorted(ss.linear_roots) == want_roots
    assert sorted(r % 251 for r in LINEAR_ROOTS_251) == want_roots
    got = sorted(f.coeffs for f in ss.quadratic_factors)
    want = sorted(PolyFq([c, b, 1], 251).coeffs for b, c in QUADRATIC_FACTORS_251)
    assert got == want
    prod = PolyFq.from_roots(want_roots, 251)
    for b, c in QUADRATIC_FACTORS_251:
        prod = prod * PolyFq([c, b, 1], 251)
    assert prod == ss.poly
    assert (-29) % 251 == 1728 % 251


def test_supersingular_small_q():
    assert sorted(supersingular_polynomial(11).linear_roots) == [0, 1]
    for q in (5, 7, 11, 13, 23, 47, 59, 101):
        ss = supersingular_polynomial(q)
        assert ss.degree == expected_supersingular_count(q)
        for r in ss.roots():
            assert r ** (q * q) == r
    with pytest.raises(ValueError):
        supersingular_polynomial(3)


def test_roots_in_fq2():
    assert poly_roots_in_Fq2(PolyFq([-64, 1], 251)) == [QuadExtElem(64, 0, 251)]
    f = PolyFq([-81, -60, 1], 251)
    r1, r2 = poly_roots_in_Fq2(f)
    assert r1.frobenius() == r2 and not r1.is_rational()
    for r in (r1, r2):
        assert r * r - 60 * r - 81 == 0
    roots = supersingular_polynomial(251).roots()
    assert len(set(roots)) == 22
    with pytest.raises(ValueError):
        poly_roots_in_Fq2(PolyFq([], 251))
