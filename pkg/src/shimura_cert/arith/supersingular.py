"""Supersingular j-invariants in characteristic q via the Legendre family."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .fields import QuadExtElem, check_odd_prime
from .poly import DEFAULT_SEED, PolyFq, factor_low_degree, interpolate, poly_gcd, poly_roots_in_Fq2, resultant


def hasse_polynomial(q: int) -> PolyFq:
    """H(t) = sum_i C(m, i)^2 t^i with m = (q-1)/2; its roots are the supersingular lambdas."""
    check_odd_prime(q)
    m = (q - 1) // 2
    return PolyFq([comb(m, i) ** 2 for i in range(m + 1)], q)


def expected_supersingular_count(q: int) -> int:
    return q // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[q % 12]


@dataclass(frozen=True)
class SupersingularPolynomial:
    q: int
    poly: PolyFq
    linear_roots: tuple[int, ...]
    quadratic_factors: tuple[PolyFq, ...]
    seed: int

    @property
    def degree(self) -> int:
        return self.poly.degree

    def roots(self) -> list[QuadExtElem]:
        return poly_roots_in_Fq2(self.poly, self.seed)


def _lambda_to_j_numerator(q: int, j: int) -> PolyFq:
    # 256 (t^2 - t + 1)^3 - j t^2 (t - 1)^2
    base = PolyFq([1, -1, 1], q)
    cube = base * base * base * 256
    return cube - PolyFq([0, 0, 1], q) * PolyFq([1, -1], q) * PolyFq([1, -1], q) * j


@lru_cache(maxsize=None)
def supersingular_polynomial(q: int, seed: int = DEFAULT_SEED) -> SupersingularPolynomial:
    """Monic polynomial over F_q vanishing exactly on the supersingular j-invariants.

    R(j) = Res_t(H(t), 256(t^2-t+1)^3 - j t^2 (t-1)^2) has degree (q-1)/2 in j and
    vanishes at j(lambda) for every supersingular lambda; it is recovered by
    interpolation and its radical is the supersingular polynomial.
    """
    check_odd_prime(q)
    if q <= 3:
        raise ValueError("characteristic must exceed 3")
    H = hasse_polynomial(q)
    m = H.degree
    xs = list(range(m + 1))
    ys = [resultant(H, _lambda_to_j_numerator(q, x)) for x in xs]
    R = interpolate(xs, ys, q)
    if R.degree != m:
        raise AssertionError("resultant has unexpected degree")
    ss = (R // poly_gcd(R, R.derivative())).monic()
    if ss.degree != expected_supersingular_count(q):
        raise AssertionError("supersingular polynomial has the wrong degree")
    factors, rest = factor_low_degree(ss, seed)
    if rest.degree != 0 or any(mult != 1 for _, mult in factors):
        raise AssertionError("supersingular polynomial does not split over F_{q^2}")
    linear = tuple(sorted((-f.coeffs[0]) % q for f, _ in factors if f.degree == 1))
    quadratic = tuple(f for f, _ in factors if f.degree == 2)
    return SupersingularPolynomial(q, ss, linear, quadratic, seed)


def supersingular_j_invariants(q: int, seed: int = DEFAULT_SEED) -> list[QuadExtElem]:
    """Supersingular j-invariants, F_q-rational ones first."""
    return supersingular_polynomial(q, seed).roots()
