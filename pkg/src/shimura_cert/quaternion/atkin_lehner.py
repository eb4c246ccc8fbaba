"""Two-sided ideals above primes dividing the discriminant and their action on classes."""

from __future__ import annotations

from fractions import Fraction

from .classes import RightIdealClass, algebra_prime, isomorphism, reduce_ideal, theta_bound, theta_series
from .local import LocalQuotient
from .order import Lattice, OrderLattice


def atkin_lehner_ideal(order: OrderLattice, ell: int) -> Lattice:
    """The integral two-sided ideal of reduced norm ell, for ell dividing the discriminant."""
    if order.reduced_discriminant % ell:
        raise ValueError(f"{ell} does not divide the discriminant {order.reduced_discriminant}")
    P = LocalQuotient(order, ell).two_sided_radical()
    if P.covolume != order.covolume * ell * ell:
        raise AssertionError("two-sided ideal has the wrong index")
    if not (P.contains_lattice(order * P) and P.contains_lattice(P * order)):
        raise AssertionError("ideal is not two-sided")
    return P


def identify_class(classes: list[RightIdealClass], ideal: Lattice, norm) -> tuple[int, tuple]:
    """(k, a) with ideal = I_k a."""
    q = algebra_prime(classes[0].right_order)
    bound = theta_bound(q)
    th = theta_series(ideal, norm, bound)
    for c in classes:
        if not c.theta:
            c.theta = theta_series(c.ideal, c.norm, bound)
    for c in classes:
        if c.theta == th:
            a = isomorphism(c.ideal, c.norm, ideal, norm)
            if a is not None:
                return c.index, a
    raise AssertionError("ideal matches no class")


def class_permutation(classes: list[RightIdealClass], ell: int) -> list[int]:
    """Image of each class under I -> I P, P the two-sided ideal of norm ell of O_r(I)."""
    perm = []
    for c in classes:
        P = atkin_lehner_ideal(c.right_order, ell)
        J, NJ = reduce_ideal(c.ideal * P, c.norm * ell)
        perm.append(identify_class(classes, J, NJ)[0])
    if sorted(perm) != list(range(len(classes))) or any(perm[perm[i]] != i for i in range(len(perm))):
        raise AssertionError("Atkin-Lehner action is not an involution")
    return perm


def square_is_principal(order: OrderLattice, ell: int) -> bool:
    """P^2 = ell O."""
    P = atkin_lehner_ideal(order, ell)
    return P * P == order.scale(Fraction(ell))
