"""Ideal class sets of maximal and Eichler orders.

Convention: ideals are lattices I with a fixed left order O (O I = I); two are
in the same class when J = I a for some a in B^*.  The class is then attached
to the (varying) right order O_r(I) = conj(I) I / N(I).  This is the mirror
image of the right-ideal convention under I -> conj(I).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from sympy import isprime, nextprime

from .local import Key, LocalQuotient
from .order import Elem, Lattice, OrderLattice, right_order

ALLOWED_WEIGHTS = (1, 2, 3)


class ClassSetError(RuntimeError):
    """Raised when a class set fails its mass check."""


@dataclass(eq=False)
class RightIdealClass:
    """One ideal class: a representative lattice, its right order and unit weight."""

    index: int
    ideal: Lattice
    norm: Fraction
    right_order: OrderLattice
    unit_weight: int
    theta: tuple[int, ...] = ()
    parent: tuple[int, Key] | None = None  # (vertex class, line) for level-p classes

    @property
    def representative(self) -> Lattice:
        return self.ideal

    @property
    def units(self) -> list[Elem]:
        return self.right_order.units


def algebra_prime(order: OrderLattice) -> int:
    return order.alg.discriminant


def default_neighbor_prime(q: int, p: int | None = None) -> int:
    """Smallest prime not dividing 2 p q."""
    ell = 3
    while q % ell == 0 or (p is not None and p % ell == 0):
        ell = nextprime(ell)
    return ell


def theta_bound(q: int) -> int:
    return max(4, isqrt(5 * q))


def theta_series(ideal: Lattice, norm, bound: int) -> tuple[int, ...]:
    """Counts of x in I with N(x) = m N(I), m = 1..bound (a class invariant)."""
    return tuple(ideal.norm_counts(norm, bound)[1:])


def isomorphism(I: Lattice, NI, J: Lattice, NJ) -> Elem | None:
    """a with J = I a if the classes agree, else None.

    Uses: I ~ J iff conj(I) J contains an element of norm N(I) N(J).
    """
    M = I.conjugate() * J
    target = Fraction(NI) * Fraction(NJ)
    vecs = M.vectors_of_norm(target)
    if not vecs:
        return None
    v, d = vecs[0]
    NI = Fraction(NI)
    return tuple(x * NI.denominator for x in v), d * NI.numerator


def reduce_ideal(I: Lattice, NI) -> tuple[Lattice, Fraction]:
    """An equivalent ideal of smallest norm: I conj(b) / N(I) for b shortest in I."""
    NI = Fraction(NI)
    best = None
    _, Gr = I.reduced
    m = min(Gr[i][i] for i in range(4))
    for e, n in I.vectors_up_to(Fraction(m, I.denom ** 2)):
        if best is None or n < best[1]:
            best = (e, n)
    (v, d), n = best
    cv = I.alg.conj(v)
    J = I.right_mul((cv, d)).scale(1 / NI)
    return J, n / NI


def make_class(index: int, ideal: Lattice, norm, q: int, parent=None, theta: bool = True) -> RightIdealClass:
    O_r = right_order(ideal, norm)
    w = O_r.unit_weight
    if w not in ALLOWED_WEIGHTS:
        raise ClassSetError(f"unexpected unit weight {w}")
    th = theta_series(ideal, norm, theta_bound(q)) if theta else ()
    return RightIdealClass(index, ideal, Fraction(norm), O_r, w, th, parent)


def maximal_classes(order: OrderLattice, ell: int | None = None) -> list[RightIdealClass]:
    """Class set of a maximal order by ell-neighbour breadth-first search."""
    q = algebra_prime(order)
    if ell is None:
        ell = default_neighbor_prime(q)
    if not isprime(ell) or ell == q:
        raise ValueError("neighbour prime must be a prime different from q")
    classes = [make_class(0, Lattice(order.alg, [list(r) for r in order.rows], order.denom), 1, q)]
    buckets: dict[tuple, list[int]] = {classes[0].theta: [0]}
    expected = Fraction(q - 1, 24)
    mass = Fraction(1, 2 * classes[0].unit_weight)
    head = 0
    while head < len(classes) and mass < expected:
        c = classes[head]
        head += 1
        lq = LocalQuotient(c.right_order, ell)
        for key in lq.lines():
            J = c.ideal * lq.lift(key)
            J, NJ = reduce_ideal(J, c.norm * ell)
            th = theta_series(J, NJ, theta_bound(q))
            found = False
            for k in buckets.get(th, []):
                if isomorphism(classes[k].ideal, classes[k].norm, J, NJ) is not None:
                    found = True
                    break
            if not found:
                new = make_class(len(classes), J, NJ, q)
                new.theta = th
                classes.append(new)
                buckets.setdefault(th, []).append(new.index)
                mass += Fraction(1, 2 * new.unit_weight)
                if mass > expected:
                    break
    if mass != expected:
        raise ClassSetError(f"mass {mass} differs from {expected}")
    return classes


@dataclass
class VertexLevelData:
    """The ell + 1 sub-ideals of one vertex class and the unit action on them."""

    vertex: int
    local: LocalQuotient
    units_mod: list[list[int]]
    orbit_of: list[int] = field(default_factory=list)  # line index -> orbit representative line index
    stabilizer: list[int] = field(default_factory=list)  # line index -> |stab / +-1|

    @property
    def lines(self) -> list[Key]:
        return self.local.lines()

    def orbit_reps(self) -> list[int]:
        return sorted(set(self.orbit_of))


def level_structure(classes: list[RightIdealClass], p: int) -> list[VertexLevelData]:
    """For each class, the norm-p sub-ideals modulo the action of the unit group."""
    out = []
    for c in classes:
        lq = LocalQuotient(c.right_order, p)
        lines = lq.lines()
        units = [lq.reduce(u) for u in c.right_order.units]
        n = len(lines)
        orbit_of = list(range(n))
        stab = [0] * n
        for i, key in enumerate(lines):
            images = set()
            for u in units:
                j = lq.index(lq.right_act(key, u))
                images.add(j)
                if j == i:
                    stab[i] += 1
            stab[i] //= 2
            orbit_of[i] = min(images)
        out.append(VertexLevelData(c.index, lq, units, orbit_of, stab))
    return out


def intersect(L1: Lattice, L2: Lattice) -> Lattice:
    """L1 cap L2 via the kernel of (x, y) -> x - y."""
    den = L1.denom * L2.denom
    B1 = [[x * L2.denom for x in r] for r in L1.rows]
    B2 = [[x * L1.denom for x in r] for r in L2.rows]
    from .lattice import hnf

    H = hnf([r + r for r in B1] + [r + [0] * 4 for r in B2])
    rows = [r[4:] for r in H if not any(r[:4])]
    return Lattice(L1.alg, rows, den)


def eichler_classes(order: OrderLattice, maximal: list[RightIdealClass] | None = None) -> list[RightIdealClass]:
    """Class set of an Eichler order of prime level built by eichler_order().

    Classes correspond to pairs (maximal class i, unit orbit of norm-p sub-ideals of I_i).
    """
    p = order.level
    base, key0 = order.ambient, order.line
    q = algebra_prime(order)
    if maximal is None:
        maximal = maximal_classes(base)
    lvl = level_structure(maximal, p)
    a0 = lvl[0].local.lift(key0)
    if lvl[0].local.eichler_order(key0) != order:
        raise ValueError("order does not match the base class data")
    a0inv = a0.conjugate().scale(Fraction(1, p))
    out = []
    mass = Fraction(0)
    for data in lvl:
        c = maximal[data.vertex]
        for li in data.orbit_reps():
            key = data.lines[li]
            J = c.ideal * data.local.lift(key)
            K = intersect(c.ideal, a0inv * J)
            R = data.local.eichler_order(key)
            w = data.stabilizer[li]
            cls = RightIdealClass(len(out), K, c.norm, R, w, (), (data.vertex, key))
            out.append(cls)
            mass += Fraction(1, 2 * w)
    expected = Fraction((p + 1) * (q - 1), 24)
    if mass != expected:
        raise ClassSetError(f"mass {mass} differs from {expected}")
    return out


def right_ideal_classes(order: OrderLattice, ell: int | None = None) -> list[RightIdealClass]:
    if order.level == 1:
        return maximal_classes(order, ell)
    if getattr(order, "ambient", None) is None:
        raise ValueError("Eichler orders must come from eichler_order()")
    return eichler_classes(order)


def _eichler_from(max_order: OrderLattice, p: int) -> OrderLattice:
    lq = LocalQuotient(max_order, p)
    key = lq.lines()[0]
    R = lq.eichler_order(key)
    R.ambient = max_order
    R.line = key
    return R


def eichler_order(max_order: OrderLattice, p: int) -> OrderLattice:
    """An Eichler order of level p inside max_order (p odd, p != q)."""
    q = algebra_prime(max_order)
    if not isprime(p) or p == 2 or p == q:
        raise ValueError(f"level p = {p} must be an odd prime different from q = {q}")
    R = _eichler_from(max_order, p)
    if R.reduced_discriminant != p * q:
        raise AssertionError("Eichler order has the wrong discriminant")
    return R
