"""Rank-4 lattices in a quaternion algebra, orders, and ideals.

A lattice is stored as an integer HNF basis (rows in the 1, i, j, k coordinates)
together with a common positive denominator.  Elements travel as pairs
(integer 4-vector, denominator).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

from .algebra import Quaternion, QuaternionAlgebra
from .lattice import determinant, gram_matrix, hnf, lll_gram, short_vectors, solve_triangular

Elem = tuple[tuple[int, int, int, int], int]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def as_elem(x) -> Elem:
    """Convert a Quaternion, Fraction 4-tuple or (vec, den) pair to (vec, den)."""
    if isinstance(x, Quaternion):
        x = x.coords
    if len(x) == 2 and isinstance(x[1], int) and not isinstance(x[0], (int, Fraction)):
        return tuple(x[0]), x[1]
    fr = [Fraction(c) for c in x]
    den = 1
    for c in fr:
        den = _lcm(den, c.denominator)
    return tuple(int(c * den) for c in fr), den


class Lattice:
    """A full-rank Z-lattice in the algebra."""

    def __init__(self, alg: QuaternionAlgebra, rows, denom: int = 1):
        H = hnf(rows)
        if len(H) != 4:
            raise ValueError("lattice is not of full rank")
        g = denom
        for r in H:
            for x in r:
                g = gcd(g, x)
        self.alg = alg
        self.rows = tuple(tuple(x // g for x in r) for r in H)
        self.denom = denom // g

    @classmethod
    def from_elements(cls, alg: QuaternionAlgebra, elems) -> Lattice:
        elems = [as_elem(e) for e in elems]
        den = 1
        for _, d in elems:
            den = _lcm(den, d)
        rows = [[x * (den // d) for x in v] for v, d in elems]
        return cls(alg, rows, den)

    # -- basic data -------------------------------------------------------
    def basis(self) -> list[Quaternion]:
        return [Quaternion(self.alg, tuple(Fraction(x, self.denom) for x in r)) for r in self.rows]

    def basis_elems(self) -> list[Elem]:
        return [(r, self.denom) for r in self.rows]

    @cached_property
    def covolume(self) -> Fraction:
        """Index-like volume relative to Z<1, i, j, k>."""
        d = 1
        for i, r in enumerate(self.rows):
            d *= r[i]
        return Fraction(abs(d), self.denom ** 4)

    @cached_property
    def gram(self) -> list[list[int]]:
        """Integer Gram matrix G with N(sum c_r b_r) = c G c^t / denom^2."""
        return gram_matrix([list(r) for r in self.rows], self.alg.norm_weights)

    @cached_property
    def reduced(self) -> tuple[list[list[int]], list[list[int]]]:
        """LLL transform and reduced Gram matrix."""
        return lll_gram(self.gram)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.rows == other.rows and self.denom == other.denom

    def __hash__(self):
        return hash((self.rows, self.denom))

    def __repr__(self):
        return f"Lattice(rows={self.rows}, denom={self.denom})"

    # -- membership -------------------------------------------------------
    def coords(self, x) -> list[int] | None:
        """Integer coordinates of x in the HNF basis, or None if x is not in the lattice."""
        v, d = as_elem(x)
        num = [c * self.denom for c in v]
        if any(c % d for c in num):
            return None
        return solve_triangular([list(r) for r in self.rows], [c // d for c in num])

    def __contains__(self, x) -> bool:
        return self.coords(x) is not None

    def contains_lattice(self, other: Lattice) -> bool:
        return all(self.coords(e) is not None for e in other.basis_elems())

    def index_in(self, other: Lattice) -> Fraction:
        return self.covolume / other.covolume

    # -- arithmetic -------------------------------------------------------
    def __mul__(self, other: Lattice) -> Lattice:
        mul = self.alg.mul
        rows = [mul(r, s) for r in self.rows for s in other.rows]
        return Lattice(self.alg, rows, self.denom * other.denom)

    def conjugate(self) -> Lattice:
        return Lattice(self.alg, [self.alg.conj(r) for r in self.rows], self.denom)

    def scale(self, c) -> Lattice:
        c = Fraction(c)
        return Lattice(self.alg, [[x * c.numerator for x in r] for r in self.rows], self.denom * c.denominator)

    def right_mul(self, x) -> Lattice:
        v, d = as_elem(x)
        return Lattice(self.alg, [self.alg.mul(r, v) for r in self.rows], self.denom * d)

    def left_mul(self, x) -> Lattice:
        v, d = as_elem(x)
        return Lattice(self.alg, [self.alg.mul(v, r) for r in self.rows], self.denom * d)

    def __add__(self, other: Lattice) -> Lattice:
        den = _lcm(self.denom, other.denom)
        rows = [[x * (den // self.denom) for x in r] for r in self.rows]
        rows += [[x * (den // other.denom) for x in r] for r in other.rows]
        return Lattice(self.alg, rows, den)

    def map_coords(self, signs) -> Lattice:
        """Apply a signed coordinate permutation-free map (x_k -> signs_k x_k)."""
        return Lattice(self.alg, [[s * x for s, x in zip(signs, r)] for r in self.rows], self.denom)

    # -- enumeration ------------------------------------------------------
    def vectors_up_to(self, norm_bound: Fraction) -> list[tuple[Elem, Fraction]]:
        """Nonzero elements with reduced norm <= norm_bound, with their norms."""
        T, Gr = self.reduced
        d2 = self.denom ** 2
        nb = Fraction(norm_bound) * d2
        bound = nb.numerator // nb.denominator
        out = []
        for c in short_vectors(Gr, bound):
            val = sum(c[a] * Gr[a][b] * c[b] for a in range(4) for b in range(4))
            out.append((self._elem_from_reduced(T, c), Fraction(val, d2)))
        return out

    def vectors_of_norm(self, n) -> list[Elem]:
        n = Fraction(n) * self.denom ** 2
        if n.denominator != 1:
            return []
        T, Gr = self.reduced
        return [self._elem_from_reduced(T, c) for c in short_vectors(Gr, int(n), exact=int(n))]

    def norm_counts(self, scale, nmax: int) -> list[int]:
        """counts[m] = #{x : N(x) = m * scale} for 0 < m <= nmax (counts[0] = 0)."""
        T, Gr = self.reduced
        unit = Fraction(scale) * self.denom ** 2
        counts = [0] * (nmax + 1)
        bound = unit * nmax
        for c in short_vectors(Gr, bound.numerator // bound.denominator):
            val = sum(c[a] * Gr[a][b] * c[b] for a in range(4) for b in range(4))
            m = Fraction(val) / unit
            if m.denominator == 1 and m <= nmax:
                counts[int(m)] += 1
        return counts

    def _elem_from_reduced(self, T, c) -> Elem:
        coeff = [sum(c[r] * T[r][s] for r in range(4)) for s in range(4)]
        v = tuple(sum(coeff[s] * self.rows[s][k] for s in range(4)) for k in range(4))
        return v, self.denom

    def minimal_norm(self) -> Fraction:
        _, Gr = self.reduced
        m = min(Gr[i][i] for i in range(4))
        vals = short_vectors(Gr, m)
        best = min(sum(c[a] * Gr[a][b] * c[b] for a in range(4) for b in range(4)) for c in vals)
        return Fraction(best, self.denom ** 2)


class OrderLattice(Lattice):
    """An order: a lattice that is a subring containing 1."""

    def __init__(self, alg, rows, denom=1, level: int = 1):
        super().__init__(alg, rows, denom)
        self.level = level

    @classmethod
    def from_lattice(cls, L: Lattice, level: int = 1) -> OrderLattice:
        return cls(L.alg, [list(r) for r in L.rows], L.denom, level)

    def check_ring(self) -> bool:
        one = ((1, 0, 0, 0), 1)
        if self.coords(one) is None:
            return False
        for r in self.rows:
            for s in self.rows:
                if self.coords((self.alg.mul(r, s), self.denom ** 2)) is None:
                    return False
        return True

    @cached_property
    def trace_form(self) -> list[list[Fraction]]:
        """Matrix of (x, y) -> Tr(x conj(y)) on the basis."""
        G = self.gram
        d2 = self.denom ** 2
        return [[Fraction(2 * G[r][s], d2) for s in range(4)] for r in range(4)]

    @cached_property
    def reduced_discriminant(self) -> int:
        """sqrt of |det Tr(b_r conj(b_s))|."""
        G = self.gram
        det = Fraction(determinant([[2 * x for x in r] for r in G]), self.denom ** 8)
        if det.denominator != 1:
            raise AssertionError("trace form of an order must be integral")
        d = isqrt(int(det))
        if d * d != det:
            raise AssertionError("discriminant is not a square")
        return d

    @cached_property
    def norm_form(self) -> dict[tuple[int, int], int]:
        """Integer coefficients n_rs (r <= s) of the reduced norm in basis coordinates."""
        G = self.gram
        d2 = self.denom ** 2
        out = {}
        for r in range(4):
            for s in range(r, 4):
                v = Fraction(G[r][s] * (1 if r == s else 2), d2)
                if v.denominator != 1:
                    raise AssertionError("norm form of an order must be integral")
                out[(r, s)] = int(v)
        return out

    @cached_property
    def units(self) -> list[Elem]:
        return self.vectors_of_norm(1)

    @property
    def unit_weight(self) -> int:
        """|units / +-1|."""
        return len(self.units) // 2

    @cached_property
    def structure_constants(self) -> list[list[list[int]]]:
        """c[r][s] = coordinates of b_r b_s in the basis."""
        out = []
        for r in self.rows:
            row = []
            for s in self.rows:
                c = self.coords((self.alg.mul(r, s), self.denom ** 2))
                if c is None:
                    raise AssertionError("lattice is not closed under multiplication")
                row.append(c)
            out.append(row)
        return out


def ideal_norm(ideal: Lattice, order: Lattice) -> Fraction:
    """Reduced norm of a lattice relative to an order: sqrt of the index."""
    idx = ideal.covolume / order.covolume
    num, den = isqrt(idx.numerator), isqrt(idx.denominator)
    if num * num != idx.numerator or den * den != idx.denominator:
        raise AssertionError("index is not a square")
    return Fraction(num, den)


def right_order(ideal: Lattice, norm) -> OrderLattice:
    """O_r(I) = conj(I) I / N(I)."""
    L = (ideal.conjugate() * ideal).scale(Fraction(1) / Fraction(norm))
    return OrderLattice.from_lattice(L)


def left_order(ideal: Lattice, norm) -> OrderLattice:
    L = (ideal * ideal.conjugate()).scale(Fraction(1) / Fraction(norm))
    return OrderLattice.from_lattice(L)


def maximal_order(alg: QuaternionAlgebra) -> OrderLattice:
    """Z<1, i, (i+j)/2, (1+ij)/2> for the algebra (-1, -q), q = 3 mod 4."""
    if alg.a != -1 or (-alg.b) % 4 != 3:
        raise ValueError("maximal_order expects the algebra (-1, -q) with q = 3 mod 4")
    O = OrderLattice(alg, [[2, 0, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]], 2, level=1)
    if O.reduced_discriminant != -alg.b:
        raise AssertionError("order is not maximal")
    return O
