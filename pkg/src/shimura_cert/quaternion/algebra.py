"""Definite rational quaternion algebras (a, b) with a, b < 0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime

from ..arith.quadratic import kronecker

Vec = tuple[int, int, int, int]


def hilbert_symbol(a: int, b: int, ell) -> int:
    """Local Hilbert symbol (a, b)_ell for nonzero integers; ell a prime or 'inf'."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if ell == "inf":
        return -1 if (a < 0 and b < 0) else 1

    def split(x):
        v = 0
        while x % ell == 0:
            x //= ell
            v += 1
        return v, x

    alpha, u = split(a)
    beta, v = split(b)
    if ell == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((ell - 1) // 2)) % 2 else 1
    return sign * kronecker(u, ell) ** beta * kronecker(v, ell) ** alpha


@dataclass(frozen=True)
class QuaternionAlgebra:
    """B = Q<i, j> with i^2 = a, j^2 = b, ij = -ji; k denotes ij."""

    a: int
    b: int

    def __post_init__(self):
        if self.a >= 0 or self.b >= 0:
            raise ValueError("only definite algebras (a, b < 0) are supported")

    @property
    def norm_weights(self) -> Vec:
        return (1, -self.a, -self.b, self.a * self.b)

    @property
    def ramified(self) -> tuple:
        """Places where the algebra is a division algebra, finite primes first."""
        out = [ell for ell in sorted(set(factorint(2 * abs(self.a * self.b))))
               if hilbert_symbol(self.a, self.b, ell) == -1]
        return tuple(out) + ("inf",)

    @property
    def discriminant(self) -> int:
        d = 1
        for ell in self.ramified[:-1]:
            d *= ell
        return d

    def mul(self, x, y) -> Vec:
        """Product of coordinate vectors (works for ints or Fractions)."""
        a, b = self.a, self.b
        x0, x1, x2, x3 = x
        y0, y1, y2, y3 = y
        return (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    def norm(self, x):
        w = self.norm_weights
        return sum(wi * xi * xi for wi, xi in zip(w, x))

    @staticmethod
    def trace(x):
        return 2 * x[0]

    @staticmethod
    def conj(x):
        return (x[0], -x[1], -x[2], -x[3])

    def element(self, *coords) -> Quaternion:
        return Quaternion(self, tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class Quaternion:
    alg: QuaternionAlgebra
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.alg, self.alg.mul(self.coords, other.coords))
        return Quaternion(self.alg, tuple(c * other for c in self.coords))

    __rmul__ = __mul__

    def __add__(self, other):
        return Quaternion(self.alg, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Quaternion(self.alg, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Quaternion(self.alg, tuple(-x for x in self.coords))

    def norm(self) -> Fraction:
        return self.alg.norm(self.coords)

    def trace(self) -> Fraction:
        return 2 * self.coords[0]

    def conjugate(self):
        return Quaternion(self.alg, self.alg.conj(self.coords))

    def inverse(self):
        n = self.norm()
        return Quaternion(self.alg, tuple(c / n for c in self.alg.conj(self.coords)))

    def __repr__(self):
        names = ("", "i", "j", "k")
        parts = [f"{c}{n}" for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


def build_algebra(q: int) -> QuaternionAlgebra:
    """The algebra (-1, -q) ramified exactly at q and infinity, for a prime q = 3 mod 4."""
    if not isprime(q) or q % 4 != 3:
        raise ValueError(f"q = {q} must be a prime congruent to 3 mod 4")
    alg = QuaternionAlgebra(-1, -q)
    if alg.ramified != (q, "inf"):
        raise AssertionError(f"unexpected ramification {alg.ramified}")
    return alg
