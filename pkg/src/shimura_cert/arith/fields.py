"""Prime fields F_q and their quadratic extensions F_{q^2}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime


def check_odd_prime(q: int) -> None:
    if q < 3 or not isprime(q):
        raise ValueError(f"{q} is not an odd prime")


@lru_cache(maxsize=None)
def smallest_nonresidue(q: int) -> int:
    check_odd_prime(q)
    for n in range(2, q):
        if pow(n, (q - 1) // 2, q) == q - 1:
            return n
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class PrimeFieldElem:
    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return PrimeFieldElem(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return PrimeFieldElem(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        return PrimeFieldElem(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        return PrimeFieldElem(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.modulus)

    def inverse(self) -> PrimeFieldElem:
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0")
        return PrimeFieldElem(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * PrimeFieldElem(o, self.modulus).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElem(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def centered(self) -> int:
        """Representative in (-q/2, q/2]."""
        v = self.value
        return v - self.modulus if v > self.modulus // 2 else v

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class QuadExtElem:
    """Element a0 + a1*s of F_{q^2}, where s^2 is the least non-residue mod q."""

    a0: int
    a1: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "a0", self.a0 % self.modulus)
        object.__setattr__(self, "a1", self.a1 % self.modulus)

    @classmethod
    def from_base(cls, value, q: int) -> QuadExtElem:
        if isinstance(value, PrimeFieldElem):
            value = value.value
        return cls(value, 0, q)

    @property
    def nonresidue(self) -> int:
        return smallest_nonresidue(self.modulus)

    def _coerce(self, other) -> QuadExtElem:
        if isinstance(other, QuadExtElem):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, (int, PrimeFieldElem)):
            return QuadExtElem.from_base(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExtElem(self.a0 + o.a0, self.a1 + o.a1, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return QuadExtElem(self.a0 - o.a0, self.a1 - o.a1, self.modulus)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return QuadExtElem(-self.a0, -self.a1, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        n = self.nonresidue
        return QuadExtElem(
            self.a0 * o.a0 + n * self.a1 * o.a1,
            self.a0 * o.a1 + self.a1 * o.a0,
            self.modulus,
        )

    __rmul__ = __mul__

    def norm(self) -> PrimeFieldElem:
        return PrimeFieldElem(self.a0 * self.a0 - self.nonresidue * self.a1 * self.a1, self.modulus)

    def frobenius(self) -> QuadExtElem:
        # s^q = -s because s^(q-1) = n^((q-1)/2) = -1
        return QuadExtElem(self.a0, -self.a1, self.modulus)

    def inverse(self) -> QuadExtElem:
        nm = self.norm()
        if nm.value == 0:
            raise ZeroDivisionError("inverse of 0")
        c = self.frobenius()
        t = pow(nm.value, -1, self.modulus)
        return QuadExtElem(c.a0 * t, c.a1 * t, self.modulus)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadExtElem(1, 0, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return self.a1 == 0

    def __eq__(self, other):
        if isinstance(other, QuadExtElem):
            return (self.modulus, self.a0, self.a1) == (other.modulus, other.a0, other.a1)
        if isinstance(other, (int, PrimeFieldElem)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.a0, self.a1, self.modulus))

    def sort_key(self):
        return (self.a1 != 0, self.a1, self.a0)

    def __repr__(self):
        if self.a1 == 0:
            return f"{self.a0}"
        return f"{self.a0}+{self.a1}*s"
