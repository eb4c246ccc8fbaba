"""Kronecker symbols, imaginary quadratic discriminants and class numbers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from sympy import factorint, jacobi_symbol

CLASS_NUMBER_BOUND = 10**7


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for any integer a and nonzero integer n."""
    if n == 0:
        raise ValueError("Kronecker symbol (a/0) is not supported")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


@dataclass(frozen=True)
class QuadDiscriminant:
    """The imaginary quadratic discriminant -D, written -D = -d * c^2."""

    D: int

    def __post_init__(self):
        if self.D <= 0 or (-self.D) % 4 not in (0, 1):
            raise ValueError(f"-{self.D} is not an imaginary quadratic discriminant")

    @property
    def conductor(self) -> int:
        return fundamental_part(self.D)[1]

    @property
    def fundamental(self) -> int:
        """d, so that -d is the fundamental discriminant."""
        return fundamental_part(self.D)[0]

    @property
    def trace_parity(self) -> int:
        return self.D % 2

    @property
    def generator_norm(self) -> int:
        """Norm of (t + sqrt(-D))/2 with t = D mod 2."""
        t = self.trace_parity
        return (t * t + self.D) // 4

    @property
    def unit_count(self) -> int:
        return {3: 6, 4: 4}.get(self.D, 2)

    def __int__(self):
        return self.D


def fundamental_part(D: int) -> tuple[int, int]:
    """(d, c) with -D = -d c^2 and -d a fundamental discriminant."""
    if D <= 0 or (-D) % 4 not in (0, 1):
        raise ValueError(f"-{D} is not a discriminant")
    c = 1
    for ell, e in factorint(D).items():
        c *= ell ** (e // 2)
    d = D // (c * c)
    # -d must be 1 mod 4 or 4 * (2, 3 mod 4)
    if (-d) % 4 != 1:
        if c % 2 == 0 and (d % 4) in (1, 2):
            c //= 2
            d *= 4
        elif d % 4 in (1, 2):
            raise AssertionError("unreachable for a valid discriminant")
    return d, c


def field_discriminant(m: int) -> int:
    """D such that -D is the discriminant of Q(sqrt(-m)), for squarefree m > 0."""
    return m if m % 4 == 3 else 4 * m


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """Primitive reduced positive definite forms (a, b, c) of discriminant -D."""
    QuadDiscriminant(D)
    forms = []
    a = 1
    while 3 * a * a <= D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b + D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def class_number(disc, bound: int = CLASS_NUMBER_BOUND) -> int:
    """h(-D): number of classes of primitive forms of discriminant -D."""
    D = int(disc)
    QuadDiscriminant(D)
    if D > bound:
        raise ValueError(f"D = {D} exceeds the configured class-number bound {bound}")
    return len(reduced_forms(D))


def principal_form_represents(D: int, n: int) -> bool:
    """Whether n = x^2 + t x y + ((t + D)/4) y^2 for some integers x, y (t = D mod 2)."""
    t = D % 2
    c = (t + D) // 4
    y = 0
    while c * y * y <= n:
        # solve x^2 + t y x + c y^2 - n = 0
        disc = t * t * y * y - 4 * (c * y * y - n)
        if disc >= 0:
            r = isqrt(disc)
            if r * r == disc and (r - t * y) % 2 == 0:
                return True
        y += 1
    return False
