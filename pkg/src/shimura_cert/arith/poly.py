"""Dense univariate polynomials over F_q and root finding in F_{q^2}."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import PrimeFieldElem, QuadExtElem, check_odd_prime, smallest_nonresidue

DEFAULT_SEED = 20070101


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class PolyFq:
    """Polynomial with coefficients stored low degree first, reduced mod q."""

    coeffs: tuple[int, ...]
    modulus: int

    def __init__(self, coeffs, modulus: int):
        q = modulus
        c = [(x.value if isinstance(x, PrimeFieldElem) else int(x)) % q for x in coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))
        object.__setattr__(self, "modulus", q)

    @classmethod
    def x(cls, q: int) -> PolyFq:
        return cls([0, 1], q)

    @classmethod
    def from_roots(cls, roots, q: int) -> PolyFq:
        f = cls([1], q)
        for r in roots:
            f = f * cls([-int(r), 1], q)
        return f

    @property
    def coefficients(self) -> list[PrimeFieldElem]:
        return [PrimeFieldElem(c, self.modulus) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        return self.coeffs[-1]

    def monic(self) -> PolyFq:
        if self.is_zero():
            return self
        inv = pow(self.lc(), -1, self.modulus)
        return PolyFq([c * inv for c in self.coeffs], self.modulus)

    def __add__(self, other: PolyFq) -> PolyFq:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return PolyFq([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
                      self.modulus)

    def __neg__(self) -> PolyFq:
        return PolyFq([-c for c in self.coeffs], self.modulus)

    def __sub__(self, other: PolyFq) -> PolyFq:
        return self + (-other)

    def __mul__(self, other) -> PolyFq:
        if isinstance(other, int):
            return PolyFq([c * other for c in self.coeffs], self.modulus)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyFq([], self.modulus)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyFq(out, self.modulus)

    __rmul__ = __mul__

    def __divmod__(self, other: PolyFq):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = self.modulus
        r = list(self.coeffs)
        d = other.coeffs
        dl = len(d)
        inv = pow(d[-1], -1, q)
        if len(r) < dl:
            return PolyFq([], q), self
        quo = [0] * (len(r) - dl + 1)
        for k in range(len(r) - dl, -1, -1):
            c = r[k + dl - 1] % q
            if c:
                c = c * inv % q
                quo[k] = c
                for i in range(dl):
                    r[k + i] -= c * d[i]
        return PolyFq(quo, q), PolyFq(r[: dl - 1], q)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return isinstance(other, PolyFq) and self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __call__(self, x):
        if isinstance(x, QuadExtElem):
            acc = QuadExtElem(0, 0, self.modulus)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = x.value if isinstance(x, PrimeFieldElem) else x
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def derivative(self) -> PolyFq:
        return PolyFq([i * c for i, c in enumerate(self.coeffs)][1:], self.modulus)

    def powmod(self, e: int, mod: PolyFq) -> PolyFq:
        result = PolyFq([1], self.modulus)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            c = c - self.modulus if c > self.modulus // 2 else c
            mono = "" if i == 0 else ("j" if i == 1 else f"j^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            terms.append(f"{coef}{mono}")
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def poly_gcd(a: PolyFq, b: PolyFq) -> PolyFq:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: PolyFq) -> list[tuple[PolyFq, int]]:
    """Pairs (g, m) with f = lc * prod g^m, each g squarefree and monic."""
    q = f.modulus
    out: list[tuple[PolyFq, int]] = []

    def rec(f: PolyFq, mult: int):
        if f.degree <= 0:
            return
        fp = f.derivative()
        if fp.is_zero():
            # f is a q-th power: f(x) = g(x^q), and g^q has the same roots
            g = PolyFq(f.coeffs[::q], q)
            rec(g, mult * q)
            return
        c = poly_gcd(f, fp)
        w = f // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z.monic(), i * mult))
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            rec(c, mult)

    rec(f.monic(), 1)
    return out


def _equal_degree_split(f: PolyFq, d: int, rng: random.Random) -> list[PolyFq]:
    """Cantor-Zassenhaus: split a squarefree product of degree-d irreducibles."""
    if f.degree == d:
        return [f.monic()]
    q = f.modulus
    e = (q ** d - 1) // 2
    while True:
        a = PolyFq([rng.randrange(q) for _ in range(f.degree)] + [1], q)
        g = poly_gcd(a.powmod(e, f) - PolyFq([1], q), f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_low_degree(f: PolyFq, seed: int = DEFAULT_SEED) -> tuple[list[tuple[PolyFq, int]], PolyFq]:
    """Irreducible factors of degree 1 and 2 with multiplicity.

    Returns (factors, rest) where rest collects the part of f with no root in F_{q^2}.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    q = f.modulus
    rng = random.Random(seed)
    x = PolyFq.x(q)
    factors: list[tuple[PolyFq, int]] = []
    rest = PolyFq([1], q)
    for g, m in squarefree_decomposition(f):
        xq = x.powmod(q, g)
        lin = poly_gcd(xq - x, g)
        g2 = g // lin
        xq2 = x.powmod(q * q, g2)
        quad = poly_gcd(xq2 - x, g2)
        for _ in range(m):
            rest = rest * (g2 // quad)
        for d, part in ((1, lin), (2, quad)):
            if part.degree > 0:
                factors.extend((h, m) for h in _equal_degree_split(part, d, rng))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return factors, rest


def sqrt_fq2(a: QuadExtElem) -> QuadExtElem:
    """A square root in F_{q^2} of an element of F_q."""
    q = a.modulus
    if not a.is_rational():
        raise ValueError("only square roots of F_q elements are needed")
    from sympy import sqrt_mod

    v = a.a0
    if v == 0:
        return QuadExtElem(0, 0, q)
    if pow(v, (q - 1) // 2, q) == 1:
        return QuadExtElem(sqrt_mod(v, q), 0, q)
    n = smallest_nonresidue(q)
    t = sqrt_mod(v * pow(n, -1, q) % q, q)
    return QuadExtElem(0, t, q)


def poly_roots_in_Fq2(f: PolyFq, seed: int = DEFAULT_SEED) -> list[QuadExtElem]:
    """All roots of f lying in F_{q^2}, repeated according to multiplicity."""
    check_odd_prime(f.modulus)
    if f.is_zero():
        raise ValueError("zero polynomial has no finite root list")
    q = f.modulus
    factors, _ = factor_low_degree(f, seed)
    roots: list[QuadExtElem] = []
    inv2 = pow(2, -1, q)
    for g, m in factors:
        if g.degree == 1:
            r = [QuadExtElem(-g.coeffs[0], 0, q)]
        else:
            c, b = g.coeffs[0], g.coeffs[1]
            s = sqrt_fq2(QuadExtElem(b * b - 4 * c, 0, q))
            r = [(s - b) * inv2, (-s - b) * inv2]
        roots.extend(x for x in r for _ in range(m))
    roots.sort(key=QuadExtElem.sort_key)
    return roots


def resultant(a: PolyFq, b: PolyFq) -> int:
    """Resultant over F_q by the Euclidean algorithm."""
    q = a.modulus
    if a.is_zero() or b.is_zero():
        return 0
    res = 1
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * pow(b.lc(), da, q) % q
        r = a % b
        if r.is_zero():
            return 0
        if (da * db) % 2:
            res = -res
        res = res * pow(b.lc(), da - r.degree, q) % q
        a, b = b, r


def interpolate(xs: list[int], ys: list[int], q: int) -> PolyFq:
    """Lagrange interpolation over F_q at distinct nodes."""
    master = PolyFq([1], q)
    for xk in xs:
        master = master * PolyFq([-xk, 1], q)
    dmaster = master.derivative()
    n = len(xs)
    out = [0] * n
    for xi, yi in zip(xs, ys):
        if yi % q == 0:
            continue
        # synthetic division of master by (x - xi)
        m = master.coeffs
        quo = [0] * n
        acc = 0
        for k in range(n, 0, -1):
            acc = (acc * xi + m[k]) % q
            quo[k - 1] = acc
        scale = yi * pow(dmaster(xi), -1, q) % q
        for k in range(n):
            out[k] += scale * quo[k]
    return PolyFq(out, q)
