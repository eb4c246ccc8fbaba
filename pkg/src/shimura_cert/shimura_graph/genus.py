"""Genus of X^{pq} and the gonality lower bound it feeds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith.quadratic import kronecker

ABRAMOVICH = Fraction(21, 200)  # C-gonality >= this * (g - 1)


def genus_formula(p: int, q: int) -> int:
    if p == q or p % 2 == 0 or q % 2 == 0:
        raise ValueError("p and q must be distinct odd primes")
    g = (1
         - Fraction(1, 4) * (1 - kronecker(-1, p)) * (1 - kronecker(-1, q))
         - Fraction(1, 3) * (1 - kronecker(-3, p)) * (1 - kronecker(-3, q))
         + Fraction((p - 1) * (q - 1), 12))
    if g.denominator != 1 or g < 0:
        raise ArithmeticError(f"genus formula evaluated to {g} at ({p}, {q})")
    return int(g)


@dataclass
class GonalityData:
    p: int
    q: int
    genus: int
    gonality_lower_bound: Fraction  # over C
    degree_lower_bound: Fraction  # any n with a nontrivial n-torsion point on the curve: n >= this
    torsion_threshold: Fraction  # pq / 245
    threshold_applies: bool  # p >= 19 and q >= 245
    n: int  # p + 1
    n_below_threshold: bool  # n < pq/245
    n_below_degree_bound: bool  # n < (21/400)(g - 1)

    @property
    def margin(self) -> Fraction:
        return self.torsion_threshold - self.n

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "gonality_lower_bound": str(self.gonality_lower_bound),
            "degree_lower_bound": str(self.degree_lower_bound),
            "torsion_threshold": str(self.torsion_threshold),
            "torsion_threshold_float": float(self.torsion_threshold),
            "threshold_applies": self.threshold_applies,
            "n": self.n,
            "n_below_threshold": self.n_below_threshold,
            "n_below_degree_bound": self.n_below_degree_bound,
            "margin": str(self.margin),
        }


def genus_and_gonality(p: int, q: int) -> GonalityData:
    g = genus_formula(p, q)
    gon = ABRAMOVICH * (g - 1)
    deg = gon / 2  # gonality <= 2n
    thr = Fraction(p * q, 245)
    n = p + 1
    return GonalityData(p, q, g, gon, deg, thr, p >= 19 and q >= 245, n, n < thr, n < deg)
