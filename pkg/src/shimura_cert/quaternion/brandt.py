"""Brandt matrices from norm counts in the products conj(I_j) I_i."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, pi, sqrt

from .classes import RightIdealClass, algebra_prime

# refuse enumerations expected to produce more vectors than this per pair
MAX_VECTORS_PER_PAIR = 2_000_000


@dataclass(frozen=True)
class BrandtMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            return self.entries[ij[0]][ij[1]]
        return self.entries[ij]

    @property
    def size(self) -> int:
        return len(self.entries)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: BrandtMatrix) -> list[list[int]]:
        n = self.size
        return [[sum(self.entries[i][k] * other.entries[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]


def _level(classes: list[RightIdealClass]) -> int:
    return classes[0].right_order.level


def _expected_vectors(cls_i: RightIdealClass, cls_j: RightIdealClass, nmax: int, q: int, level: int) -> float:
    # volume of the ball of normalised radius nmax for a form of determinant (q level)^2 / 16
    return pi * pi / 2 * nmax * nmax / (q * level / 4) + 100


def norm_count_table(classes: list[RightIdealClass], nmax: int) -> dict[tuple[int, int], list[int]]:
    """counts[(i, j)][m] = #{b in conj(I_j) I_i : N(b) = m N(I_i) N(I_j)}, for i <= j."""
    q = algebra_prime(classes[0].right_order)
    level = _level(classes)
    table = {}
    for i, ci in enumerate(classes):
        for j in range(i, len(classes)):
            cj = classes[j]
            if _expected_vectors(ci, cj, nmax, q, level) > MAX_VECTORS_PER_PAIR:
                raise ValueError(f"enumeration radius too large for n = {nmax}")
            M = cj.ideal.conjugate() * ci.ideal
            table[(i, j)] = M.norm_counts(ci.norm * cj.norm, nmax)
    return table


def brandt_matrices(classes: list[RightIdealClass], ns) -> dict[int, BrandtMatrix]:
    """B(n) for every n in ns; entry (i, j) counts norm-n sub-ideals of I_i in the class of I_j."""
    ns = sorted(set(ns))
    q = algebra_prime(classes[0].right_order)
    level = _level(classes)
    for n in ns:
        if n <= 0 or gcd(n, q * level) != 1:
            raise ValueError(f"n = {n} must be positive and coprime to {q * level}")
    table = norm_count_table(classes, ns[-1])
    h = len(classes)
    units = [2 * c.unit_weight for c in classes]
    out = {}
    for n in ns:
        rows = []
        for i in range(h):
            row = []
            for j in range(h):
                cnt = table[(min(i, j), max(i, j))][n]
                if cnt % units[j]:
                    raise AssertionError("norm count not divisible by the unit group order")
                row.append(cnt // units[j])
            rows.append(tuple(row))
        out[n] = BrandtMatrix(n, tuple(rows))
    return out


def brandt_matrix(classes: list[RightIdealClass], n: int) -> BrandtMatrix:
    return brandt_matrices(classes, [n])[n]


def eisenstein_weights(classes: list[RightIdealClass]) -> list[Fraction]:
    """(1 / w_i): a left eigenvector of every B(n) with eigenvalue sigma(n) for prime n."""
    return [Fraction(1, c.unit_weight) for c in classes]
