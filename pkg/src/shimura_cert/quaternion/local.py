"""Reduction of an order modulo a prime ell where it is split (O/ell O = M_2(F_ell)).

The left O-ideals of norm ell correspond to the ell + 1 two-dimensional left
ideals of O/ell O; these are stored as canonical row-reduced bases ("keys").
"""

from __future__ import annotations

import random

from sympy import sqrt_mod

from .order import Lattice, OrderLattice

Key = tuple[tuple[int, ...], ...]


def rref(rows, p: int) -> Key:
    """Reduced row echelon form over F_p, zero rows dropped."""
    M = [[x % p for x in r] for r in rows]
    out = []
    ncols = len(M[0]) if M else 0
    r0 = 0
    for c in range(ncols):
        piv = next((i for i in range(r0, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r0], M[piv] = M[piv], M[r0]
        inv = pow(M[r0][c], -1, p)
        M[r0] = [x * inv % p for x in M[r0]]
        for i in range(len(M)):
            if i != r0 and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r0])]
        r0 += 1
    out = [tuple(r) for r in M[:r0]]
    return tuple(out)


def nullspace(M, p: int, ncols: int) -> list[list[int]]:
    """Basis of {v : M v = 0} over F_p."""
    R = rref(M, p) if M else ()
    pivots = []
    for r in R:
        pivots.append(next(i for i, x in enumerate(r) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in zip(R, pivots):
            v[pc] = (-r[f]) % p
        basis.append(v)
    return basis


class LocalQuotient:
    """O / ell O for an order O split at ell, in the coordinates of O's HNF basis."""

    def __init__(self, order: OrderLattice, ell: int, seed: int = 0):
        self.order = order
        self.ell = ell
        self.seed = seed
        p = ell
        c = order.structure_constants
        self.c = [[[x % p for x in c[r][s]] for s in range(4)] for r in range(4)]
        self.nf = {k: v % p for k, v in order.norm_form.items()}
        self._lines: list[Key] | None = None
        self._index: dict[Key, int] | None = None

    # -- arithmetic in O/ell O -------------------------------------------
    def mul(self, x, y) -> list[int]:
        p = self.ell
        z = [0, 0, 0, 0]
        c = self.c
        for r in range(4):
            if x[r]:
                for s in range(4):
                    if y[s]:
                        f = x[r] * y[s]
                        crs = c[r][s]
                        for t in range(4):
                            z[t] += f * crs[t]
        return [v % p for v in z]

    def norm(self, x) -> int:
        return sum(v * x[r] * x[s] for (r, s), v in self.nf.items()) % self.ell

    def reduce(self, elem) -> list[int]:
        """Coordinates mod ell of an element of the order."""
        co = self.order.coords(elem)
        if co is None:
            raise ValueError("element is not in the order")
        return [x % self.ell for x in co]

    def zero_divisor(self) -> list[int]:
        """A nonzero element of reduced norm 0 mod ell."""
        p = self.ell
        if p <= 13:
            for n in range(1, p ** 4):
                x = [(n // p ** k) % p for k in range(4)]
                if self.norm(x) == 0:
                    return x
            raise AssertionError(f"order is not split at {p}")
        rng = random.Random(self.seed + p)
        nf = self.nf
        for _ in range(100 * p):
            x = [rng.randrange(p) for _ in range(3)] + [0]
            A = nf[(3, 3)]
            B = sum(nf[(r, 3)] * x[r] for r in range(3)) % p
            C = self.norm(x)
            if A == 0:
                if B == 0:
                    continue
                x[3] = -C * pow(B, -1, p) % p
            else:
                disc = (B * B - 4 * A * C) % p
                if disc and pow(disc, (p - 1) // 2, p) != 1:
                    continue
                s = sqrt_mod(disc, p) if disc else 0
                x[3] = (-B + s) * pow(2 * A, -1, p) % p
            if any(x):
                return x
        raise AssertionError(f"order is not split at {p}")

    # -- left ideals of norm ell ------------------------------------------
    def left_ideal(self, y) -> Key:
        e = [[int(r == s) for s in range(4)] for r in range(4)]
        return rref([self.mul(er, y) for er in e], self.ell)

    def lines(self) -> list[Key]:
        """The ell + 1 two-dimensional left ideals, in canonical sorted order."""
        if self._lines is None:
            p = self.ell
            x = self.zero_divisor()
            e = [[int(r == s) for s in range(4)] for r in range(4)]
            xA = rref([self.mul(x, es) for es in e], p)
            if len(xA) != 2:
                raise AssertionError("zero divisor does not have rank one")
            y1, y2 = xA
            cands = [list(y2)] + [[(a + t * b) % p for a, b in zip(y1, y2)] for t in range(p)]
            keys = set()
            for y in cands:
                k = self.left_ideal(y)
                if len(k) != 2:
                    raise AssertionError("left ideal of wrong dimension")
                keys.add(k)
            if len(keys) != p + 1:
                raise AssertionError("did not find ell + 1 left ideals")
            self._lines = sorted(keys)
            self._index = {k: i for i, k in enumerate(self._lines)}
        return self._lines

    def index(self, key: Key) -> int:
        self.lines()
        return self._index[key]

    def right_act(self, key: Key, u) -> Key:
        """Key of L * u for u a unit given by its coordinates mod ell."""
        return rref([self.mul(r, u) for r in key], self.ell)

    def lift(self, key) -> Lattice:
        """Preimage in O of an F_ell-subspace of O/ell O."""
        O = self.order
        rows = [[sum(k[s] * O.rows[s][t] for s in range(4)) for t in range(4)] for k in key]
        rows += [[self.ell * x for x in r] for r in O.rows]
        return Lattice(O.alg, rows, O.denom)

    def key_of(self, ideal: Lattice) -> Key:
        """Key of an ideal ell O <= a <= O of index ell^2."""
        rows = [self.reduce(e) for e in ideal.basis_elems()]
        k = rref(rows, self.ell)
        if len(k) != 2:
            raise AssertionError("lattice does not reduce to a two-dimensional left ideal")
        return k

    def stabilizer_subspace(self, key: Key) -> Key:
        """{a in O/ell O : L a <= L}; three-dimensional for a rank-one line."""
        p = self.ell
        perp = nullspace([list(r) for r in key], p, 4)
        e = [[int(r == s) for s in range(4)] for r in range(4)]
        conds = []
        for f in perp:
            for l in key:
                conds.append([sum(fi * zi for fi, zi in zip(f, self.mul(l, es))) % p for es in e])
        return rref(nullspace(conds, p, 4), p)

    def eichler_order(self, key: Key) -> OrderLattice:
        L = self.lift(self.stabilizer_subspace(key))
        return OrderLattice.from_lattice(L, level=self.ell)

    def two_sided_radical(self) -> Lattice:
        """ell O + (radical of the trace form mod ell): the two-sided ideal above ell."""
        p = self.ell
        T = [[0] * 4 for _ in range(4)]
        for (r, s), v in self.order.norm_form.items():
            if r == s:
                T[r][r] = 2 * v
            else:
                T[r][s] = T[s][r] = v
        rad = nullspace(T, p, 4)
        return self.lift(rad)
