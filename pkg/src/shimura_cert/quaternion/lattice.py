"""Integer lattice utilities: Hermite normal form, LLL, Fincke-Pohst enumeration.

Lattices are given by integer row vectors; quadratic forms by integer Gram matrices.
Floating point is only used to steer the enumeration; every vector returned is
checked with exact integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd, sqrt

Vector = tuple[int, ...]


def hnf(rows: list[list[int]] | list[Vector]) -> list[list[int]]:
    """Row Hermite normal form (upper triangular, positive pivots, reduced above)."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    col = 0
    while A and col < ncols:
        nz = [r for r in A if r[col] != 0]
        zero = [r for r in A if r[col] == 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                f = r[col] // piv[col]
                r = [x - f * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    rest.append(r)
                elif any(r):
                    zero.append(r)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        A = zero
        col += 1
    # reduce entries above each pivot
    for i, r in enumerate(out):
        c = next(k for k, x in enumerate(r) if x)
        for k in range(i):
            f = out[k][c] // r[c]
            if f:
                out[k] = [x - f * y for x, y in zip(out[k], r)]
    return out


def solve_triangular(basis: list[list[int]], v: Vector) -> list[int] | None:
    """Integer coefficients c with sum c_r basis_r = v for a square HNF basis, else None."""
    w = list(v)
    coeffs = []
    for r in basis:
        c = next(k for k, x in enumerate(r) if x)
        if w[c] % r[c]:
            return None
        f = w[c] // r[c]
        coeffs.append(f)
        if f:
            w = [x - f * y for x, y in zip(w, r)]
    if any(w):
        return None
    return coeffs


def determinant(M: list[list[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def gram_matrix(rows: list[list[int]], weights: Vector) -> list[list[int]]:
    """Gram matrix of the diagonal form sum_k weights[k] x_k^2 on the given rows."""
    n = len(rows)
    return [
        [sum(w * a * b for w, a, b in zip(weights, rows[r], rows[s])) for s in range(n)]
        for r in range(n)
    ]


def lll_gram(G: list[list[int]], delta: Fraction = Fraction(3, 4)) -> tuple[list[list[int]], list[list[int]]]:
    """LLL on a positive definite integer Gram matrix.

    Returns (T, G') with T unimodular (rows give the new basis in terms of the old)
    and G' = T G T^t.
    """
    n = len(G)
    T = [[int(i == j) for j in range(n)] for i in range(n)]
    G = [list(r) for r in G]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(G[i][j])
                for k in range(j):
                    s -= mu[j][k] * mu[i][k] * Bn[k]
                mu[i][j] = s / Bn[j]
            s = Fraction(G[i][i])
            for k in range(i):
                s -= mu[i][k] * mu[i][k] * Bn[k]
            Bn[i] = s
        return mu, Bn

    def reduce(k, j, f):
        # b_k <- b_k - f b_j
        T[k] = [a - f * b for a, b in zip(T[k], T[j])]
        gkk = G[k][k] - 2 * f * G[k][j] + f * f * G[j][j]
        for l in range(n):
            if l != k:
                G[k][l] -= f * G[j][l]
                G[l][k] = G[k][l]
        G[k][k] = gkk

    def swap(k):
        T[k], T[k - 1] = T[k - 1], T[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]

    k = 1
    mu, Bn = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            f = round(mu[k][j])
            if f:
                reduce(k, j, f)
                mu, Bn = gso()
        if Bn[k] >= (delta - mu[k][k - 1] ** 2) * Bn[k - 1]:
            k += 1
        else:
            swap(k)
            mu, Bn = gso()
            k = max(k - 1, 1)
    return T, G


def short_vectors(G: list[list[int]], bound: int, exact: int | None = None) -> list[list[int]]:
    """All nonzero integer x with x G x^t <= bound (or == exact, if given).

    G must be positive definite.  Vectors are returned in both signs.
    """
    n = len(G)
    if exact is not None:
        bound = exact
    if bound <= 0:
        return []
    # Cholesky-type decomposition Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    q = [[float(G[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    eps = 1e-9 * max(1.0, float(bound))
    out: list[list[int]] = []
    x = [0] * n
    B = float(bound)

    def rec(i: int, rem: float):
        c = 0.0
        qi = q[i]
        for j in range(i + 1, n):
            c -= qi[j] * x[j]
        r = sqrt(max(rem, 0.0) / qi[i]) + 1e-9
        lo, hi = ceil(c - r), floor(c + r)
        qii = qi[i]
        for xi in range(lo, hi + 1):
            t = rem - qii * (xi - c) ** 2
            if t < -eps:
                continue
            x[i] = xi
            if i == 0:
                if any(x):
                    val = 0
                    for a in range(n):
                        if x[a]:
                            Ga = G[a]
                            val += x[a] * sum(Ga[b] * x[b] for b in range(n) if x[b])
                    if (val == exact) if exact is not None else (val <= bound):
                        out.append(list(x))
            else:
                rec(i - 1, t)
        x[i] = 0

    rec(n - 1, B + eps)
    return out


def apply_transform(T: list[list[int]], vecs: list[list[int]]) -> list[list[int]]:
    """Express coefficient vectors w.r.t. the reduced basis T in the original basis."""
    n = len(T)
    return [[sum(v[r] * T[r][c] for r in range(n)) for c in range(n)] for v in vecs]


def content(vals) -> int:
    g = 0
    for v in vals:
        g = gcd(g, v)
    return g
