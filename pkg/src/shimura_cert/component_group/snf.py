"""Smith normal form over Z with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SmithForm:
    """U A V = diag(d_0, ..., d_{r-1}, 0, ...) with U, V unimodular."""

    diag: list[int]
    U: list[list[int]]
    V: list[list[int]]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    def invariant_factors(self) -> list[int]:
        """Nontrivial invariant factors (those > 1)."""
        return [d for d in self.diag if d > 1]

    def solve(self, b: list[int]) -> list[int] | None:
        """An integer x with A x = b, or None when b is not in the image."""
        c = [sum(u * x for u, x in zip(row, b)) for row in self.U]
        y = [0] * self.cols
        for i, ci in enumerate(c):
            d = self.diag[i] if i < len(self.diag) else 0
            if d == 0:
                if ci != 0:
                    return None
            else:
                if ci % d:
                    return None
                y[i] = ci // d
        return [sum(self.V[r][k] * y[k] for k in range(self.cols)) for r in range(self.cols)]

    def in_image(self, b: list[int]) -> bool:
        return self.solve(b) is not None


def smith_normal_form(A: list[list[int]]) -> SmithForm:
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(r) for r in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for row in M:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Mi = M[i]
            for j in range(t, n):
                if Mi[j] and (best is None or abs(Mi[j]) < best[0]):
                    best = (abs(Mi[j]), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            piv = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // piv))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // piv))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remaining entry of row/column t into the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t + 1, m) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = [M[i][i] for i in range(min(m, n))]
    return SmithForm(diag, U, V, m, n)
