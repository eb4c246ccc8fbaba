"""Classical modular polynomials of level 2 and 3, and j-labels of maximal classes."""

from __future__ import annotations

from ..arith.fields import QuadExtElem
from ..arith.poly import DEFAULT_SEED
from ..arith.supersingular import supersingular_j_invariants

# Coefficients {(a, b): c} of Phi_ell(X, Y) for a >= b; symmetric in X and Y.
_PHI2 = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}

_PHI3 = {
    (4, 0): 1,
    (3, 3): -1,
    (3, 2): 2232,
    (3, 1): -1069956,
    (3, 0): 36864000,
    (2, 2): 2587918086,
    (2, 1): 8900222976000,
    (2, 0): 452984832000000,
    (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000,
    (0, 0): 0,
}


def _expand(half: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    full = {}
    for (a, b), c in half.items():
        full[(a, b)] = c
        full[(b, a)] = c
    return full


MODULAR_POLYNOMIALS = {2: _expand(_PHI2), 3: _expand(_PHI3)}


def modular_polynomial(ell: int) -> dict[tuple[int, int], int]:
    if ell not in MODULAR_POLYNOMIALS:
        raise ValueError("only levels 2 and 3 are tabulated")
    return MODULAR_POLYNOMIALS[ell]


def evaluate(ell: int, x, y):
    """Phi_ell(x, y) for integers, or for QuadExtElem values."""
    total = None
    for (a, b), c in modular_polynomial(ell).items():
        term = (x ** a) * (y ** b) * c if not isinstance(x, int) else c * x ** a * y ** b
        total = term if total is None else total + term
    return total


def specialise(ell: int, x: QuadExtElem) -> list[QuadExtElem]:
    """Coefficients (low degree first) of Phi_ell(x, Y) over F_{q^2}."""
    q = x.modulus
    deg = ell + 1
    coeffs = [QuadExtElem(0, 0, q) for _ in range(deg + 1)]
    for (a, b), c in modular_polynomial(ell).items():
        coeffs[b] = coeffs[b] + (x ** a) * c
    return coeffs


def root_multiplicity(coeffs: list[QuadExtElem], r: QuadExtElem) -> int:
    """Order of vanishing at r, by repeated synthetic division."""
    m = 0
    c = list(coeffs)
    while len(c) > 1:
        acc = c[-1]
        quo = [acc]
        for k in range(len(c) - 2, -1, -1):
            acc = acc * r + c[k]
            quo.append(acc)
        rem = quo.pop()
        if rem != QuadExtElem(0, 0, r.modulus):
            break
        m += 1
        c = list(reversed(quo))
    return m


def isogeny_matrix(q: int, ell: int, js: list[QuadExtElem] | None = None) -> list[list[int]]:
    """M[a][b] = multiplicity of js[b] as a root of Phi_ell(js[a], Y) mod q."""
    js = js if js is not None else supersingular_j_invariants(q)
    out = []
    for ja in js:
        f = specialise(ell, ja)
        out.append([root_multiplicity(f, jb) for jb in js])
    return out


class LabelingError(RuntimeError):
    pass


def label_classes(brandt: dict[int, list[list[int]]], weights: list[int], q: int, max_solutions: int = 1000,
                  seed: int = DEFAULT_SEED):
    """Match Brandt matrices B(2), B(3) with isogeny matrices mod q.

    Returns (labels, number_of_solutions): labels[i] is the supersingular j of class i.
    Solutions come in Frobenius-conjugate pairs whenever some j is not in F_q.
    """
    js = supersingular_j_invariants(q, seed)
    n = len(js)
    if len(weights) != n:
        raise LabelingError("class count differs from the number of supersingular invariants")
    mats = {ell: isogeny_matrix(q, ell, js) for ell in brandt}
    zero, k1728 = QuadExtElem(0, 0, q), QuadExtElem(1728, 0, q)

    def forced_weight(j):
        # j = 0 and j = 1728 carry extra automorphisms (for q > 3)
        if j == zero:
            return 3
        if j == k1728:
            return 2
        return 1

    def signature(M, a):
        return tuple(sorted(M[a]))

    cands = []
    for i in range(n):
        c = []
        for a in range(n):
            if forced_weight(js[a]) != weights[i]:
                continue
            if all(signature(mats[ell], a) == tuple(sorted(brandt[ell][i])) for ell in brandt):
                c.append(a)
        cands.append(c)
    order = sorted(range(n), key=lambda i: len(cands[i]))
    assign: dict[int, int] = {}
    used = set()
    solutions = []

    def consistent(i, a):
        for k, b in assign.items():
            for ell in brandt:
                if brandt[ell][i][k] != mats[ell][a][b] or brandt[ell][k][i] != mats[ell][b][a]:
                    return False
        return brandt_self_ok(i, a)

    def brandt_self_ok(i, a):
        return all(brandt[ell][i][i] == mats[ell][a][a] for ell in brandt)

    def rec(pos):
        if len(solutions) >= max_solutions:
            return
        if pos == n:
            solutions.append(dict(assign))
            return
        i = order[pos]
        for a in cands[i]:
            if a in used or not consistent(i, a):
                continue
            assign[i] = a
            used.add(a)
            rec(pos + 1)
            del assign[i]
            used.discard(a)

    rec(0)
    if not solutions:
        raise LabelingError("no labelling matches the Brandt data")
    best = solutions[0]
    return [js[best[i]] for i in range(n)], len(solutions)
