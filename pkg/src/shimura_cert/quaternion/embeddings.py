"""Optimal embeddings of imaginary quadratic orders into quaternion orders."""

from __future__ import annotations

from fractions import Fraction

from sympy import primefactors

from ..arith.quadratic import QuadDiscriminant
from .order import Elem, OrderLattice


def _as_disc(d) -> QuadDiscriminant:
    return d if isinstance(d, QuadDiscriminant) else QuadDiscriminant(int(d))


def is_optimal(order: OrderLattice, x: Elem, conductor: int) -> bool:
    """x generates an order that is not contained in a larger one inside `order`."""
    v, d = x
    for ell in primefactors(conductor):
        for a in range(ell):
            w = (v[0] - a * d,) + tuple(v[1:])
            if order.coords((w, d * ell)) is not None:
                return False
    return True


def _conjugate_by(order: OrderLattice, u: Elem, x: Elem) -> Elem:
    alg = order.alg
    uv, ud = u
    xv, xd = x
    # u x u^{-1} = u x conj(u) / N(u), N(u) = 1
    y = alg.mul(alg.mul(uv, xv), alg.conj(uv))
    return y, xd * ud * ud


def _normalise(e: Elem) -> tuple:
    v, d = e
    fr = tuple(Fraction(c, d) for c in v)
    return fr


def optimal_embeddings(order: OrderLattice, disc) -> list[list[Elem]]:
    """Optimal embeddings of O_{-D}, grouped into orbits under conjugation by units."""
    return embeddings_by_discriminant(order, [disc])[_as_disc(disc).D]


def embeddings_by_discriminant(order: OrderLattice, discs, candidates=None, units=None) -> dict[int, list[list[Elem]]]:
    """One enumeration serving several discriminants.

    `candidates` may supply elements (with norms) of a larger order; only those lying
    in `order` are used.  `units` defaults to the norm-one elements of `order`.
    """
    discs = [_as_disc(d) for d in discs]
    nmax = max(d.generator_norm for d in discs)
    if candidates is None:
        vecs = order.vectors_up_to(nmax)
    else:
        vecs = [(x, n) for x, n in candidates if order.coords(x) is not None]
    units = order.units if units is None else units
    out = {}
    for D in discs:
        t, n, c = D.trace_parity, D.generator_norm, D.conductor
        cands = []
        for (v, d), nv in vecs:
            if nv == n and Fraction(2 * v[0], d) == t:
                if is_optimal(order, (v, d), c):
                    cands.append((v, d))
        seen = set()
        orbits = []
        for x in cands:
            key = _normalise(x)
            if key in seen:
                continue
            orbit = {}
            for u in units:
                y = _conjugate_by(order, u, x)
                orbit[_normalise(y)] = y
            seen.update(orbit)
            orbits.append(list(orbit.values()))
        out[D.D] = orbits
    return out


def trace_norm_candidates(order: OrderLattice, discs) -> list[tuple[Elem, Fraction]]:
    """Elements of the order whose (trace, norm) matches a generator of some O_{-D}."""
    discs = [_as_disc(d) for d in discs]
    targets = {(d.trace_parity, d.generator_norm) for d in discs}
    nmax = max(d.generator_norm for d in discs)
    out = []
    for (v, d), nv in order.vectors_up_to(nmax):
        if (Fraction(2 * v[0], d), nv) in targets:
            out.append(((v, d), nv))
    return out


def optimal_embedding_count(cls_or_order, disc) -> int:
    """h_i(-D): optimal embeddings of O_{-D} into the order modulo unit conjugation."""
    order = getattr(cls_or_order, "right_order", cls_or_order)
    return len(optimal_embeddings(order, disc))


def embedding_counts(order: OrderLattice, discs) -> dict[int, int]:
    return {D: len(orbs) for D, orbs in embeddings_by_discriminant(order, discs).items()}
