"""Gross vectors on the edges of the dual graph and their images on the quotient."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..arith.quadratic import QuadDiscriminant, kronecker
from ..quaternion.algebra import build_algebra
from ..quaternion.classes import maximal_classes
from ..quaternion.embeddings import embeddings_by_discriminant, trace_norm_candidates
from ..quaternion.order import maximal_order
from ..shimura_graph.graph import DualGraph
from ..shimura_graph.quotient import QuotientGraph

NORMALIZATIONS = ("aut", "units")


def coefficient_denominator(width: int, normalization: str = "aut") -> int:
    """Denominator attached to an edge whose unit group mod +-1 is cyclic of order `width`.

    "units": the order of the group itself; "aut": the order of its automorphism group.
    """
    if normalization == "units":
        return width
    if normalization == "aut":
        return {1: 1, 2: 1, 3: 2, 4: 2, 6: 2}[width]
    raise ValueError(f"unknown normalization {normalization!r}")


def edge_embedding_counts(g: DualGraph, discs) -> dict[int, list[int]]:
    """h_e(-D) for every edge e: optimal embeddings into its Eichler order modulo its units."""
    cache = g.__dict__.setdefault("_embedding_cache", {})
    discs = [int(d) for d in discs]
    missing = [d for d in discs if d not in cache]
    if missing:
        per_vertex = {}
        for c in g.classes:
            per_vertex[c.index] = trace_norm_candidates(c.right_order, missing)
        counts = {d: [0] * g.num_edges for d in missing}
        for k, e in enumerate(g.edges):
            d = g.edge_data[k]
            cands = per_vertex[d.vertex]
            if not cands:
                continue
            R = None
            lvl = g.levels[d.vertex]
            key = lvl.lines[d.line]
            units = [u for u, um in zip(g.classes[d.vertex].units, lvl.units_mod)
                     if lvl.local.right_act(key, um) == key]
            inside = []
            for x, n in cands:
                xm = lvl.local.reduce(x)
                if lvl.local.right_act(key, xm) == key or not any(xm):
                    inside.append((x, n))
            if not inside:
                continue
            R = g.eichler_order(k)
            res = embeddings_by_discriminant(R, missing, candidates=inside, units=units)
            for D, orbs in res.items():
                counts[D][k] = len(orbs)
        cache.update(counts)
    return {d: cache[d] for d in discs}


@dataclass
class GrossVector:
    disc: int
    coefficients: list[Fraction]
    counts: list[int]
    normalization: str = "aut"
    flag: str | None = None
    _pushed: dict = field(default_factory=dict, repr=False)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coefficients) if c]

    def pushforward(self, Q: QuotientGraph) -> list[Fraction]:
        key = id(Q)
        if key not in self._pushed:
            out = [Fraction(0)] * Q.num_edges
            for k, c in enumerate(self.coefficients):
                if c:
                    out[Q.edge_map[k]] += c
            self._pushed[key] = out
        return self._pushed[key]

    def to_json(self) -> dict:
        return {
            "disc": self.disc,
            "normalization": self.normalization,
            "flag": self.flag,
            "coefficients": {str(k): str(c) for k, c in enumerate(self.coefficients) if c},
        }


def gross_vector_preconditions(disc: int, p: int, q: int) -> str | None:
    if kronecker(-disc, q) == 1:
        return f"q = {q} splits in the order of discriminant -{disc}"
    if kronecker(-disc, p) == -1:
        return f"p = {p} is inert in the order of discriminant -{disc}"
    return None


def gross_vector(g: DualGraph, disc, normalization: str = "aut") -> GrossVector:
    """e_D = sum_e h_e(-D) / den(e) [e]; the zero vector with a flag when preconditions fail."""
    D = QuadDiscriminant(int(disc)).D
    flag = gross_vector_preconditions(D, g.p, g.q)
    if flag:
        return GrossVector(D, [Fraction(0)] * g.num_edges, [0] * g.num_edges, normalization, flag)
    counts = edge_embedding_counts(g, [D])[D]
    coeffs = [Fraction(h, coefficient_denominator(e.width, normalization)) if h else Fraction(0)
              for h, e in zip(counts, g.edges)]
    return GrossVector(D, coeffs, counts, normalization)


def gross_vectors(g: DualGraph, discs, normalization: str = "aut") -> dict[int, GrossVector]:
    ok = [int(d) for d in discs if not gross_vector_preconditions(int(d), g.p, g.q)]
    if ok:
        edge_embedding_counts(g, ok)
    return {int(d): gross_vector(g, d, normalization) for d in discs}


def boundary(graph, edge_vector) -> list[Fraction]:
    """sum_e c_e (target(e) - source(e))."""
    out = [Fraction(0)] * graph.num_vertices
    for c, e in zip(edge_vector, graph.edges):
        if c:
            out[e.target] += c
            out[e.source] -= c
    return out


def push_vertices(Q: QuotientGraph, vertex_vector) -> list[Fraction]:
    out = [Fraction(0)] * Q.num_vertices
    for v, c in enumerate(vertex_vector):
        out[Q.vertex_map[v]] += c
    return out


def lift_to_desingularized(D: QuotientGraph, edge_vector) -> list[Fraction]:
    """Each chain edge inherits the coefficient of the edge it replaces."""
    return [edge_vector[k] for k in D.edge_parent]


@dataclass
class EisensteinVector:
    q: int
    entries: list[Fraction]

    @property
    def weight(self) -> Fraction:
        return sum(self.entries, Fraction(0))


@lru_cache(maxsize=None)
def _classes(q: int):
    return tuple(maximal_classes(maximal_order(build_algebra(q))))


def eisenstein_vector(q: int) -> EisensteinVector:
    if q <= 3:
        raise ValueError("q must exceed 3")
    ent = [Fraction(1, c.unit_weight) for c in _classes(q)]
    e = EisensteinVector(q, ent)
    if e.weight != Fraction(q - 1, 12):
        raise AssertionError("Eisenstein weight differs from (q - 1)/12")
    return e


def gross_vectors_to_json(vectors: dict[int, GrossVector]) -> str:
    return json.dumps({str(d): v.to_json() for d, v in vectors.items()}, indent=2)
