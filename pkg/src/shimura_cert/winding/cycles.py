"""Closed paths built from Gross vectors through the exceptional edge."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith.quadratic import kronecker
from ..component_group.snf import smith_normal_form
from ..shimura_graph.graph import Graph
from ..shimura_graph.pipeline import GraphBundle
from .gross import GrossVector, boundary, gross_vectors, lift_to_desingularized

CLEARING = 6  # every unit group mod +-1 has order dividing 6


@dataclass
class CycleFailure:
    discs: list[int]
    reason: str
    kernel_rank: int = 0

    found = False

    def to_json(self) -> dict:
        return {"found": False, "discs": self.discs, "reason": self.reason, "kernel_rank": self.kernel_rank}


@dataclass
class CyclePath:
    p: int
    discs: list[int]
    lambdas: list[int]
    edge_vector: list[Fraction]  # on the desingularised quotient graph
    exceptional_edges: list[int]
    exceptional_coefficient: Fraction
    boundary_zero: bool
    kernel_rank: int = 1
    gross: dict[int, GrossVector] = field(default_factory=dict, repr=False)

    found = True

    @property
    def cleared_coefficient(self) -> int:
        c = self.exceptional_coefficient * CLEARING
        assert c.denominator == 1
        return int(c)

    @property
    def prime_to_p(self) -> bool:
        return self.cleared_coefficient % self.p != 0

    def boundary_checksum(self, graph: Graph) -> str:
        bd = boundary(graph, self.edge_vector)
        return hashlib.sha256(",".join(str(x) for x in bd).encode()).hexdigest()[:16]

    def to_json(self, graph: Graph | None = None) -> dict:
        out = {
            "found": True,
            "discs": self.discs,
            "lambdas": self.lambdas,
            "exceptional_edges": self.exceptional_edges,
            "exceptional_coefficient": str(self.exceptional_coefficient),
            "exceptional_coefficient_mod_p": self.cleared_coefficient % self.p,
            "boundary_zero": self.boundary_zero,
            "kernel_rank": self.kernel_rank,
        }
        if graph is not None:
            out["boundary_checksum"] = self.boundary_checksum(graph)
        return out


def combine(vectors, lambdas) -> list[Fraction]:
    out = None
    for v, lam in zip(vectors, lambdas):
        if out is None:
            out = [Fraction(0)] * len(v)
        for k, c in enumerate(v):
            if c:
                out[k] += lam * c
    return out or []


def _integer_kernel(cols: list[list[int]]) -> list[list[int]]:
    """A Z-basis of {x : sum_j x_j cols[j] = 0}."""
    k = len(cols)
    if k == 0:
        return []
    rows = [[cols[j][i] for j in range(k)] for i in range(len(cols[0]))]
    if not any(any(r) for r in rows):
        return [[int(i == j) for j in range(k)] for i in range(k)]
    S = smith_normal_form(rows)
    r = S.rank
    return [[S.V[i][c] for i in range(k)] for c in range(r, k)]


def _normalise_sign(v: list[int]) -> list[int]:
    first = next((x for x in v if x), 0)
    return [-x for x in v] if first < 0 else v


def find_cycle_combination(bundle: GraphBundle, discs, p: int | None = None,
                           normalization: str = "aut") -> CyclePath | CycleFailure:
    """Search sum lambda_D e_D with zero boundary and exceptional coefficient prime to p."""
    discs = [int(d) for d in discs]
    p = p or bundle.p
    if not discs:
        return CycleFailure([], "no discriminants given")
    if bundle.exceptional is None:
        return CycleFailure(discs, "no exceptional component")
    G = gross_vectors(bundle.graph, discs, normalization)
    Dg = bundle.desingularized
    lifted = [lift_to_desingularized(Dg, G[d].pushforward(bundle.quotient)) for d in discs]
    cols = []
    for v in lifted:
        bd = boundary(Dg, v)
        col = [c * CLEARING for c in bd]
        assert all(c.denominator == 1 for c in col)
        cols.append([int(c) for c in col])
    kernel = _integer_kernel(cols)
    if not kernel:
        return CycleFailure(discs, "no integer combination has zero boundary", 0)
    exc_edges = Dg.incident(bundle.exceptional)
    e0 = exc_edges[0]
    best = None
    for lam in sorted((_normalise_sign(k) for k in kernel), key=lambda v: (max(map(abs, v)), v)):
        vec = combine(lifted, lam)
        coeff = vec[e0]
        if (coeff * CLEARING) % p:
            best = (lam, vec, coeff)
            break
    if best is None:
        return CycleFailure(discs, f"every cycle meets the exceptional edge with multiplicity divisible by {p}",
                            len(kernel))
    lam, vec, coeff = best
    zero = not any(boundary(Dg, vec))
    return CyclePath(p, discs, lam, vec, sorted(exc_edges), coeff, zero, len(kernel), G)


@dataclass
class CycleShape:
    components: int
    component_vertices: list[list[int]]
    per_disc: dict[int, dict]

    def to_json(self) -> dict:
        return {"components": self.components, "component_vertices": self.component_vertices,
                "per_disc": {str(d): v for d, v in self.per_disc.items()}}


def cycle_shape_report(c: CyclePath, graph: Graph) -> CycleShape:
    """Connected components of the support of c, with the splitting of p in each quadratic order."""
    if not c.boundary_zero:
        raise ValueError("not a cycle")
    support = [k for k, x in enumerate(c.edge_vector) if x]
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in support:
        e = graph.edges[k]
        parent[find(e.source)] = find(e.target)
    groups: dict[int, set] = {}
    for k in support:
        e = graph.edges[k]
        groups.setdefault(find(e.source), set()).update((e.source, e.target))
    comps = sorted(sorted(s) for s in groups.values())
    per_disc = {}
    for d in c.discs:
        chi = kronecker(-d, c.p)
        per_disc[d] = {"splitting": {1: "split", 0: "ramified", -1: "inert"}[chi],
                       "edges": len(c.gross[d].support()) if d in c.gross else None}
    return CycleShape(len(comps), comps, per_disc)


def cycle_to_json(c: CyclePath | CycleFailure, graph: Graph | None = None) -> str:
    if isinstance(c, CyclePath):
        return json.dumps(c.to_json(graph), indent=2)
    return json.dumps(c.to_json(), indent=2)
