"""Equidistribution tables, connectivity checks and DOT/JSON export."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import V1, DualGraph, Graph
from .quotient import QuotientGraph


@dataclass
class PairDeviation:
    source: int
    target: int
    count: int
    expected: Fraction
    deviation: Fraction

    @property
    def normalized(self) -> float:
        return float(self.deviation)


@dataclass
class EquidistributionReport:
    p: int
    eisenstein_weight: Fraction
    pairs: list[PairDeviation]
    quotient_pairs: list[PairDeviation]
    row_sums_ok: bool

    @property
    def max_normalized(self) -> float:
        return max((abs(x.normalized) for x in self.pairs), default=0.0) / math.sqrt(self.p)

    @property
    def max_normalized_quotient(self) -> float:
        return max((abs(x.normalized) for x in self.quotient_pairs), default=0.0) / math.sqrt(self.p)

    def to_json(self) -> dict:
        return {"p": self.p, "eisenstein_weight": str(self.eisenstein_weight),
                "max_normalized_deviation": self.max_normalized,
                "max_normalized_deviation_quotient": self.max_normalized_quotient,
                "row_sums_ok": self.row_sums_ok}


def _pair_counts(graph: Graph) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for e in graph.edges:
        key = (e.source, e.target)
        out[key] = out.get(key, 0) + 1
    return out


def equidistribution_report(g: DualGraph, quotient: QuotientGraph | None = None) -> EquidistributionReport:
    """Edge counts between vertex pairs against (p+1)/(w(Eis) w_i w_j)."""
    p = g.p
    weights = [Fraction(c.unit_weight) for c in g.classes]
    wE = sum((1 / w for w in weights), Fraction(0))
    h = g.h
    counts = _pair_counts(g)
    pairs = []
    for i in range(h):
        for j in range(h):
            n = counts.get((i, h + j), 0)
            exp = Fraction(p + 1) / (wE * weights[i] * weights[j])
            pairs.append(PairDeviation(i, h + j, n, exp, n - exp))
    # each vertex sees p + 1 isogenies; an edge stands for a unit orbit of size w_v / width
    row_ok = all(sum(Fraction(g.vertices[v].weight, g.edges[k].width) for k in g.incident(v)) == p + 1
                 for v in range(g.num_vertices))
    qpairs = []
    if quotient is not None:
        qc = _pair_counts(quotient)
        seen = set()
        for (s, t), n in qc.items():
            key = tuple(sorted((s, t)))
            if key in seen:
                continue
            seen.add(key)
            vs, vt = quotient.vertices[s], quotient.vertices[t]
            if vs.copy == vt.copy:
                continue
            n = qc.get((s, t), 0) + (qc.get((t, s), 0) if s != t else 0)
            rational = lambda v: v.j is not None and v.j.is_rational()
            eps = 2 if rational(vs) and rational(vt) else 1
            exp = Fraction(p + 1) / (wE * eps * vs.weight * vt.weight)
            qpairs.append(PairDeviation(s, t, n, exp, n - exp))
    return EquidistributionReport(p, wE, pairs, qpairs, row_ok)


@dataclass
class ConnectivityReport:
    connected: bool
    articulation_points: list[int]
    bridges: list[int]

    @property
    def non_disconnecting(self) -> bool:
        return self.connected and not self.articulation_points

    def to_json(self) -> dict:
        return {"connected": self.connected, "articulation_points": self.articulation_points,
                "bridges": self.bridges, "non_disconnecting": self.non_disconnecting}


def connectivity_report(graph: Graph) -> ConnectivityReport:
    bridges = [k for k in range(graph.num_edges) if graph.is_bridge(k)]
    return ConnectivityReport(graph.is_connected(), sorted(graph.articulation_points()), bridges)


def _j_text(v) -> str:
    return "" if v.j is None else str(v.j)


def to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for k, v in enumerate(graph.vertices):
        copy = "V1" if v.copy == V1 else ("V2" if v.copy else "-")
        lines.append(f'  v{k} [label="{k}", copy="{copy}", j="{_j_text(v)}", w={v.weight}, kind="{v.kind}"];')
    for k, e in enumerate(graph.edges):
        lines.append(f'  v{e.source} -- v{e.target} [id="e{k}", width={e.width}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: Graph) -> str:
    data = {
        "p": getattr(graph, "p", None),
        "q": getattr(graph, "q", None),
        "vertices": [{"index": k, "copy": v.copy, "class": v.cls, "weight": v.weight,
                      "j": _j_text(v) or None, "kind": v.kind} for k, v in enumerate(graph.vertices)],
        "edges": [{"index": k, "source": e.source, "target": e.target, "width": e.width}
                  for k, e in enumerate(graph.edges)],
        "rank_h1": graph.rank_h1(),
    }
    return json.dumps(data, indent=2)
