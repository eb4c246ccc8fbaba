"""Build the graph, both involutions, the w_q quotient and its desingularisation in one go."""

from __future__ import annotations

from dataclasses import dataclass

from ..arith.quadratic import kronecker
from .graph import DualGraph, build_graph, label_vertices_by_j
from .involutions import ALAction, atkin_lehner
from .quotient import QuotientGraph, descend, desingularize, exceptional_component, quotient_by


@dataclass
class GraphBundle:
    p: int
    q: int
    graph: DualGraph
    wq: ALAction
    wp: ALAction
    quotient: QuotientGraph
    desingularized: QuotientGraph
    exceptional: int | None


def analyse_graph(p: int, q: int, classes=None, graph: DualGraph | None = None) -> GraphBundle:
    g = graph if graph is not None else build_graph(p, q, classes)
    if g.vertices[0].j is None:
        label_vertices_by_j(g)
    wq = atkin_lehner(g, q)
    wp = atkin_lehner(g, p)
    Q = quotient_by(g, wq)
    descend(Q, wp)
    D = desingularize(Q)
    exc = None
    if p % 4 == 1 and kronecker(q, p) == -1:
        exc = exceptional_component(D, p, q)
    return GraphBundle(p, q, g, wq, wp, Q, D, exc)
