"""The dual graph of the special fibre at p of the Shimura curve of discriminant pq.

Vertices are two copies (V1, V2) of the maximal-order ideal classes.  An edge is
a level-p class, i.e. a unit-orbit of sub-ideals J of index p in a class ideal
I_i; it runs from I_i (in V1) to the class of J (in V2).  Its width is the
order of the stabiliser of J in the units of O_r(I_i), modulo +-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime

from ..arith.fields import QuadExtElem
from ..arith.poly import DEFAULT_SEED
from ..quaternion.algebra import build_algebra
from ..quaternion.atkin_lehner import identify_class
from ..quaternion.brandt import brandt_matrices
from ..quaternion.classes import (
    RightIdealClass,
    VertexLevelData,
    level_structure,
    maximal_classes,
)
from ..quaternion.order import OrderLattice, maximal_order
from .modular import label_classes

V1, V2 = 1, 2


@dataclass
class Vertex:
    copy: int
    cls: int
    weight: int
    j: QuadExtElem | None = None
    kind: str = "class"  # "class" or "exceptional" (blow-up vertex)


@dataclass
class Edge:
    source: int
    target: int
    width: int
    cls: int | None = None  # level-p class index
    origin: tuple = ()


class Graph:
    """Oriented multigraph with widths; parallel edges are kept individually."""

    def __init__(self, vertices: list[Vertex], edges: list[Edge]):
        self.vertices = vertices
        self.edges = edges

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((e.source == v) + (e.target == v) for e in self.edges)

    def incident(self, v: int) -> list[int]:
        return [k for k, e in enumerate(self.edges) if v in (e.source, e.target)]

    def components(self, skip_vertex: int | None = None, skip_edge: int | None = None) -> list[list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.num_vertices) if v != skip_vertex}
        for k, e in enumerate(self.edges):
            if k == skip_edge or skip_vertex in (e.source, e.target):
                continue
            adj[e.source].append(e.target)
            adj[e.target].append(e.source)
        seen = set()
        comps = []
        for v in adj:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def rank_h1(self) -> int:
        return self.num_edges - self.num_vertices + len(self.components())

    def is_bridge(self, k: int) -> bool:
        return len(self.components(skip_edge=k)) > len(self.components())

    def articulation_points(self) -> list[int]:
        base = len(self.components())
        out = []
        for v in range(self.num_vertices):
            # removing v drops one vertex; count the remaining components
            if len(self.components(skip_vertex=v)) > base:
                out.append(v)
        return out

    def widths(self) -> list[int]:
        return [e.width for e in self.edges]


@dataclass
class EdgeData:
    """Quaternionic data behind an edge: J = I_i * lift(line) = I_k * alpha."""

    vertex: int
    line: int
    target_class: int
    alpha: tuple
    eichler: OrderLattice | None = None


class DualGraph(Graph):
    def __init__(self, p: int, q: int, classes: list[RightIdealClass], levels: list[VertexLevelData],
                 vertices: list[Vertex], edges: list[Edge], edge_data: list[EdgeData]):
        super().__init__(vertices, edges)
        self.p = p
        self.q = q
        self.classes = classes
        self.levels = levels
        self.edge_data = edge_data
        self.edge_index = {(d.vertex, d.line): k for k, d in enumerate(edge_data)}
        self.label_solutions: int | None = None

    @property
    def h(self) -> int:
        return len(self.classes)

    def vertex_of(self, copy: int, cls: int) -> int:
        return cls if copy == V1 else self.h + cls

    def edge_of(self, vertex: int, line: int) -> int:
        """Edge index of the sub-ideal with the given line at a V1 vertex class."""
        lvl = self.levels[vertex]
        return self.edge_index[(vertex, lvl.orbit_of[line])]

    def eichler_order(self, k: int) -> OrderLattice:
        d = self.edge_data[k]
        if d.eichler is None:
            lvl = self.levels[d.vertex]
            d.eichler = lvl.local.eichler_order(lvl.lines[d.line])
        return d.eichler

    def sub_ideal(self, k: int):
        d = self.edge_data[k]
        lvl = self.levels[d.vertex]
        c = self.classes[d.vertex]
        return c.ideal * lvl.local.lift(lvl.lines[d.line]), c.norm * self.p

    def weight_of_eisenstein(self) -> Fraction:
        return sum((Fraction(1, c.unit_weight) for c in self.classes), Fraction(0))


def build_graph(p: int, q: int, classes: list[RightIdealClass] | None = None) -> DualGraph:
    """Dual graph of the fibre at p for discriminant pq (q = 3 mod 4)."""
    if not (isprime(p) and isprime(q)) or p == q or p == 2 or q == 2:
        raise ValueError("p and q must be distinct odd primes")
    alg = build_algebra(q)
    if classes is None:
        classes = maximal_classes(maximal_order(alg))
    h = len(classes)
    levels = level_structure(classes, p)
    vertices = [Vertex(V1, c.index, c.unit_weight) for c in classes]
    vertices += [Vertex(V2, c.index, c.unit_weight) for c in classes]
    edges: list[Edge] = []
    data: list[EdgeData] = []
    for lvl in levels:
        c = classes[lvl.vertex]
        for li in lvl.orbit_reps():
            J = c.ideal * lvl.local.lift(lvl.lines[li])
            k, alpha = identify_class(classes, J, c.norm * p)
            edges.append(Edge(lvl.vertex, h + k, lvl.stabilizer[li], len(edges), (lvl.vertex, li)))
            data.append(EdgeData(lvl.vertex, li, k, alpha))
    return DualGraph(p, q, classes, levels, vertices, edges, data)


def label_vertices_by_j(g: DualGraph, seed: int = DEFAULT_SEED) -> DualGraph:
    """Attach supersingular j-invariants to the vertices (in place; also returned).

    `seed` drives the randomized root splitting; the labels do not depend on it.
    """
    B = brandt_matrices(g.classes, [2, 3])
    labels, nsol = label_classes({n: B[n].as_lists() for n in (2, 3)}, [c.unit_weight for c in g.classes], g.q,
                                 seed=seed)
    for v in g.vertices:
        v.j = labels[v.cls]
    g.label_solutions = nsol
    return g
