"""Quotient of the dual graph by w_q, desingularisation, and the exceptional component."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arith.fields import QuadExtElem
from ..arith.quadratic import kronecker
from .graph import Edge, Graph, Vertex
from .involutions import ALAction


class UnsupportedCaseError(RuntimeError):
    """The ramified case (an edge fixed by the involution) is outside the supported regime."""


class ExceptionalComponentError(RuntimeError):
    pass


@dataclass
class QVertex(Vertex):
    members: tuple[int, ...] = ()


@dataclass
class Descended:
    """An involution commuting with the quotient map, transported to the quotient."""

    ell: int
    vertex_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]
    edge_sign: tuple[int, ...]


class QuotientGraph(Graph):
    def __init__(self, p: int, q: int, vertices, edges, vertex_map=None, edge_map=None,
                 orbit_sizes=None, parent=None, blowup_of=None, edge_parent=None):
        super().__init__(vertices, edges)
        self.p = p
        self.q = q
        self.vertex_map = vertex_map or {}
        self.edge_map = edge_map or {}
        self.orbit_sizes = orbit_sizes or []
        self.parent = parent  # the graph this one was derived from
        self.blowup_of: dict[int, int] = blowup_of or {}
        self.edge_parent: list[int] = edge_parent or []
        self.descended: dict[int, Descended] = {}

    def exceptional_vertices(self) -> list[int]:
        return [v for v, x in enumerate(self.vertices) if x.kind == "exceptional"]


def quotient_by(g: Graph, a: ALAction) -> QuotientGraph:
    """Orbits of vertices and edges under an involution without fixed edges."""
    fixed = a.fixed_edges()
    if fixed:
        raise UnsupportedCaseError(
            f"unsupported case: w_{a.ell} fixes {len(fixed)} edge(s) (ramified case)")
    vmap, vertices = {}, []
    for v in range(g.num_vertices):
        if v in vmap:
            continue
        orbit = tuple(sorted({v, a.vertex_perm[v]}))
        x = g.vertices[v]
        qv = QVertex(x.copy, x.cls, x.weight, x.j, x.kind, orbit)
        for m in orbit:
            vmap[m] = len(vertices)
        vertices.append(qv)
    emap, edges, sizes = {}, [], []
    for k in range(g.num_edges):
        if k in emap:
            continue
        orbit = tuple(sorted({k, a.edge_perm[k]}))
        e = g.edges[k]
        for m in orbit:
            emap[m] = len(edges)
        edges.append(Edge(vmap[e.source], vmap[e.target], e.width, e.cls, orbit))
        sizes.append(len(orbit))
    return QuotientGraph(g.p, g.q, vertices, edges, vmap, emap, sizes, parent=g)


def descend(Q: QuotientGraph, b: ALAction) -> Descended:
    """Transport an involution commuting with the quotient map to Q."""
    vperm = [0] * Q.num_vertices
    for v, qv in enumerate(Q.vertices):
        vperm[v] = Q.vertex_map[b.vertex_perm[qv.members[0]]]
    eperm, signs = [0] * Q.num_edges, [1] * Q.num_edges
    for k, e in enumerate(Q.edges):
        rep = e.origin[0]
        eperm[k] = Q.edge_map[b.edge_perm[rep]]
        signs[k] = b.edge_sign[rep]
    d = Descended(b.ell, tuple(vperm), tuple(eperm), tuple(signs))
    Q.descended[b.ell] = d
    return d


def desingularize(Q: Graph) -> QuotientGraph:
    """Replace each width-e edge by a chain of e unit edges through e - 1 new vertices."""
    p, q = getattr(Q, "p", None), getattr(Q, "q", None)
    vertices = [QVertex(v.copy, v.cls, v.weight, v.j, v.kind, getattr(v, "members", ())) for v in Q.vertices]
    edges, parent, blowup = [], [], {}
    for k, e in enumerate(Q.edges):
        if e.width == 1:
            edges.append(Edge(e.source, e.target, 1, e.cls, e.origin))
            parent.append(k)
            continue
        prev = e.source
        for step in range(e.width - 1):
            vertices.append(QVertex(0, -1, 1, None, "exceptional", ()))
            nv = len(vertices) - 1
            blowup[nv] = k
            edges.append(Edge(prev, nv, 1, e.cls, e.origin))
            parent.append(k)
            prev = nv
        edges.append(Edge(prev, e.target, 1, e.cls, e.origin))
        parent.append(k)
    D = QuotientGraph(p, q, vertices, edges, parent=Q, blowup_of=blowup, edge_parent=parent)
    return D


def exceptional_component(D: QuotientGraph, p: int, q: int) -> int:
    """The blow-up vertex of the width-2 edge reversed by w_p (the F_p-rational component)."""
    if p % 4 != 1 or q % 4 != 3 or kronecker(q, p) != -1:
        raise ValueError("needs p = 1 mod 4, q = 3 mod 4 and (q/p) = -1")
    Q = D.parent
    if not isinstance(Q, QuotientGraph) or p not in Q.descended:
        raise ValueError("the parent quotient graph must carry the descended w_p action")
    wp = Q.descended[p]
    cands = []
    for v, k in D.blowup_of.items():
        if Q.edges[k].width == 2 and wp.edge_perm[k] == k and wp.edge_sign[k] == -1:
            cands.append(v)
    if len(cands) != 1:
        raise ExceptionalComponentError(f"expected one exceptional component, found {len(cands)}")
    return cands[0]


# -- degree bookkeeping at quotient vertices ---------------------------------

def vertex_case(j: QuadExtElem) -> str:
    if not j.is_rational():
        return "non-rational"
    if j.a0 == 0:
        return "j=0"
    if j.a0 == 1728 % j.modulus:
        return "j=1728"
    return "rational"


@dataclass
class DegreeCheck:
    vertex: int
    case: str
    degree: int
    expected: str
    ok: bool
    sign: int | None = None


def degree_checks(Q: QuotientGraph) -> list[DegreeCheck]:
    """Compare each vertex degree with the counts predicted from its j-invariant."""
    p = Q.p
    out = []
    for v, x in enumerate(Q.vertices):
        if x.kind != "class":
            continue
        if x.j is None:
            raise ValueError("vertices must be labelled by j first")
        case = vertex_case(x.j)
        deg = Q.degree(v)
        sign = None
        if case == "non-rational":
            exp, ok = str(p + 1), deg == p + 1
        elif case == "rational":
            exp, ok = f"{(p + 1) // 2}", 2 * deg == p + 1
        elif case == "j=1728":
            exp, ok = f"{(p + 3) // 4}", 4 * deg == p + 3
        else:
            exp = f"({p}+3+-2)/6"
            ok = False
            for s in (1, -1):
                if 6 * deg == p + 3 + 2 * s:
                    ok, sign = True, s
        out.append(DegreeCheck(v, case, deg, exp, ok, sign))
    return out
