"""Boundary maps, the intersection matrix iota = -d_* d^*, and component groups."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .snf import SmithForm, smith_normal_form


@dataclass
class BoundaryMaps:
    """d_upper_star: Z^{S0} -> Z^{S1}, f -> f(t(e)) - f(s(e)); d_star: Z^{S1} -> Z^{S0} its transpose."""

    d_upper_star: list[list[int]]  # |S1| x |S0|
    d_star: list[list[int]]  # |S0| x |S1|
    iota: list[list[int]]  # |S0| x |S0|


def boundary_maps(graph) -> BoundaryMaps:
    nv, ne = graph.num_vertices, graph.num_edges
    up = [[0] * nv for _ in range(ne)]
    for k, e in enumerate(graph.edges):
        up[k][e.target] += 1
        up[k][e.source] -= 1
    down = [[up[k][v] for k in range(ne)] for v in range(nv)]
    iota = [[0] * nv for _ in range(nv)]
    for e in graph.edges:
        s, t = e.source, e.target
        # -(d_* d^*) accumulated edge by edge
        iota[s][s] -= 1
        iota[t][t] -= 1
        iota[s][t] += 1
        iota[t][s] += 1
    return BoundaryMaps(up, down, iota)


def laplacian(graph) -> BoundaryMaps:
    """iota = -d_* d^* for a graph whose edges all have width one."""
    if any(e.width != 1 for e in graph.edges):
        raise ValueError("graph has edges of width > 1; desingularize it first")
    return boundary_maps(graph)


@dataclass
class ComponentGroup:
    invariant_factors: list[int]
    free_rank: int
    smith: SmithForm = field(repr=False)

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0


def component_group(iota) -> ComponentGroup:
    """coker(iota : Z^{S0} -> Z^{S0}[+]) via Smith normal form."""
    M = iota.iota if isinstance(iota, BoundaryMaps) else iota
    S = smith_normal_form(M)
    n = len(M)
    zeros = n - S.rank
    if zeros != 1:
        warnings.warn(f"graph is disconnected ({zeros} components); component group has a free part",
                      stacklevel=2)
    return ComponentGroup(S.invariant_factors(), max(zeros - 1, 0), S)


def _smith(iota) -> SmithForm:
    if isinstance(iota, ComponentGroup):
        return iota.smith
    M = iota.iota if isinstance(iota, BoundaryMaps) else iota
    return smith_normal_form(M)


def is_killed_by(iota, n: int, c1: int, c2: int, smith: SmithForm | None = None) -> bool:
    """Whether n (c1 - c2) lies in the image of iota."""
    if c1 == c2:
        raise ValueError("the two components must differ")
    S = smith or _smith(iota)
    b = [0] * S.rows
    b[c1] += n
    b[c2] -= n
    return S.in_image(b)


@dataclass
class FlowProblem:
    current: list[int]
    potential: list[int]
    source: int | None = None  # where the current enters
    sink: int | None = None

    def __post_init__(self):
        if sum(self.current) != 0:
            raise ValueError("current must have total weight zero")


@dataclass
class FlowReport:
    ok: bool
    residuals: list[int]
    bad_vertices: list[int]
    monotone: bool | None = None  # v(sink) < v(C) < v(source) for every other C


def verify_flow(fp: FlowProblem, graph) -> FlowReport:
    """Check sum over neighbours D of C of (v(C) - v(D)) = i(C) at every vertex."""
    v = fp.potential
    lhs = [0] * graph.num_vertices
    for e in graph.edges:
        s, t = e.source, e.target
        lhs[s] += v[s] - v[t]
        lhs[t] += v[t] - v[s]
    res = [a - b for a, b in zip(lhs, fp.current)]
    bad = [c for c, r in enumerate(res) if r]
    mono = None
    if not bad and fp.source is not None and fp.sink is not None:
        lo, hi = v[fp.sink], v[fp.source]
        mono = all(lo < v[c] < hi for c in range(graph.num_vertices) if c not in (fp.source, fp.sink))
    return FlowReport(not bad, res, bad, mono)
