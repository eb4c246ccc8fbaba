"""Atkin-Lehner involutions w_p and w_q acting on the dual graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..quaternion.atkin_lehner import identify_class
from .graph import V1, DualGraph


class InvolutionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ALAction:
    ell: int
    vertex_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]
    edge_sign: tuple[int, ...]  # -1 when the image edge is traversed backwards

    def fixed_vertices(self) -> list[int]:
        return [v for v, w in enumerate(self.vertex_perm) if v == w]

    def fixed_edges(self) -> list[int]:
        return [e for e, f in enumerate(self.edge_perm) if e == f]

    def is_involution(self) -> bool:
        vp, ep = self.vertex_perm, self.edge_perm
        return all(vp[vp[v]] == v for v in range(len(vp))) and all(ep[ep[e]] == e for e in range(len(ep)))


def _inverse(alg, elem):
    v, d = elem
    n = alg.norm(v)
    return tuple(x * d for x in alg.conj(v)), n


def _line_in_class(g: DualGraph, k: int, sub):
    """Edge index of a sub-ideal of I_k of index p."""
    c = g.classes[k]
    a = c.ideal.conjugate() * sub
    a = a.scale(Fraction(1) / c.norm)
    lq = g.levels[k].local
    return g.edge_of(k, lq.index(lq.key_of(a)))


def _w_q(g: DualGraph) -> ALAction:
    signs = (1, -1, 1, -1)  # x -> j x j^{-1}
    alg = g.classes[0].ideal.alg
    cls_img = []
    for c in g.classes:
        k, gamma = identify_class(g.classes, c.ideal.map_coords(signs), c.norm)
        cls_img.append((k, _inverse(alg, gamma)))
    h = g.h
    vperm = tuple(cls_img[v.cls][0] + (0 if v.copy == V1 else h) for v in g.vertices)
    eperm = []
    for k in range(g.num_edges):
        d = g.edge_data[k]
        J, _ = g.sub_ideal(k)
        kk, ginv = cls_img[d.vertex]
        eperm.append(_line_in_class(g, kk, J.map_coords(signs).right_mul(ginv)))
    return ALAction(g.q, vperm, tuple(eperm), (1,) * g.num_edges)


def _w_p(g: DualGraph) -> ALAction:
    alg = g.classes[0].ideal.alg
    h = g.h
    vperm = tuple((v + h) % (2 * h) for v in range(2 * h))
    eperm = []
    for k in range(g.num_edges):
        d = g.edge_data[k]
        c = g.classes[d.vertex]
        sub = c.ideal.scale(g.p).right_mul(_inverse(alg, d.alpha))
        eperm.append(_line_in_class(g, d.target_class, sub))
    return ALAction(g.p, vperm, tuple(eperm), (-1,) * g.num_edges)


def atkin_lehner(g: DualGraph, ell: int) -> ALAction:
    if ell == g.q:
        a = _w_q(g)
    elif ell == g.p:
        a = _w_p(g)
    else:
        raise ValueError(f"ell must be p = {g.p} or q = {g.q}")
    if not a.is_involution():
        raise InvolutionError(f"w_{ell} is not an involution")
    for k, e in enumerate(g.edges):
        f = g.edges[a.edge_perm[k]]
        ends = (a.vertex_perm[e.source], a.vertex_perm[e.target])
        if a.edge_sign[k] < 0:
            ends = ends[::-1]
        if ends != (f.source, f.target) or e.width != f.width:
            raise InvolutionError(f"w_{ell} is not compatible with the graph structure")
    copies_kept = all(g.vertices[a.vertex_perm[v]].copy == g.vertices[v].copy for v in range(g.num_vertices))
    if copies_kept != (ell == g.q):
        raise InvolutionError(f"w_{ell} has the wrong effect on the bipartition")
    return a
