"""The four conditions under which the smooth model of X_{n} exists, checked on a concrete graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..shimura_graph.genus import genus_and_gonality
from .laplacian import BoundaryMaps, ComponentGroup, component_group, is_killed_by, laplacian


@dataclass
class SmoothModelHypotheses:
    n: int
    base_component: int
    base_assumed: bool  # (1) a modelling input, never computed
    two_points: bool  # (2) exactly two incident edges ...
    non_disconnecting: bool  # ... and removing either keeps the graph connected
    torsion_free: bool | None  # (3) via the gonality bound; None when p, q are unknown
    torsion_conditional: str
    not_killed: bool  # (4)
    killed_by: list[int] = field(default_factory=list)  # components C with n(C - base) in image

    @property
    def flags(self) -> tuple[bool, bool, bool | None, bool]:
        return (self.base_assumed, self.two_points and self.non_disconnecting, self.torsion_free, self.not_killed)

    @property
    def all_hold(self) -> bool:
        return all(f is True for f in self.flags)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "base_component": self.base_component,
            "h1_base_component": "assumed",
            "h2_two_points": self.two_points,
            "h2_non_disconnecting": self.non_disconnecting,
            "h3_torsion_free": self.torsion_free,
            "h3_conditional_on": self.torsion_conditional,
            "h4_not_killed": self.not_killed,
            "killed_by": self.killed_by,
        }


def smooth_model_hypotheses(graph, iota: BoundaryMaps | ComponentGroup | None, base: int, n: int,
                            p: int | None = None, q: int | None = None) -> SmoothModelHypotheses:
    """Check hypotheses (2)-(4) for the base component `base` of a desingularised graph."""
    inc = graph.incident(base)
    two = len(inc) == 2
    nondis = all(not graph.is_bridge(k) for k in inc)
    if iota is None:
        iota = laplacian(graph)
    cg = iota if isinstance(iota, ComponentGroup) else component_group(iota)
    killed = [c for c in range(graph.num_vertices)
              if c != base and is_killed_by(cg, n, c, base)]
    p = p if p is not None else getattr(graph, "p", None)
    q = q if q is not None else getattr(graph, "q", None)
    tf = None
    if p is not None and q is not None:
        gd = genus_and_gonality(p, q)
        tf = n < gd.degree_lower_bound
    return SmoothModelHypotheses(n, base, True, two, nondis, tf,
                                 "lower bound (21/200)(g - 1) on the complex gonality", not killed, killed)
