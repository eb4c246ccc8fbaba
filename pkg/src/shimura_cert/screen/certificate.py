"""Assemble every per-instance check into one certificate."""

from __future__ import annotations

import json
import logging
import pickle
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..arith.poly import DEFAULT_SEED
from ..component_group.hypotheses import smooth_model_hypotheses
from ..component_group.laplacian import component_group, laplacian
from ..shimura_graph.genus import genus_and_gonality, genus_formula
from ..shimura_graph.graph import DualGraph, build_graph, label_vertices_by_j
from ..shimura_graph.pipeline import GraphBundle, analyse_graph
from ..shimura_graph.quotient import ExceptionalComponentError, UnsupportedCaseError, degree_checks
from ..shimura_graph.reports import connectivity_report
from ..winding.cycles import CyclePath, cycle_shape_report, find_cycle_combination
from ..winding.gross import gross_vector_preconditions
from .checks import congruence_conditions, local_conditions_check, special_point_check, suggest_discriminants
from .config import ScreenConfig

log = logging.getLogger(__name__)

VERSION = 1
VERDICTS = ("certified-no-nontrivial-points", "certified-empty", "hypotheses-not-met", "unsupported-case")
STATUSES = ("verified", "failed", "assumed", "conditional", "cited", "not-computed", "unsupported", "skipped")

# checks that must be "verified" before any certified-* verdict
REQUIRED = (
    "local_conditions",
    "graph_genus",
    "quotient_degrees",
    "exceptional_component",
    "desingularization",
    "two_non_disconnecting_points",
    "torsion_free_intersection",
    "component_group_torsion",
    "gross_cycle",
)


@dataclass
class Check:
    name: str
    paper_anchor: str
    status: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        return {"name": self.name, "paper_anchor": self.paper_anchor, "status": self.status, "data": self.data}


@dataclass
class Certificate:
    p: int
    q: int
    verdict: str
    checks: list[Check]
    version: int = VERSION
    config: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"version": self.version, "p": self.p, "q": self.q, "verdict": self.verdict,
                "config": self.config, "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, data) -> Certificate:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("version") != VERSION:
            raise ValueError(f"unsupported certificate version {data.get('version')}")
        checks = [Check(**c) for c in data["checks"]]
        return cls(data["p"], data["q"], data["verdict"], checks, data["version"], data.get("config", {}))


def decide_verdict(checks: list[Check]) -> str:
    by = {c.name: c for c in checks}
    if any(c.status == "unsupported" for c in checks):
        return "unsupported-case"
    if any(by.get(n) is None or by[n].status != "verified" for n in REQUIRED):
        return "hypotheses-not-met"
    sp = by.get("special_points")
    if sp is not None and sp.status == "verified":
        return "certified-empty"
    return "certified-no-nontrivial-points"


def _load_graph(p: int, q: int, cache_dir: str | None, seed: int = DEFAULT_SEED) -> DualGraph:
    path = Path(cache_dir) / f"graph_v{VERSION}_{p}_{q}.pickle" if cache_dir else None
    if path is not None and path.exists():
        log.info("loading cached graph %s", path)
        with path.open("rb") as fh:
            return pickle.load(fh)
    g = build_graph(p, q)
    log.info("labelling vertices with root-splitting seed %d", seed)
    label_vertices_by_j(g, seed)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("wb") as fh:
            pickle.dump(g, fh)
    return g


def _finish(p, q, checks, config) -> Certificate:
    return Certificate(p, q, decide_verdict(checks), checks, config=config.to_json() if config else {})


def certify(p: int, q: int, config: ScreenConfig | None = None, bundle: GraphBundle | None = None) -> Certificate:
    config = config or ScreenConfig(q=q)
    checks: list[Check] = []

    lc = local_conditions_check(p, q)
    status = "verified" if lc.supported else ("unsupported" if lc.holds else "failed")
    checks.append(Check("local_conditions", "necessary local conditions, unramified case", status, lc.to_json()))
    if status != "verified":
        return _finish(p, q, checks, config)

    discs = list(config.discs) if config.discs is not None else suggest_discriminants(
        p, q, config.disc_search_bound, config.max_class_number)
    cong = congruence_conditions(p, q, discs)
    checks.append(Check("congruences", "congruence conditions of the explicit family",
                        "verified" if all(cong.values()) else "failed", {"conditions": cong, "discs": discs}))

    gd = genus_and_gonality(p, q)
    if bundle is None:
        g = _load_graph(p, q, config.cache_dir, config.seed)
        try:
            bundle = analyse_graph(p, q, graph=g)
        except UnsupportedCaseError as exc:
            checks.append(Check("quotient", "quotient by w_q", "unsupported", {"error": str(exc)}))
            return _finish(p, q, checks, config)
        except ExceptionalComponentError as exc:
            checks.append(Check("exceptional_component", "unique F_p-rational component", "failed",
                                {"error": str(exc)}))
            return _finish(p, q, checks, config)
    g, Q, D = bundle.graph, bundle.quotient, bundle.desingularized

    rank = g.rank_h1()
    checks.append(Check("graph_genus", "rank of H_1 of the dual graph equals the genus",
                        "verified" if rank == gd.genus else "failed",
                        {"vertices": g.num_vertices, "edges": g.num_edges, "rank_h1": rank,
                         "genus_formula": gd.genus, "match": rank == gd.genus}))

    dc = degree_checks(Q)
    checks.append(Check("quotient_degrees", "edge counts at quotient vertices by j-invariant",
                        "verified" if all(d.ok for d in dc) else "failed",
                        {"vertices": [{"vertex": d.vertex, "case": d.case, "degree": d.degree,
                                       "expected": d.expected, "ok": d.ok, "sign": d.sign} for d in dc]}))

    x = bundle.exceptional
    nbrs = sorted({e.source if e.target == x else e.target for e in (D.edges[k] for k in D.incident(x))})
    checks.append(Check("exceptional_component", "unique F_p-rational component from the width-2 edge",
                        "verified" if D.degree(x) == 2 else "failed",
                        {"vertex": x, "degree": D.degree(x), "neighbours": nbrs,
                         "neighbour_j": [str(D.vertices[v].j) for v in nbrs]}))

    same = Q.rank_h1() == D.rank_h1()
    checks.append(Check("desingularization", "H_1 unchanged by blowing up", "verified" if same else "failed",
                        {"quotient_vertices": Q.num_vertices, "quotient_edges": Q.num_edges,
                         "desingularized_vertices": D.num_vertices, "desingularized_edges": D.num_edges,
                         "rank_h1": D.rank_h1()}))

    n = p + 1
    cg = component_group(laplacian(D))
    hyp = smooth_model_hypotheses(D, cg, x, n, p, q)
    checks.append(Check("base_component", "designated base component", "assumed", {"component": x}))
    checks.append(Check("two_non_disconnecting_points", "two non-disconnecting singular points",
                        "verified" if hyp.two_points and hyp.non_disconnecting else "failed",
                        {"two_points": hyp.two_points, "non_disconnecting": hyp.non_disconnecting}))
    checks.append(Check("torsion_free_intersection", "no nontrivial n-torsion on the curve, via gonality",
                        "verified" if hyp.torsion_free else "failed",
                        {"n": n, "degree_lower_bound": str(gd.degree_lower_bound),
                         "conditional_on": hyp.torsion_conditional}))
    checks.append(Check("component_group_torsion", "(p+1)(J_exc - J) not in the image of iota",
                        "verified" if hyp.not_killed else "failed",
                        {"n": n, "invariant_factors": [str(d) for d in cg.invariant_factors],
                         "free_rank": cg.free_rank, "killed_by": hyp.killed_by,
                         "components_tested": D.num_vertices - 1}))

    conn = connectivity_report(D)
    checks.append(Check("non_disconnecting_graph", "no single component disconnects the graph",
                        "verified" if conn.non_disconnecting else "failed", conn.to_json()))

    flags = {d: gross_vector_preconditions(d, p, q) for d in discs}
    cyc = find_cycle_combination(bundle, discs, p, config.normalization)
    if isinstance(cyc, CyclePath) and cyc.boundary_zero and cyc.prime_to_p:
        shape = cycle_shape_report(cyc, D)
        data = cyc.to_json(D)
        data["components"] = shape.components
        data["splitting"] = {str(d): v["splitting"] for d, v in shape.per_disc.items()}
        data["normalization"] = config.normalization
        data["precondition_flags"] = {str(d): f for d, f in flags.items() if f}
        checks.append(Check("gross_cycle", "closed path of Gross vectors through the exceptional edge",
                            "verified", data))
    else:
        data = cyc.to_json() if not isinstance(cyc, CyclePath) else cyc.to_json(D)
        data["precondition_flags"] = {str(d): f for d, f in flags.items() if f}
        checks.append(Check("gross_cycle", "closed path of Gross vectors through the exceptional edge",
                            "failed", data))

    gj = gd.to_json()
    checks.append(Check("gonality", "torsion threshold pq/245 and the gonality bound",
                        "verified" if gd.n_below_threshold and gd.threshold_applies else "failed", gj))
    checks.append(Check("asymptotic_regime", "q > 245 and p large compared with q", "conditional",
                        {"q_above_245": q > 245, "p_over_q": str(Fraction(p, q)),
                         "note": "the effective size of p is not made explicit; replaced here by the exact "
                                 "component-group and connectivity checks at this (p, q)"}))
    checks.append(Check("winding_quotient", "rank zero winding quotient with finite rational points",
                        "cited", {"note": "L-values are not computed"}))

    sp = special_point_check(p, q, config.class_number_bound)
    sp_status = {"no special rational points": "verified", "special point possible": "failed",
                 "unknown": "not-computed"}[sp.verdict]
    checks.append(Check("special_points", "class numbers of Q(sqrt(-p)), Q(sqrt(-q)), Q(sqrt(-pq))",
                        sp_status, sp.to_json()))
    checks.append(Check("local_points_good_primes", "local points at primes of good reduction",
                        "not-computed", {"note": "external definition, outside this tool"}))
    return _finish(p, q, checks, config)


def reverify(cert: Certificate | dict | str) -> list[str]:
    """Recompute the cheap numeric fields of a serialized certificate; return mismatches."""
    if not isinstance(cert, Certificate):
        cert = Certificate.from_json(cert)
    p, q = cert.p, cert.q
    bad = []
    lc = local_conditions_check(p, q).to_json()
    if cert["local_conditions"].data != lc:
        bad.append("local_conditions")
    names = {c.name for c in cert.checks}
    if "graph_genus" in names and cert["graph_genus"].data["genus_formula"] != genus_formula(p, q):
        bad.append("graph_genus")
    if "gonality" in names and cert["gonality"].data != genus_and_gonality(p, q).to_json():
        bad.append("gonality")
    if "special_points" in names:
        if cert["special_points"].data != special_point_check(p, q).to_json():
            bad.append("special_points")
    if "congruences" in names:
        c = cert["congruences"].data
        if c["conditions"] != congruence_conditions(p, q, c["discs"]):
            bad.append("congruences")
    if "gross_cycle" in names and cert["gross_cycle"].status == "verified":
        d = cert["gross_cycle"].data
        if (Fraction(d["exceptional_coefficient"]) * 6) % p != d["exceptional_coefficient_mod_p"]:
            bad.append("gross_cycle")
    if cert.verdict != decide_verdict(cert.checks):
        bad.append("verdict")
    return bad
