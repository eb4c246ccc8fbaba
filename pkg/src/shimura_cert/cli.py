"""shimura-cert: scan primes, build and export graphs, compute Gross vectors and certificates."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .component_group.snf import smith_normal_form
from .screen.certificate import _load_graph, certify
from .screen.checks import congruence_scan
from .screen.config import ScreenConfig
from .shimura_graph.pipeline import analyse_graph
from .shimura_graph.quotient import ExceptionalComponentError, UnsupportedCaseError
from .shimura_graph.reports import to_dot, to_json
from .winding.gross import boundary, gross_vectors

log = logging.getLogger("shimura_cert")

EXIT_OK, EXIT_ERROR, EXIT_UNSUPPORTED = 0, 2, 3


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _config(args) -> ScreenConfig:
    base = ScreenConfig.from_file(args.config) if getattr(args, "config", None) else ScreenConfig(
        q=getattr(args, "q", None) or 251)
    over = {k: getattr(args, k, None) for k in ("q", "p_min", "p_max", "discs", "out", "cache_dir", "jobs",
                                                 "seed", "normalization")}
    return base.override(**over)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_scan(args) -> int:
    cfg = _config(args)
    primes = congruence_scan(cfg.p_min, cfg.p_max, cfg.q, cfg.discs or (4, 28, 36, 267), cfg.jobs)
    _emit(json.dumps({"q": cfg.q, "range": [cfg.p_min, cfg.p_max], "primes": primes}), cfg.out)
    return EXIT_OK


def _bundle(args):
    cfg = _config(args)
    g = _load_graph(args.p, cfg.q, cfg.cache_dir, cfg.seed)
    return cfg, g


def cmd_graph_build(args) -> int:
    cfg, g = _bundle(args)
    info = {"p": g.p, "q": g.q, "vertices": g.num_vertices, "edges": g.num_edges, "rank_h1": g.rank_h1(),
            "widths": {str(w): g.widths().count(w) for w in sorted(set(g.widths()))}}
    _emit(json.dumps(info, indent=2), cfg.out)
    return EXIT_OK


def cmd_graph_export(args) -> int:
    cfg, g = _bundle(args)
    graph = g
    if args.which != "full":
        b = analyse_graph(g.p, g.q, graph=g)
        graph = b.quotient if args.which == "quotient" else b.desingularized
    text = to_dot(graph) if args.format == "dot" else to_json(graph)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_gross(args) -> int:
    cfg, g = _bundle(args)
    vecs = gross_vectors(g, cfg.discs or (4, 28, 36, 267), cfg.normalization)
    out = {}
    for d, v in vecs.items():
        bd = boundary(g, v.coefficients)
        entry = v.to_json()
        entry["boundary"] = {str(k): str(c) for k, c in enumerate(bd) if c}
        entry["boundary_j"] = sorted({str(g.vertices[k].j) for k, c in enumerate(bd) if c})
        out[str(d)] = entry
    _emit(json.dumps(out, indent=2), cfg.out)
    return EXIT_OK


def cmd_cert(args) -> int:
    cfg = _config(args)
    cert = certify(args.p, cfg.q, cfg)
    _emit(cert.dumps(), cfg.out)
    log.info("verdict for (%d, %d): %s", args.p, cfg.q, cert.verdict)
    return EXIT_UNSUPPORTED if cert.verdict == "unsupported-case" else EXIT_OK


def cmd_snf(args) -> int:
    text = Path(args.matrix).read_text() if Path(args.matrix).exists() else args.matrix
    A = json.loads(text)
    S = smith_normal_form(A)
    _emit(json.dumps({"diagonal": [str(d) for d in S.diag], "rank": S.rank,
                      "invariant_factors": [str(d) for d in S.invariant_factors()]}), getattr(args, "out", None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shimura-cert", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_p=False):
        p.add_argument("--q", type=int)
        if needs_p:
            p.add_argument("--p", type=int, required=True)
        p.add_argument("--config")
        p.add_argument("--out")
        p.add_argument("--cache-dir", dest="cache_dir")
        p.add_argument("--seed", type=int)

    s = sub.add_parser("scan", help="primes satisfying the congruence conditions")
    common(s)
    s.add_argument("--p-min", dest="p_min", type=int)
    s.add_argument("--p-max", dest="p_max", type=int)
    s.add_argument("--discs", type=_ints)
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_scan)

    g = sub.add_parser("graph", help="dual graph of the special fibre")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    gb = gsub.add_parser("build")
    common(gb, True)
    gb.set_defaults(func=cmd_graph_build)
    ge = gsub.add_parser("export")
    common(ge, True)
    ge.add_argument("--format", choices=("dot", "json"), default="dot")
    ge.add_argument("--which", choices=("full", "quotient", "desingularized"), default="full")
    ge.set_defaults(func=cmd_graph_export)

    c = sub.add_parser("cert", help="full certificate for one (p, q)")
    common(c, True)
    c.add_argument("--discs", type=_ints)
    c.add_argument("--normalization", choices=("aut", "units"))
    c.set_defaults(func=cmd_cert)

    gr = sub.add_parser("gross", help="Gross vectors and their boundaries")
    common(gr, True)
    gr.add_argument("--discs", type=_ints)
    gr.add_argument("--normalization", choices=("aut", "units"))
    gr.set_defaults(func=cmd_gross)

    sn = sub.add_parser("snf", help="Smith normal form of an integer matrix (JSON text or file)")
    sn.add_argument("matrix")
    sn.add_argument("--out")
    sn.set_defaults(func=cmd_snf)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UnsupportedCaseError, ExceptionalComponentError) as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ValueError, ArithmeticError, AssertionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
