"""Command-line interface.

Exit codes: 0 success, 1 nothing found (or a check failed), 2 input error,
3 search budget exhausted.  Every line written to stdout is a standalone
JSON value.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import families
from .document import GraphDocument, format_number, parse_document, parse_weights
from .graph import GraphInputError
from .mwis import WeightedGraph, brute_mwis, solve_mwis
from .reconstruction import count_by_reconstruction
from .separators import (
    brute_force_separators,
    count_minimal_separators,
    enumerate_minimal_separators,
    separator_traces,
)
from .structures import CreatureWitness, Status, find_creature, find_skinny_ladder_minor, verify_creature
from .zeta import zeta, zeta_brute

EXIT_OK, EXIT_NONE, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise GraphInputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> GraphDocument:
    return parse_document(_read_text(path))


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path}: line {exc.lineno}: invalid JSON ({exc.msg})") from None


def _generated(args) -> families.LabeledGraph | GraphDocument:
    fam = args.family
    if fam == "prism":
        return families.prism(args.k)
    if fam == "theta":
        return families.theta(args.k, args.path_len)
    if fam == "skinny-ladder":
        return families.skinny_ladder(args.k)
    if fam == "creature":
        return families.creature_graph(args.k, args.a_size, args.b_size)
    if fam == "interval":
        return GraphDocument.from_graph(families.random_interval_graph(args.n, args.seed))
    raise GraphInputError(f"unknown family {fam!r}")


def cmd_gen(args) -> int:
    made = _generated(args)
    doc = made if isinstance(made, GraphDocument) else GraphDocument.from_graph(made.graph, made.labels)
    text = doc.to_json() + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_sep(args) -> int:
    doc = _load(args.file)
    G = doc.graph()
    if args.action == "traces":
        if args.vertex is None:
            raise GraphInputError("sep traces needs --vertex")
        v = doc.resolve(args.vertex)
        seps = brute_force_separators(G) if args.brute else enumerate_minimal_separators(G)
        traces = sorted(separator_traces(G, v, seps), key=lambda t: (len(t), sorted(t)))
        out = {"vertex": v, "count": len(traces), "traces": [sorted(t) for t in traces]}
        if args.k is not None:
            bound = G.n ** (args.k + 1)
            out.update(k=args.k, bound=bound, within_bound=len(traces) <= bound)
        _emit(out)
        return EXIT_OK if out.get("within_bound", True) else EXIT_NONE
    if args.action == "count":
        count = len(brute_force_separators(G)) if args.brute else count_minimal_separators(G)
        _emit(count)
        return EXIT_OK
    seps = brute_force_separators(G) if args.brute else enumerate_minimal_separators(G)
    for ms in seps:
        _emit(ms.sorted_vertices())
    return EXIT_OK


def cmd_zeta(args) -> int:
    doc = _load(args.file)
    G = doc.graph()
    S = doc.resolve_set(args.set)
    if args.brute:
        _emit({"value": zeta_brute(G, S)})
    else:
        cert = zeta(G, S)
        _emit({"value": cert.value, "witness": sorted(cert.I)})
    return EXIT_OK


def _status_exit(status: Status) -> int:
    return {Status.FOUND: EXIT_OK, Status.NONE: EXIT_NONE, Status.UNKNOWN: EXIT_UNKNOWN}[status]


def cmd_creature(args) -> int:
    doc = _load(args.file)
    G = doc.graph()
    if args.action == "find":
        if args.k is None:
            raise GraphInputError("creature find needs --k")
        result = find_creature(G, args.k, args.budget)
        out = {"status": result.status.value, "explored": result.explored}
        if result.witness is not None:
            out["witness"] = result.witness.to_json()
        _emit(out)
        return _status_exit(result.status)
    if not args.witness:
        raise GraphInputError("creature verify needs --witness")
    raw = _load_json(args.witness)
    if not isinstance(raw, dict) or not all(isinstance(raw.get(p), list) for p in "ABXY"):
        raise GraphInputError("witness: expected lists under keys A, B, X, Y")
    w = CreatureWitness(
        doc.resolve_set(raw["A"]),
        doc.resolve_set(raw["B"]),
        tuple(doc.resolve(t) for t in raw["X"]),
        tuple(doc.resolve(t) for t in raw["Y"]),
    )
    verdict = verify_creature(G, w)
    violated = verdict.violated
    if verdict and args.k is not None and w.k != args.k:
        violated = "k"
    _emit({"valid": violated is None, "violated": violated, "k": w.k})
    return EXIT_OK if violated is None else EXIT_NONE


def cmd_ladder(args) -> int:
    G = _load(args.file).graph()
    result = find_skinny_ladder_minor(G, args.k, args.budget)
    out = {"status": result.status.value, "explored": result.explored}
    if result.witness is not None:
        out["model"] = result.witness.to_json()
    _emit(out)
    return _status_exit(result.status)


def cmd_certify(args) -> int:
    G = _load(args.file).graph()
    report = count_by_reconstruction(G, args.k, args.zeta_max)
    summary = report.summary()
    if args.report_dir:
        from .report import write_certify_report

        summary["files"] = [str(p) for p in write_certify_report(report, args.report_dir)]
    _emit(summary)
    return EXIT_OK if report.ok else EXIT_NONE


def cmd_mwis(args) -> int:
    doc = _load(args.file)
    weights = doc.weights
    if args.weights:
        weights = parse_weights(_load_json(args.weights), doc.n, where=args.weights)
    WG = WeightedGraph(doc.graph(), weights)
    if args.brute:
        _emit({"weight": format_number(brute_mwis(WG))})
    else:
        value, chosen = solve_mwis(WG)
        _emit({"weight": format_number(value), "set": sorted(chosen)})
    return EXIT_OK


def cmd_growth(args) -> int:
    rows = []
    for k in range(args.k_min, args.k_max + 1):
        ns = argparse.Namespace(family=args.family, k=k, path_len=args.path_len, a_size=1, b_size=1, n=k, seed=args.seed)
        made = _generated(ns)
        G = made.graph() if isinstance(made, GraphDocument) else made.graph
        count = count_minimal_separators(G)
        rows.append((k, G.n, count))
        _emit({"family": args.family, "k": k, "n": G.n, "separators": count})
    if args.report_dir:
        from .report import write_growth_report

        _emit({"files": [str(p) for p in write_growth_report(args.family, rows, args.report_dir)]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="septamer", description="Minimal separators, creatures and skinny ladders.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family graph as a JSON document")
    g.add_argument("family", choices=families.FAMILIES)
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--path-len", type=int, default=3)
    g.add_argument("--a-size", type=int, default=1)
    g.add_argument("--b-size", type=int, default=1)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("sep", help="enumerate or count minimal separators, or list traces")
    s.add_argument("action", choices=("enum", "count", "traces"))
    s.add_argument("file", nargs="?", default="-")
    s.add_argument("--brute", action="store_true")
    s.add_argument("--vertex")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_sep)

    z = sub.add_parser("zeta", help="exact zeta value of a vertex set")
    z.add_argument("file", nargs="?", default="-")
    z.add_argument("--set", required=True, help="comma-separated labels or indices")
    z.add_argument("--brute", action="store_true")
    z.set_defaults(func=cmd_zeta)

    c = sub.add_parser("creature", help="search for or verify a k-creature")
    c.add_argument("action", choices=("find", "verify"))
    c.add_argument("file", nargs="?", default="-")
    c.add_argument("--k", type=int)
    c.add_argument("--budget", type=int)
    c.add_argument("--witness")
    c.set_defaults(func=cmd_creature)

    lad = sub.add_parser("ladder", help="search for a k-skinny-ladder induced minor")
    lad.add_argument("action", choices=("find",))
    lad.add_argument("file", nargs="?", default="-")
    lad.add_argument("--k", type=int, required=True)
    lad.add_argument("--budget", type=int)
    lad.set_defaults(func=cmd_ladder)

    ce = sub.add_parser("certify", help="build reconstruction certificates for every separator")
    ce.add_argument("file", nargs="?", default="-")
    ce.add_argument("--k", type=int)
    ce.add_argument("--zeta-max", type=int)
    ce.add_argument("--report-dir", help="write certificates.tsv and figures here")
    ce.set_defaults(func=cmd_certify)

    m = sub.add_parser("mwis", help="maximum weight independent set")
    m.add_argument("file", nargs="?", default="-")
    m.add_argument("--weights")
    m.add_argument("--brute", action="store_true")
    m.set_defaults(func=cmd_mwis)

    gr = sub.add_parser("growth", help="separator counts along a family")
    gr.add_argument("--family", choices=families.FAMILIES, required=True)
    gr.add_argument("--k-min", type=int, default=1)
    gr.add_argument("--k-max", type=int, default=6)
    gr.add_argument("--path-len", type=int, default=3)
    gr.add_argument("--seed", type=int, default=0)
    gr.add_argument("--report-dir")
    gr.set_defaults(func=cmd_growth)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"septamer: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
