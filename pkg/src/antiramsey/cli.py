"""``rt``: command-line entry point.

Exit codes: 0 ok, 1 discrepancy found, 2 usage or parse error, 3 cap or
search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from pathlib import Path

import tomli

from . import formulas
from .extremal import certify_avoiding, extremal_coloring
from .general import NoAvoidingColoring, r_general
from .graph import GraphError, VertexPartition, partition_stats
from .io import read_forests, read_graph, serialize_graph, write_graph
from .oracle import DEFAULT_MAX_EDGES, OracleCapExceeded, r_oracle
from .partitions import DEFAULT_MAX_N, PartitionCapExceeded
from .rainbow import (
    DEFAULT_BUDGET,
    ForestFamily,
    SearchBudgetExceeded,
    extension_feasible,
    find_color_disjoint_rainbow_trees,
    find_edge_disjoint_rainbow_trees,
    has_color_disjoint_trees,
)
from .verify import SUITES, VerifyConfig, run_verify

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CONFIG_KEYS = {"max_n_exhaustive": int, "max_edges": int, "budget": int, "jobs": int}


class UsageError(Exception):
    pass


def load_config(path: str | None) -> dict:
    """Read ``key = value`` settings (TOML syntax); unknown keys are an error."""
    if path is None:
        return {}
    try:
        data = tomli.loads(Path(path).read_text())
    except (OSError, tomli.TOMLDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for key, value in data.items():
        if key not in CONFIG_KEYS:
            raise UsageError(f"unknown config key {key!r}; known: {', '.join(CONFIG_KEYS)}")
        if not isinstance(value, CONFIG_KEYS[key]):
            raise UsageError(f"config key {key!r} must be an integer")
        out[key] = value
    return out


def _settings(args) -> dict:
    cfg = {"max_n_exhaustive": DEFAULT_MAX_N, "max_edges": DEFAULT_MAX_EDGES,
           "budget": DEFAULT_BUDGET, "jobs": 1}
    cfg.update(load_config(args.config))
    for key in cfg:
        flag = getattr(args, key, None)
        if flag is not None:
            cfg[key] = flag
    return cfg


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(payload, indent=2))


def _parse_parts(text: str) -> formulas.MultipartiteShape:
    try:
        return formulas.MultipartiteShape.of(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --parts {text!r}: {exc}") from exc


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected LO..HI") from None
    return range(lo, hi + 1)


def cmd_formula(args) -> int:
    if args.kind == "complete":
        if args.n is None:
            raise UsageError("formula complete needs -n")
        res = formulas.r_complete(args.n, args.t)
    elif args.kind == "bipartite":
        if args.p is None or args.q is None:
            raise UsageError("formula bipartite needs -p and -q")
        p, q = max(args.p, args.q), min(args.p, args.q)
        res = formulas.r_bipartite(p, q, args.t)
    elif args.kind == "multipartite":
        if args.parts is None:
            raise UsageError("formula multipartite needs --parts")
        shape = _parse_parts(args.parts)
        res = formulas.r_multipartite(shape, args.t)
        payload = res.as_dict()
        payload["f"] = formulas.f_profile(shape)
        payload["concave"] = formulas.check_concavity(shape)
        _emit(args, payload, f"r(K_{{{shape}}}, {args.t}) = {res.value}  [{', '.join(res.branch)}]")
        return EXIT_OK
    else:
        return cmd_sweep(args)
    _emit(args, res.as_dict(), f"{res.value}  [{', '.join(res.branch)}]")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.parts is None:
        raise UsageError("formula sweep needs --parts")
    shape = _parse_parts(args.parts)
    rows = []
    for t in _parse_range(args.t_range):
        res = formulas.r_multipartite(shape, t)
        rows.append({"parts": str(shape), "t": t, "value": res.value, "branch": "+".join(res.branch)})
    if args.format == "csv":
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["parts", "t", "value", "branch"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    elif args.format == "text":
        for row in rows:
            print(f"t={row['t']}: {row['value']}  [{row['branch']}]")
    else:
        print(json.dumps(rows, indent=2))
    return EXIT_OK


def cmd_r_general(args) -> int:
    cfg = _settings(args)
    G = read_graph(args.graph)
    try:
        res = r_general(G, args.t, max_n=cfg["max_n_exhaustive"], jobs=cfg["jobs"])
    except NoAvoidingColoring as exc:
        _emit(args, {"value": None, "branch": "NoAvoidingColoring", "t": args.t}, str(exc))
        return EXIT_OK
    payload = res.as_dict()
    if not args.witness:
        payload.pop("witness")
    _emit(args, payload, f"r(G,{args.t}) = {res.value}  [{res.branch.value}]"
          + (f"  witness {res.witness}" if args.witness else ""))
    return EXIT_OK


def cmd_check(args) -> int:
    cfg = _settings(args)
    G = read_graph(args.graph)
    if not G.is_colored:
        raise UsageError(f"{args.graph} is not fully colored")
    payload: dict = {"mode": args.mode, "t": args.t}
    if args.mode == "edge-disjoint":
        found, fam = find_edge_disjoint_rainbow_trees(G, args.t, cfg["budget"])
        payload.update(found=found, trees=None if fam is None else [list(f) for f in fam.forests])
    elif args.mode == "color-disjoint":
        ok, blocker = has_color_disjoint_trees(G, args.t, max_n=cfg["max_n_exhaustive"])
        payload.update(found=ok, blocking_partition=None if blocker is None else blocker.blocks())
        if args.search:
            found, fam = find_color_disjoint_rainbow_trees(G, args.t, cfg["budget"])
            payload.update(search_found=found,
                           trees=None if fam is None else [list(f) for f in fam.forests])
            if found != ok:
                _emit(args, payload)
                return EXIT_DISCREPANCY
    else:
        F = read_forests(args.forests) if args.forests else ForestFamily.empty(args.t)
        if F.t != args.t:
            raise UsageError(f"forest file has {F.t} forests but -t is {args.t}")
        cert = extension_feasible(G, F, max_n=cfg["max_n_exhaustive"])
        payload.update(found=cert.extendable, certificate=cert.as_dict())
    _emit(args, payload, f"{args.mode}: {'yes' if payload['found'] else 'no'}")
    return EXIT_OK


def cmd_extremal(args) -> int:
    cfg = _settings(args)
    G = read_graph(args.graph).uncolored()
    if args.partition:
        P = VertexPartition.parse(args.partition, G.n)
    else:
        try:
            res = r_general(G, args.t, max_n=cfg["max_n_exhaustive"], jobs=cfg["jobs"])
        except NoAvoidingColoring as exc:
            raise UsageError(str(exc)) from exc
        if res.branch.value != "PartitionMax":
            raise UsageError("host has no t edge-disjoint spanning trees; the rainbow coloring already avoids")
        P = res.witness
    C = extremal_coloring(G, args.t, P)
    payload = {"t": args.t, "partition": P.blocks(), "colors": C.num_colors, "coloring": list(C.colors)}
    if args.certify:
        payload["avoiding"] = certify_avoiding(C, args.t, cfg["budget"])
    if args.output:
        write_graph(C, args.output)
        payload["output"] = args.output
    _emit(args, payload, serialize_graph(C).rstrip())
    if args.certify and not payload["avoiding"]:
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_oracle(args) -> int:
    cfg = _settings(args)
    G = read_graph(args.graph)
    res = r_oracle(G, args.t, max_edges=cfg["max_edges"], budget=cfg["budget"])
    _emit(args, res.as_dict(), f"r(G,{args.t}) = {res.value}  [{res.kind}]")
    return EXIT_OK


def cmd_stats(args) -> int:
    G = read_graph(args.graph)
    P = VertexPartition.parse(args.partition, G.n)
    if G.is_colored and G.m:
        st = partition_stats(G, P)
        payload = vars(st).copy()
    else:
        from .graph import classify_edges

        crossing, noncrossing = classify_edges(G, P)
        payload = {"noncrossing_edges": len(noncrossing), "crossing_edges": len(crossing)}
    payload["blocks"] = P.blocks()
    _emit(args, payload, "  ".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _settings(args)
    only = tuple(args.only) if args.only else SUITES
    vc = VerifyConfig(max_n=args.max_n, max_t=args.max_t, seed=args.seed,
                      random_colorings=args.random_colorings, concavity_n=args.concavity_n,
                      max_edges=cfg["max_edges"], budget=cfg["budget"], only=only)
    if vc.max_n > cfg["max_n_exhaustive"]:
        raise UsageError(f"--max-n {vc.max_n} exceeds the exhaustive cap {cfg['max_n_exhaustive']}")
    report = run_verify(vc)
    _emit(args, report.as_dict(), report.table())
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "csv"], default="json")
    common.add_argument("--config", help="key = value settings file")
    common.add_argument("--max-n-exhaustive", dest="max_n_exhaustive", type=int,
                        help=f"vertex cap for partition scans (default {DEFAULT_MAX_N})")
    common.add_argument("--budget", type=int, help=f"search node limit (default {DEFAULT_BUDGET:g})")
    common.add_argument("--jobs", type=int, help="worker processes for partition scans")

    parser = argparse.ArgumentParser(prog="rt", description="Anti-Ramsey numbers for edge-disjoint rainbow spanning trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", parents=[common], help="closed forms for complete (multipartite) hosts")
    p.add_argument("kind", choices=["complete", "multipartite", "bipartite", "sweep"])
    p.add_argument("-n", type=int)
    p.add_argument("-p", type=int)
    p.add_argument("-q", type=int)
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--parts")
    p.add_argument("--t-range", default="1..5")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("r-general", parents=[common], help="r(G,t) by partition scan")
    p.add_argument("graph")
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_r_general)

    p = sub.add_parser("check", parents=[common], help="rainbow spanning tree existence")
    p.add_argument("graph")
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--mode", choices=["edge-disjoint", "color-disjoint", "extension"], default="edge-disjoint")
    p.add_argument("--forests", help="forest file for --mode extension")
    p.add_argument("--search", action="store_true", help="also run the backtracking search (color-disjoint)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extremal", parents=[common], help="avoiding coloring with r(G,t) colors")
    p.add_argument("graph")
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--partition", help='e.g. "0,1|2|3"; default is the r-general witness')
    p.add_argument("-o", "--output")
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("oracle", parents=[common], help="r(G,t) by enumerating colorings")
    p.add_argument("graph")
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--max-edges", dest="max_edges", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("stats", parents=[common], help="crossing statistics for one partition")
    p.add_argument("graph")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", parents=[common], help="run the cross-check suites")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-t", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-colorings", type=int, default=100)
    p.add_argument("--concavity-n", type=int, default=20)
    p.add_argument("--only", nargs="+", choices=SUITES)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (PartitionCapExceeded, OracleCapExceeded, SearchBudgetExceeded) as exc:
        print(f"rt: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"rt: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
