"""Command-line front end.

Exit codes for every command: 0 = YES / success, 1 = NO or bound violation,
2 = usage, parse or internal error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from . import edgelist
from .generator import PlantSpec, make_pumpkin, plant_noise, random_digraph
from .oracle import TooLarge, brute_force_pvds, brute_force_rpvds
from .recognizer import is_pumpkin
from .reduction import Instance
from .solver import SearchStats, SolverError, solve_pvds, solve_rpvds

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
STATS_SCHEMA = 1
BENCH_FIELDS = [
    "file", "n", "m", "k", "answer", "nodes", "leaves",
    "max_depth", "elapsed_ms", "bound_ratio",
]


class UsageError(Exception):
    pass


def _terminals(args) -> tuple[Optional[int], Optional[int]]:
    if (args.source is None) != (args.sink is None):
        raise UsageError("--source and --sink must be given together")
    if args.source is not None and args.source == args.sink:
        raise UsageError("--source and --sink must differ")
    return args.source, args.sink


def _load(path: str) -> edgelist.EdgeListFile:
    if path == "-":
        return edgelist.parse(sys.stdin.read(), "<stdin>")
    return edgelist.read(path)


def _elapsed_ms(start: float, args) -> float:
    if getattr(args, "no_timing", False):
        return 0.0
    return round((time.perf_counter() - start) * 1000.0, 3)


def _emit(args, yes: bool, cert, s, t, rooted: bool, extra: dict, stats: Optional[dict]) -> int:
    if args.json:
        doc = {"schema": STATS_SCHEMA, "answer": "YES" if yes else "NO"}
        if yes:
            doc["certificate"] = cert
            doc["source"], doc["sink"] = s, t
            doc.update(extra)
        if stats is not None:
            doc["stats"] = stats
        print(json.dumps(doc))
    else:
        if yes:
            print("YES")
            print(" ".join(map(str, cert)))
            if not rooted:
                print(f"source {s} sink {t}")
            for key, val in extra.items():
                print(f"{key} {val}")
        else:
            print("NO")
        if stats is not None:
            print(json.dumps({"schema": STATS_SCHEMA, **stats}))
    return EXIT_YES if yes else EXIT_NO


def cmd_solve(args) -> int:
    s, t = _terminals(args)
    data = _load(args.input)
    g = data.graph
    for v in (s, t):
        if v is not None and v not in g:
            raise UsageError(f"terminal {v} is not a vertex")
    start = time.perf_counter()
    stats = SearchStats()
    if s is not None:
        sol, stats = solve_rpvds(Instance(g, args.k, s, t))
        found = (s, t, sol) if sol is not None else None
    else:
        res = solve_pvds(g, args.k, jobs=args.jobs, stats=stats)
        found = (res.s, res.t, res.solution) if res is not None else None
    elapsed = _elapsed_ms(start, args)
    if found is not None and args.certify:
        fs, ft, sol = found
        ok = len(sol) <= args.k and not sol.deleted & {fs, ft}
        if not ok or not is_pumpkin(g.delete_vertices(sol.deleted), fs, ft):
            raise SolverError("certificate failed re-verification")
    stat_doc = None
    if args.stats:
        stat_doc = {**stats.as_dict(), "elapsed_ms": elapsed}
    if found is None:
        return _emit(args, False, None, None, None, s is not None, {}, stat_doc)
    fs, ft, sol = found
    return _emit(args, True, sol.sorted(), fs, ft, s is not None, {}, stat_doc)


def cmd_oracle(args) -> int:
    s, t = _terminals(args)
    data = _load(args.input)
    g = data.graph
    if s is not None:
        for v in (s, t):
            if v not in g:
                raise UsageError(f"terminal {v} is not a vertex")
        res = brute_force_rpvds(Instance(g, args.k, s, t), force=args.force)
    else:
        res = brute_force_pvds(g, args.k, force=args.force)
    if not res.yes:
        return _emit(args, False, None, None, None, s is not None, {}, None)
    return _emit(
        args, True, sorted(res.witness), res.s, res.t, s is not None,
        {"min_size": res.min_size}, None,
    )


def _parse_lengths(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --paths value {text!r}")


def cmd_gen(args) -> int:
    meta = {}
    if args.kind == "pumpkin":
        g, s, t = make_pumpkin(_parse_lengths(args.paths))
    elif args.kind == "planted":
        spec = PlantSpec(_parse_lengths(args.paths), args.noise, args.attach, args.seed)
        g, s, t = make_pumpkin(spec.path_lengths)
        inst = plant_noise(g, s, t, spec)
        g = inst.g
        meta = {"source": inst.s, "sink": inst.t, "planted_k": inst.k}
    else:
        if args.n is None:
            raise UsageError("random graphs need --n")
        g = random_digraph(args.n, args.p, args.seed)
    text = edgelist.dumps(g, meta)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_YES


def _bench_one(job) -> dict:
    name, g, k, s, t, no_timing = job
    start = time.perf_counter()
    sol, stats = solve_rpvds(Instance(g, k, s, t))
    elapsed = 0.0 if no_timing else round((time.perf_counter() - start) * 1000.0, 3)
    return {
        "file": name,
        "n": len(g),
        "m": g.edge_count(),
        "k": k,
        "answer": "YES" if sol is not None else "NO",
        "nodes": stats.nodes,
        "leaves": stats.leaves,
        "max_depth": stats.max_depth,
        "elapsed_ms": f"{elapsed:.3f}",
        "bound_ratio": f"{stats.nodes / 2 ** max(k, 0):.6f}",
    }


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise UsageError(f"{corpus} is not a directory")
    jobs = []
    for path in sorted(p for p in corpus.iterdir() if p.is_file() and not p.name.startswith(".")):
        data = edgelist.read(path)
        missing = [key for key in edgelist.META_KEYS if key not in data.meta]
        if missing:
            raise edgelist.ParseError(f"{path}: missing metadata {', '.join(missing)}")
        jobs.append((path.name, data.graph, data.planted_k, data.source, data.sink, args.no_timing))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(job) for job in jobs]

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        Path(args.out).write_text(buf.getvalue())
    worst = max((float(r["bound_ratio"]) for r in rows), default=0.0)
    print(f"instances {len(rows)} max_bound_ratio {worst:.6f}", file=sys.stderr)
    return EXIT_NO if worst > args.bound else EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvds", description="Pumpkin vertex deletion solver")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("input", help="arc-list file, or - for stdin")
        p.add_argument("--k", type=int, required=True, help="deletion budget")
        p.add_argument("--source", type=int)
        p.add_argument("--sink", type=int)
        p.add_argument("--json", action="store_true", help="print one JSON document")

    p = sub.add_parser("solve", help="run the branching algorithm")
    instance_args(p)
    p.add_argument("--stats", action="store_true", help="print search statistics as JSON")
    p.add_argument("--certify", action="store_true", help="re-check the certificate")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for terminal pairs")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force reference answer")
    instance_args(p)
    p.add_argument("--force", action="store_true", help="ignore the size limit")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("kind", choices=["pumpkin", "planted", "random"])
    p.add_argument("--paths", default="2,2", help="comma-separated path lengths")
    p.add_argument("--noise", type=int, default=0, help="planted noise vertices")
    p.add_argument("--attach", type=float, default=1.0, help="mean noise arcs per direction")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="node-count audit over a planted corpus")
    p.add_argument("corpus")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--bound", type=float, default=10.0, help="max allowed nodes / 2^k")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, edgelist.ParseError, TooLarge, ValueError, SolverError, RuntimeError) as e:
        print(f"pvds {args.command}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
