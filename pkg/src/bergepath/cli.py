"""Command-line entry point: ``bergepath <subcommand> ...``.

Every output starts with the tool version, the resolved configuration and
the seed (``#`` comment lines for CSV and text, a ``meta`` object for JSON),
so two runs with the same arguments produce identical bytes. Exit status is
0 on success, 1 when a verification finds a counterexample, 2 on usage
errors.

Budget environment overrides: ``BERGEPATH_NODE_LIMIT``, ``BERGEPATH_TIME_LIMIT``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .berge import SearchBudget, longest_berge_path
from .bounds import EVALUATORS, asymptotic_ratio, bound_main, main_construction_size
from .claims import CLAIMS, SuiteConfig, verify_claims
from .cliques import count_cliques
from .constructions import ConstructionSpec
from .fat import decomposition_report
from .hypergraph import (
    ParseError,
    format_hypergraph,
    hypergraph_to_json,
    read_hypergraph,
    shadow_graph,
    Graph,
)
from .search import CapExceeded, extremal_number, write_jsonl


class UsageError(Exception):
    pass


def parse_grid(text: str) -> tuple[int, ...]:
    """``"4..8"``, ``"3,5,7"`` or a mix like ``"2..4,10"`` -> sorted unique ints."""
    values: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = (int(x) for x in part.split(".."))
                if hi < lo:
                    raise UsageError(f"empty range {part!r}")
                values.update(range(lo, hi + 1))
            elif part:
                values.add(int(part))
    except ValueError:
        raise UsageError(f"malformed grid {text!r}") from None
    if not values:
        raise UsageError(f"empty grid {text!r}")
    return tuple(sorted(values))


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return "" if x is None else str(x)


class Output:
    """Collects rows and renders them with the provenance header."""

    def __init__(self, args: argparse.Namespace, config: dict):
        self.fmt = getattr(args, "format", "csv")
        self.meta = {"tool": f"bergepath {__version__}", "config": config, "seed": getattr(args, "seed", None)}
        self.rows: list[dict] = []
        self.columns: list[str] = []

    def add(self, row: dict) -> None:
        for key in row:
            if key not in self.columns:
                self.columns.append(key)
        self.rows.append(row)

    def render(self) -> str:
        if self.fmt == "json":
            rows = [{k: (_fmt(v) if isinstance(v, Fraction) else v) for k, v in r.items()} for r in self.rows]
            return json.dumps({"meta": self.meta, "rows": rows}, indent=2, sort_keys=True) + "\n"
        buf = io.StringIO()
        buf.write(f"# {self.meta['tool']}\n")
        buf.write(f"# config: {json.dumps(self.meta['config'], sort_keys=True)}\n")
        buf.write(f"# seed: {self.meta['seed']}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for r in self.rows:
            writer.writerow([_fmt(r.get(c)) for c in self.columns])
        return buf.getvalue()


def _budget(args) -> SearchBudget:
    base = SearchBudget.from_env()
    if getattr(args, "node_limit", None):
        base.node_limit = args.node_limit
    return base


def _config(args, skip=("func",)) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_path(args) -> int:
    h = read_hypergraph(args.file)
    res = longest_berge_path(h, _budget(args), jobs=args.jobs)
    payload = {**res.witness.to_json(h), "exact": res.exact, "nodes": res.nodes}
    meta = {"tool": f"bergepath {__version__}", "config": _config(args), "seed": None}
    if args.format == "json":
        _emit(args, json.dumps({"meta": meta, **payload}, indent=2, sort_keys=True) + "\n")
    else:
        lines = [
            f"# {meta['tool']}",
            f"# config: {json.dumps(meta['config'], sort_keys=True)}",
            f"length {res.length}" + ("" if res.exact else " (lower bound: budget exhausted)"),
            "vertices " + " ".join(map(str, res.witness.vertices)),
        ]
        lines += ["hyperedge " + " ".join(map(str, e)) for e in payload["hyperedges"]]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_decompose(args) -> int:
    h = read_hypergraph(args.file)
    if h.r < 3:
        raise UsageError("decompose needs r >= 3")
    report = decomposition_report(h, args.k, _budget(args))
    out = Output(args, _config(args))
    out.add(report.to_json() | {"component_clique_counts": " ".join(map(str, report.component_clique_counts))})
    if args.format == "json":
        out.rows = [report.to_json()]
    _emit(args, out.render())
    return 1 if report.violations else 0


def cmd_cliques(args) -> int:
    h = read_hypergraph(args.file)
    g = Graph.from_edges(h.n, h.edges) if h.r == 2 else shadow_graph(h)
    out = Output(args, _config(args))
    for s in args.s:
        out.add({"s": s, "count": count_cliques(g, s)})
    _emit(args, out.render())
    return 0


def cmd_construct(args) -> int:
    family = "main_AB" if args.family == "main" else args.family
    spec = ConstructionSpec(family, args.n, args.k, args.r, args.a)
    h = spec.build()
    if args.format == "json":
        meta = {"tool": f"bergepath {__version__}", "config": _config(args), "seed": None}
        _emit(args, json.dumps({"meta": meta, **hypergraph_to_json(h)}, sort_keys=True) + "\n")
    else:
        comments = [f"bergepath {__version__}", f"config: {json.dumps(_config(args), sort_keys=True)}"]
        _emit(args, format_hypergraph(h, comments))
    return 0


def cmd_bounds(args) -> int:
    out = Output(args, _config(args))
    names = args.formula or list(EVALUATORS)
    grids = {"n": args.n, "k": args.k, "r": args.r, "s": args.s}
    for name in names:
        fn, params = EVALUATORS[name]
        points = [{}]
        for p in params:
            points = [{**pt, p: v} for pt in points for v in grids[p]]
        for pt in points:
            try:
                value = fn(**pt)
            except ValueError:
                continue  # outside the formula's domain
            pieces = value if isinstance(value, tuple) else (value,)
            for bv in pieces:
                out.add({
                    "formula": bv.tag, "n": pt.get("n"), "k": pt.get("k"), "r": pt.get("r"),
                    "s": pt.get("s"), "value": bv.value, "floor": bv.integer_cap,
                })
    _emit(args, out.render())
    return 0


def cmd_search(args) -> int:
    out = Output(args, _config(args))
    records = []
    budget = _budget(args)
    for n in args.n:
        for k in args.k:
            try:
                rec = extremal_number(n, k, args.r, args.connected, args.mode, budget)
            except CapExceeded as exc:
                raise UsageError(str(exc)) from None
            records.append(rec.to_json())
            out.add({
                "n": n, "k": k, "r": args.r, "connected": args.connected,
                "max_edges": rec.max_edges, "instances_examined": rec.instances_examined,
                "exhaustive": rec.exhaustive, "mode": rec.mode,
                "witness": json.dumps(rec.to_json()["witness"]["edges"]) if rec.witness else "",
            })
    if args.jsonl:
        write_jsonl(args.jsonl, records, out.meta)
    _emit(args, out.render())
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        claims=tuple(args.claim or CLAIMS),
        n_values=args.n,
        k_values=args.k,
        r_values=args.r,
        s_values=args.s,
        instances=args.instances,
        seed=args.seed,
        node_limit=_budget(args).node_limit,
    )
    results = verify_claims(cfg)
    out = Output(args, cfg.to_json())
    failed = False
    for res in results:
        failed |= res.verdict == "fail"
        if res.details:
            for row in res.details:
                out.add({"claim": res.claim, **row})
        out.add({"claim": res.claim, "summary": res.verdict, "instances": res.instances})
    if args.jsonl:
        write_jsonl(args.jsonl, [r.to_json() for r in results], out.meta)
    _emit(args, out.render())
    return 1 if failed else 0


def cmd_ratio(args) -> int:
    out = Output(args, _config(args))
    for r in args.r:
        for k in args.k:
            for n in args.n:
                try:
                    ratio = asymptotic_ratio(n, k, r)
                except ValueError:
                    continue
                out.add({
                    "n": n, "k": k, "r": r,
                    "construction_edges": main_construction_size(n, k, r),
                    "benchmark": bound_main(n, k, r).value,
                    "ratio": f"{float(ratio):.10f}",
                })
    _emit(args, out.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bergepath",
        description="Berge-path extremal toolkit. Hypergraph files (.hg): first line 'r n m', "
        "then m lines of r vertex ids; '#' lines are comments. JSON: {\"r\":, \"n\":, \"edges\": [...]}. "
        "Grids accept '4..8', '3,5' or mixes.",
    )
    p.add_argument("--version", action="version", version=f"bergepath {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("csv", "json")):
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--out", "-o", help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--node-limit", type=int, help="search-node cap (default 1e8)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    sp = sub.add_parser("path", help="longest Berge path of a hypergraph file")
    sp.add_argument("file")
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("decompose", help="fat/thin decomposition report")
    sp.add_argument("file")
    sp.add_argument("-k", type=int, required=True)
    common(sp, ("json", "csv"))
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("cliques", help="s-clique counts of a graph (or hypergraph shadow)")
    sp.add_argument("file")
    sp.add_argument("-s", type=parse_grid, default=(2, 3))
    common(sp)
    sp.set_defaults(func=cmd_cliques)

    sp = sub.add_parser("construct", help="emit an extremal construction")
    sp.add_argument("--family", choices=("main", "main_AB", "H_nka", "disjoint_blocks"), required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-r", type=int, default=2)
    sp.add_argument("-a", type=int)
    common(sp, ("hg", "json"))
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bounds", help="CSV sweep of bound evaluators")
    sp.add_argument("--formula", action="append", choices=sorted(EVALUATORS))
    sp.add_argument("--n", "-n", type=parse_grid, default=(10,))
    sp.add_argument("--k", "-k", type=parse_grid, default=(5,))
    sp.add_argument("--r", "-r", type=parse_grid, default=(3,))
    sp.add_argument("--s", "-s", type=parse_grid, default=(2,))
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("search", help="exact extremal numbers on a grid")
    sp.add_argument("--n", "-n", type=parse_grid, required=True)
    sp.add_argument("--k", "-k", type=parse_grid, required=True)
    sp.add_argument("--r", "-r", type=int, default=2)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--mode", choices=("auto", "enumerate", "branch"), default="auto")
    sp.add_argument("--jsonl", help="also write JSON-lines records here")
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="verification suite; exit 1 on any counterexample")
    sp.add_argument("--claim", action="append", choices=CLAIMS)
    sp.add_argument("--n", "-n", type=parse_grid, default=(4, 5, 6))
    sp.add_argument("--k", "-k", type=parse_grid, default=None)
    sp.add_argument("--r", "-r", type=parse_grid, default=(3,))
    sp.add_argument("--s", "-s", type=parse_grid, default=(2, 3))
    sp.add_argument("--instances", type=int, default=1000)
    sp.add_argument("--jsonl", help="also write JSON-lines records here")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("ratio", help="construction size over the connected benchmark")
    sp.add_argument("--n", "-n", type=parse_grid, default=(10**6,))
    sp.add_argument("--k", "-k", type=parse_grid, default=(11, 101, 1001))
    sp.add_argument("--r", "-r", type=parse_grid, default=(3,))
    common(sp)
    sp.set_defaults(func=cmd_ratio)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"bergepath: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"bergepath: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"bergepath: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
