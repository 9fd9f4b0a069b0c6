"""Command-line entry point: ``treepack <verb> ...``.

Exit codes: 0 all consistent, 1 usage or input error, 2 an INDETERMINATE
record, 3 a COUNTEREXAMPLE record.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterator, Sequence

from . import apps, extremal, packing, spectral, verify
from .graph import (Graph, GraphError, degree_profile, edge_connectivity, is_connected,
                    iter_graph6, parse_edge_list, write_edge_list, write_graph6)

USAGE_ERROR = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    """Parse "4", "11-16" or "11,13,15" (ranges inclusive)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1) if not part.startswith("-") else (part, part)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return tuple(out)


# --- input ----------------------------------------------------------------------

def _read_source(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.exists():
        return path.read_text()
    # not a file: treat the argument as inline graph6
    return source + "\n"


def iter_graphs(source: str | None, fmt: str = "auto") -> Iterator[Graph]:
    """Graphs from a file, stdin or an inline graph6 string.

    Auto-detection looks at the first non-blank byte: a digit means an edge list.
    """
    if source not in (None, "-") and Path(source).exists() and fmt in ("auto", "graph6"):
        with open(source) as fh:
            first = ""
            for line in fh:
                if line.strip():
                    first = line.strip()
                    break
            if fmt == "graph6" or (first and not first[0].isdigit()):
                fh.seek(0)
                yield from iter_graph6(fh)
                return
    text = _read_source(source)
    stripped = text.lstrip()
    if fmt == "edgelist" or (fmt == "auto" and stripped[:1].isdigit()):
        yield parse_edge_list(text)
    else:
        yield from iter_graph6(text.splitlines())


def _emit_graph(g: Graph, fmt: str) -> str:
    return write_edge_list(g) if fmt == "edgelist" else write_graph6(g) + "\n"


# --- verbs ------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    rows = []
    for g in iter_graphs(args.input, args.format):
        prof = degree_profile(g)
        rep = spectral.spectral_report(g)
        row = {"graph6": write_graph6(g), "n": g.n, "m": g.m, "delta": prof.delta,
               "max_degree": prof.max_degree, "connected": is_connected(g),
               "kappa": edge_connectivity(g)[0] if g.n >= 2 else None,
               "rho": rep.rho, "lambda2": rep.lambda2, "mu1": rep.mu1, "residual": rep.residual,
               "spanning_trees": spectral.spanning_tree_count(g).count}
        rows.append(row)
        if not (args.csv or args.json):
            sys.stdout.write(" ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    _flush_rows(args, rows)
    return 0


def _flush_rows(args, rows: list[dict]) -> None:
    if args.json:
        for row in rows:
            sys.stdout.write(json.dumps(row, sort_keys=False) + "\n")
    elif args.csv and rows:
        keys = list(rows[0])
        sys.stdout.write(",".join(keys) + "\n")
        for row in rows:
            sys.stdout.write(",".join("" if row[k] is None else str(row[k]) for k in keys) + "\n")


def _parse_links(text: str) -> tuple[tuple[int, int], ...]:
    if not text:
        return ()
    pairs = []
    for item in text.split(","):
        a, b = item.split(":")
        pairs.append((int(a), int(b)))
    return tuple(pairs)


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "complete":
        graphs = [extremal.complete_graph(_need(args, "n"))]
    elif kind == "book":
        graphs = [extremal.book_graph(_need(args, "n"), _need(args, "delta"), _need(args, "i"))]
    elif kind == "join-candidate":
        graphs = [extremal.join_candidate(_need(args, "n"), _need(args, "k"))]
    else:
        n, n1 = _need(args, "n"), _need(args, "n1")
        if args.all:
            graphs = [fg.graph for fg in extremal.enumerate_family(n, n1, _need(args, "i"))]
        else:
            pattern = extremal.CrossPattern(n1, n - n1, _parse_links(args.links or ""))
            graphs = [extremal.family_graph(n, n1, pattern).graph]
    for g in graphs:
        sys.stdout.write(_emit_graph(g, args.out_format))
    return 0


def _need(args, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this command")
    return val


def cmd_pack(args) -> int:
    for g in iter_graphs(args.input, args.format):
        asked = args.k
        cert = packing.stp_number(g, witness=asked is not None)
        row: dict = {"graph6": write_graph6(g), "tau": cert.tau}
        if asked is not None:
            row["k"] = asked
            row["has_k_trees"] = cert.tau >= asked
        if args.arboricity and g.m:
            cover = packing.arboricity(g)
            row["arboricity"] = cover.arboricity
        if args.json:
            row["trees"] = [[list(e) for e in t] for t in cert.trees]
            if asked is not None and asked > cert.tau:
                row["partition"] = [sorted(b) for b in cert.violating_partition.blocks]
            sys.stdout.write(json.dumps(row) + "\n")
            continue
        out = [f"tau={cert.tau}"]
        out += ["tree " + " ".join(f"{u}-{v}" for u, v in t) for t in cert.trees]
        if asked is not None and asked > cert.tau:
            p = cert.violating_partition
            cross = sum(1 for u, v in g.edges if p.labels()[u] != p.labels()[v])
            out.append(f"partition k={asked} cross={cross} t={p.t} blocks={p}")
        if "arboricity" in row:
            out.append(f"arboricity={row['arboricity']}")
        sys.stdout.write("\n".join(out) + "\n")
    return 0


def _require_seed(args) -> None:
    if args.seed is None:
        raise UsageError("randomised runs require --seed")


def _run_config(args, cfg: verify.SweepConfig) -> int:
    text, records = verify.run_sweep(cfg)
    if cfg.output is None:
        sys.stdout.write(text)
    return verify.exit_code(records)


def cmd_verify(args) -> int:
    mode = verify.Mode(args.mode)
    if mode is verify.Mode.RANDOM_SAMPLE or args.statement == "P5.2":
        _require_seed(args)
    if mode is verify.Mode.GRAPH6_STREAM:
        lines = tuple(write_graph6(g) for g in iter_graphs(args.input, args.format))
        cfg = verify.SweepConfig(args.statement, k_values=(args.k,) if args.k else (), mode=mode,
                                 graph6_lines=lines, output=args.output)
        return _run_config(args, cfg)
    cfg = verify.SweepConfig(args.statement, (_need(args, "n"),), (_need(args, "delta"),),
                             (_need(args, "k"),), mode, args.samples, args.seed or 0, args.output)
    return _run_config(args, cfg)


def cmd_sweep(args) -> int:
    mode = verify.Mode(args.mode)
    if mode is verify.Mode.RANDOM_SAMPLE or args.statement in ("P5.2", "P5.3"):
        _require_seed(args)
    cfg = verify.SweepConfig(args.statement, _int_list(args.n), _int_list(args.delta), _int_list(args.k),
                             mode, args.samples, args.seed or 0, args.output, args.jobs,
                             args.witness_dir)
    return _run_config(args, cfg)


def cmd_hunt(args) -> int:
    _require_seed(args)
    rep = verify.search_minimal_packing(args.n, args.k, args.budget, args.seed, args.jobs)
    records = rep.records()
    if args.csv:
        sys.stdout.write(verify.records_to_csv(records))
    else:
        row = {"n": rep.n, "k": rep.k, "status": rep.status, "evaluated": rep.evaluated,
               "best_rho": rep.best_rho, "best_graph6": rep.best_graph6,
               "best_arboricity": rep.best_arboricity, "candidate_rho": rep.candidate_rho,
               "candidate_graph6": rep.candidate_graph6, "candidate_unbeaten": rep.candidate_unbeaten}
        if args.json:
            sys.stdout.write(json.dumps(row) + "\n")
        else:
            sys.stdout.write("\n".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return verify.exit_code(records[:1])


def cmd_rigidity(args) -> int:
    if args.body_bar is None and args.surface is None and not args.flow:
        raise UsageError("choose --body-bar D, --surface KIND or --flow")
    for g in iter_graphs(args.input, args.format):
        recs = []
        if args.body_bar is not None:
            recs.append(apps.body_bar_rigid(g, args.body_bar).as_record())
        if args.surface is not None:
            recs.append(apps.surface_rigid(g, args.surface).as_record())
        if args.flow:
            fr = apps.flow_implications(g)
            recs.append({"mode": "FLOW", "tau": fr.tau, "bound": fr.describe(), "basis": fr.basis})
        for rec in recs:
            rec = {"graph6": write_graph6(g), **rec}
            if args.json:
                sys.stdout.write(json.dumps(rec) + "\n")
            else:
                brief = {k: v for k, v in rec.items() if k not in ("trees", "unicyclic", "partition")}
                sys.stdout.write(" ".join(f"{k}={v}" for k, v in brief.items()) + "\n")
                for t in rec.get("trees", []):
                    sys.stdout.write("tree " + " ".join(f"{u}-{v}" for u, v in t) + "\n")
                if rec.get("unicyclic"):
                    sys.stdout.write("unicyclic " + " ".join(f"{u}-{v}" for u, v in rec["unicyclic"]) + "\n")
                if rec.get("partition"):
                    sys.stdout.write("partition " + " | ".join(" ".join(map(str, b)) for b in rec["partition"]) + "\n")
    return 0


# --- parser -------------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="file path, '-' for stdin, or an inline graph6 string")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")


def _add_output(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--csv", action="store_true")
    grp.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treepack", description="Spanning tree packing and graph spectra.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="degrees, connectivity and spectra")
    _add_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build family graphs")
    p.add_argument("kind", choices=("complete", "family", "book", "join-candidate"))
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--links", help="cross links as a:b,a:b (family)")
    p.add_argument("--all", action="store_true", help="emit every orbit representative (family)")
    p.add_argument("--format", dest="out_format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("pack", help="spanning tree packing number with certificates")
    _add_input(p)
    p.add_argument("--k", type=int, help="also decide tau >= k, with a violating partition on failure")
    p.add_argument("--arboricity", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pack)

    for name, func in (("verify", cmd_verify), ("sweep", cmd_sweep)):
        p = sub.add_parser(name, help="check statements; CSV report")
        p.add_argument("--statement", required=True, choices=verify.STATEMENTS)
        p.add_argument("--mode", choices=[m.value for m in verify.Mode], default="family")
        p.add_argument("--samples", type=int, default=0)
        p.add_argument("--seed", type=int)
        p.add_argument("--output", type=Path)
        if name == "verify":
            _add_input(p)
            p.add_argument("--n", type=int)
            p.add_argument("--delta", type=int)
            p.add_argument("--k", type=int, help="k for tree statements, kappa for connectivity ones")
        else:
            p.add_argument("--n", required=True, help="e.g. 11-16")
            p.add_argument("--delta", required=True)
            p.add_argument("--k", required=True)
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--witness-dir", type=Path)
        p.set_defaults(func=func)

    p = sub.add_parser("hunt", help="search minimal k-tree graphs for large spectral radius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("rigidity", help="body-bar and surface rigidity, flow bounds")
    _add_input(p)
    p.add_argument("--body-bar", type=int, metavar="D")
    p.add_argument("--surface", choices=[s.value for s in apps.Surface])
    p.add_argument("--flow", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rigidity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        sys.stderr.write(f"treepack {args.verb}: {exc}\n")
        return USAGE_ERROR
    except OSError as exc:
        sys.stderr.write(f"treepack {args.verb}: {exc}\n")
        return USAGE_ERROR


dispatch = main

if __name__ == "__main__":
    sys.exit(main())
