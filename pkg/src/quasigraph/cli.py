"""Command-line interface.

Subcommands:
  analyze   per-graph summary: kappa, quasi-k verdict, edge classes, atoms
  verify    run claims over a corpus, streaming JSON-lines reports
  search    hunt a corpus for graphs with no quasi 5-contractible edge
  generate  write a seeded family to graph6 files

Exit codes: 0 clean, 1 a verified campaign found a falsified claim,
2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .connectivity import is_quasi_k_connected, vertex_connectivity
from .contractibility import contraction_reports, is_contraction_critical
from .fragments import nontrivial_atom
from .generators import CorpusSpec, generate_corpus, read_corpus_file
from .harness import CLAIMS, run_campaign


def _analyze_one(graph_id: str, g, k: int) -> dict:
    quasi = is_quasi_k_connected(g, k)
    summary = {
        "graph_id": graph_id,
        "n": g.n,
        "m": g.edge_count,
        "kappa": vertex_connectivity(g),
        "quasi_k": quasi.to_json(),
        "nontrivial_atom": None,
        "E0": None,
        "quasi_contractible_edges": None,
        "kappa_dropping_edges": None,
    }
    atom = nontrivial_atom(g)
    if atom is not None:
        summary["nontrivial_atom"] = atom.to_json()
    if quasi.holds:
        reports = contraction_reports(g, k)
        summary["E0"] = [list(r.edge) for r in reports if r.in_E0]
        summary["quasi_contractible_edges"] = [
            list(r.edge) for r in reports if r.quasi_k_contractible]
        summary["kappa_dropping_edges"] = [
            list(r.edge) for r in reports if r.kappa_after < k - 1]
    return summary


def cmd_analyze(args: argparse.Namespace) -> int:
    for graph_id, g in gio.load_graphs(args.file, args.format):
        summary = _analyze_one(graph_id, g, args.k)
        print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    corpus = read_corpus_file(args.corpus)
    summary = run_campaign(corpus, args.claim, args.out, k=args.k,
                           exhaustive=args.exhaustive, timeout=args.timeout)
    print(json.dumps(summary, sort_keys=True))
    return 1 if summary["counts"]["falsified"] else 0


def cmd_search(args: argparse.Namespace) -> int:
    if args.target != "contraction-critical-quasi-5":
        raise ValueError(f"unknown search target {args.target!r}")
    hits = []
    scanned = 0
    for graph_id, g in read_corpus_file(args.corpus):
        scanned += 1
        if not is_quasi_k_connected(g, 5).holds:
            continue
        critical, _ = is_contraction_critical(g, 5, quasi=True)
        if critical:
            hit = {"graph_id": graph_id, "n": g.n, "graph6": gio.to_graph6(g)}
            hits.append(hit)
            print(json.dumps(hit, sort_keys=True))
    result = {"target": args.target, "scanned": scanned, "found": len(hits)}
    if args.out:
        Path(args.out).write_text(
            "".join(json.dumps(h, sort_keys=True) + "\n" for h in hits),
            encoding="utf-8")
    print(json.dumps(result, sort_keys=True), file=sys.stderr)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    spec = CorpusSpec.from_json({
        "family": args.family,
        "params": json.loads(args.params),
        "count": args.count,
        "seed": args.seed,
    })
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for graph_id, g in generate_corpus(spec):
        safe = graph_id.replace("/", "_").replace("(", "_").replace(")", "").replace(",", "-")
        path = out_dir / f"{safe}.g6"
        gio.write_graph6_file(path, [g])
        manifest.append({"graph_id": graph_id, "n": g.n, "m": g.edge_count,
                         "file": path.name})
    (out_dir / "manifest.json").write_text(
        json.dumps({"family": args.family, "seed": args.seed,
                    "graphs": manifest}, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    print(json.dumps({"written": len(manifest), "dir": str(out_dir)}, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasigraph",
                                     description="quasi k-connectivity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph connectivity and edge-class summary")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--format", choices=("auto", "graph6", "edgelist", "json"),
                   default="auto")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run claims over a corpus")
    p.add_argument("--claim", action="append", required=True, choices=CLAIMS)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--exhaustive", action="store_true",
                   help="evaluate expensive criticality hypotheses")
    p.add_argument("--timeout", type=float, default=None,
                   help="per graph/claim budget in seconds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="hunt for target graphs in a corpus")
    p.add_argument("--target", default="contraction-critical-quasi-5")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="write a family to graph6 files")
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="{}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
