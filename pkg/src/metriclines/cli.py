"""Command-line interface.

JSON goes to stdout (or ``--out``); a one-line human summary goes to stderr.
Exit status: 0 on success, 1 when a check fails or the library rejects the
input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import errors
from .betweenness import longest_geodesic, validate_axioms
from .graphs import (
    Graph,
    connected_graphs,
    gen_complete,
    gen_complete_kpartite,
    gen_cycle,
    gen_path,
    gen_subdivided_path,
    graph_metric,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .lines import all_lines, line
from .metric import MetricSpace, random_metric
from .relations import classify_pair_relation
from .verify import read_corpus, run_witnesses, scan_corpus, scaling_fit, verify_bounds, verify_conjecture
from .witnesses import (
    witness_3metric,
    witness_bounded_distances,
    witness_from_geodesic,
    witness_graph,
    witness_metric,
    witness_pseudometric,
)

INPUT_FORMATS = ("auto", "graph6", "edgelist", "matrix-json", "matrix-csv", "betweenness-json", "graph-json")
GENERATORS = {
    "kpartite": gen_complete_kpartite,
    "subdivided-path": gen_subdivided_path,
    "cycle": gen_cycle,
    "path": gen_path,
    "complete": gen_complete,
}


class UsageError(Exception):
    pass


# -- input -------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def detect_format(text: str) -> str:
    body = text.strip()
    if not body:
        raise UsageError("empty input")
    if body[0] in "{[":
        try:
            obj = json.loads(body)
        except json.JSONDecodeError:
            raise UsageError("input looks like JSON but does not parse") from None
        if isinstance(obj, dict) and "triples" in obj:
            return "betweenness-json"
        if isinstance(obj, dict) and "adjacency" in obj:
            return "graph-json"
        return "matrix-json"
    first = body.splitlines()[0]
    if "," in first:
        return "matrix-csv"
    if all(tok.lstrip("-").isdigit() for tok in first.split()) and len(first.split()) == 2:
        return "edgelist"
    return "graph6"


def load_space(text: str, fmt: str, scale: int | None = None):
    """Return ``(space, graph_or_None)``."""
    if fmt == "auto":
        fmt = detect_format(text)
    body = text.strip()
    if fmt == "graph6":
        g = parse_graph6(body.splitlines()[0])
        return graph_metric(g), g
    if fmt == "edgelist":
        g = parse_edge_list(body)
        return graph_metric(g), g
    if fmt == "graph-json":
        g = Graph.from_json(json.loads(body))
        return graph_metric(g), g
    if fmt == "matrix-json":
        obj = json.loads(body)
        if isinstance(obj, list):
            obj = {"dist": obj}
        if scale is not None:
            obj = dict(obj, scale=scale * int(obj.get("scale", 1)))
        return MetricSpace.from_json(obj), None
    if fmt == "matrix-csv":
        return MetricSpace.from_csv(body, scale or 1), None
    if fmt == "betweenness-json":
        obj = json.loads(body)
        return validate_axioms([tuple(t) for t in obj["triples"]], int(obj["n"])), None
    raise UsageError(f"unknown format {fmt!r}")


def _need_metric(space):
    if not isinstance(space, MetricSpace):
        raise UsageError("this command needs a metric space, not a betweenness relation")
    return space


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def _points(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated points, got {text!r}") from None


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> tuple[object, str, int]:
    text = _read(args.input)
    fmt = args.format
    if args.kind == "betweenness":
        if fmt not in ("auto", "betweenness-json"):
            raise UsageError("betweenness input must be betweenness-json")
        rel, _ = load_space(text, "betweenness-json")
        return {"valid": True, "n": rel.n, "triples": len(rel.triples)}, f"valid betweenness on {rel.n} points", 0
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "betweenness-json":
        raise UsageError("metric validation needs a metric or graph input")
    m, _ = load_space(text, fmt, args.scale)
    return {"valid": True, "n": m.n, "scale": m.scale}, f"valid metric on {m.n} points", 0


def cmd_lines(args):
    space, _ = load_space(_read(args.input), args.format, args.scale)
    lines = all_lines(space)
    uni = lines.universal()
    if args.action == "count":
        return lines.count, f"{lines.count} lines", 0
    if args.action == "export":
        return lines.to_json(), f"exported {lines.count} lines", 0
    return {
        "n": space.n,
        "count": lines.count,
        "universal": None if uni is None else list(uni.points),
        "lines": [list(ln.points) for ln in lines],
    }, f"{lines.count} lines, universal={'yes' if uni else 'no'}", 0


def cmd_classify(args):
    space, _ = load_space(_read(args.input), args.format, args.scale)
    if args.pairs:
        if len(args.pairs) != 2:
            raise UsageError("--pairs takes exactly two pairs")
        p, q = args.pairs
        kinds = sorted(k.value for k in classify_pair_relation(space, p, q))
        return {"pairs": [list(p), list(q)], "kinds": kinds}, f"{p} vs {q}: {kinds or 'none'}", 0
    if args.line is None:
        raise UsageError("give --line a,b or --pairs a,b x,y")
    lines = all_lines(space)
    ln = line(space, *args.line)
    gens = lines.generators(ln)
    out = []
    for i, p in enumerate(gens):
        for q in gens[i + 1:]:
            out.append({"pairs": [list(p), list(q)],
                        "kinds": sorted(k.value for k in classify_pair_relation(space, p, q))})
    return {"line": list(ln.points), "generators": [list(p) for p in gens], "relations": out}, \
        f"{len(gens)} generators, {len(out)} pair relations", 0


def cmd_witness(args):
    space, g = load_space(_read(args.input), args.format, args.scale)
    kind = args.kind
    if kind == "geodesic":
        geo = args.geodesic if args.geodesic else longest_geodesic(space)
        rep = witness_from_geodesic(space, geo, all_lines(space))
    elif kind == "pseudometric":
        rel = space
        if isinstance(space, MetricSpace):
            from .metric import induced_betweenness
            rel = induced_betweenness(space)
        rep = witness_pseudometric(rel)
    elif kind == "metric":
        rep = witness_metric(_need_metric(space), args.threshold)
    elif kind == "bounded":
        rep = witness_bounded_distances(_need_metric(space), force_construction=args.force)
    elif kind == "3metric":
        rep = witness_3metric(_need_metric(space))
    else:
        if g is None:
            raise UsageError("witness graph needs a graph input")
        rep = witness_graph(space)
    status = 0 if rep.verified_distinct else 1
    return rep.to_json(), f"{rep.construction}: {len(rep.lines)} lines, distinct={rep.verified_distinct}", status


def cmd_generate(args):
    out_fmt = args.format if args.format != "auto" else "graph6"
    if args.family == "random-metric":
        rng = random.Random(args.seed)
        m = random_metric(args.size, args.max_dist, rng)
        return m.to_json(), f"random metric on {m.n} points", 0
    if args.family == "connected":
        graphs = list(connected_graphs(args.size))
        if out_fmt != "graph6":
            raise UsageError("connected corpora are written as graph6")
        return "".join(to_graph6(h) + "\n" for h in graphs), f"{len(graphs)} connected graphs", 0
    g = GENERATORS[args.family](args.size)
    summary = f"{args.family} graph with {g.n} vertices and {g.num_edges} edges"
    if out_fmt == "graph6":
        return to_graph6(g) + "\n", summary, 0
    if out_fmt == "edgelist":
        return to_edge_list(g), summary, 0
    if out_fmt == "graph-json":
        return g.to_json(), summary, 0
    if out_fmt == "matrix-json":
        return graph_metric(g).to_json(), summary, 0
    if out_fmt == "matrix-csv":
        return graph_metric(g).to_csv(), summary, 0
    raise UsageError(f"cannot write a graph as {out_fmt}")


def cmd_verify(args):
    if args.kind == "scan":
        fmt = "graph6" if args.format == "auto" else args.format
        if fmt not in ("graph6", "edgelist", "matrix-json"):
            raise UsageError("scan formats are graph6, edgelist and matrix-json")
        checks = args.checks.split(",") if args.checks else ["conjecture", "bounds"]
        start = time.perf_counter()
        try:
            records = read_corpus(_read(args.input), fmt)
            res = scan_corpus(records, fmt, checks, args.jobs)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        agg = res.aggregate
        took = time.perf_counter() - start
        summary = (f"{agg['instances']} instances, {agg['parse_errors']} parse errors, "
                   f"{agg['conjecture_violations']} conjecture violations, "
                   f"{agg['asserted_bound_violations']} asserted-bound violations, "
                   f"{agg['witness_failures']} witness failures ({took:.2f}s, jobs={args.jobs})")
        return res.dumps(), summary, 1 if res.failed else 0
    space, g = load_space(_read(args.input), args.format, args.scale)
    if args.kind == "conjecture":
        res = verify_conjecture(space)
        return res, f"conjecture {'holds' if res['holds'] else 'FAILS'}", 0 if res["holds"] else 1
    lines = all_lines(space)
    rep = verify_bounds(space, args.input, graph=g is not None, lines=lines)
    if args.witnesses and isinstance(space, MetricSpace):
        rep.witnesses = run_witnesses(space, lines, graph=g is not None)
    bad = rep.asserted_failures
    wit_bad = [w["construction"] for w in rep.witnesses if not w["ok"]]
    status = 1 if bad or wit_bad else 0
    return rep.to_json(), f"{rep.line_count} lines; asserted failures: {bad or 'none'}", status


def cmd_fit(args):
    fit = scaling_fit(args.family, args.sizes)
    note = "" if fit.consistent else " (outside the expected window)"
    return fit.to_json(), f"{args.family}: slope {fit.slope:.3f}{note}", 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # flags accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=INPUT_FORMATS, default=argparse.SUPPRESS,
                        help="input format (output format for 'generate'); default: auto")
    common.add_argument("--scale", type=int, default=argparse.SUPPRESS,
                        help="common denominator of matrix distances")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for scans")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized commands")

    p = argparse.ArgumentParser(prog="metriclines", parents=[common],
                                description="Lines in finite metric spaces and betweennesses.")
    p.set_defaults(format="auto", scale=None, jobs=1, out=None, seed=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check metric or betweenness axioms")
    s.add_argument("kind", choices=("metric", "betweenness"))
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("lines", parents=[common], help="compute all lines")
    s.add_argument("action", choices=("compute", "count", "export"))
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_lines)

    s = sub.add_parser("classify", parents=[common], help="relations between pairs generating one line")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--line", type=_pair, help="classify all generators of line(a,b)")
    s.add_argument("--pairs", type=_pair, nargs="+", help="classify two pairs a,b x,y")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("witness", parents=[common], help="certified sets of distinct lines")
    s.add_argument("kind", choices=("geodesic", "pseudometric", "metric", "bounded", "3metric", "graph"))
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--geodesic", type=_points, help="geodesic sequence p1,p2,... (default: a longest one)")
    s.add_argument("--threshold", type=int, help="far-side threshold for 'metric' (default ceil(n^0.9))")
    s.add_argument("--force", action="store_true", help="'bounded': run the construction regardless")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("generate", parents=[common], help="write a graph from a named family")
    s.add_argument("family", choices=(*GENERATORS, "connected", "random-metric"))
    s.add_argument("size", type=int, help="vertex count (parameter s for subdivided-path)")
    s.add_argument("--max-dist", type=int, default=6, help="largest distance for random-metric")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", parents=[common], help="conjecture, bounds, or corpus scans")
    s.add_argument("kind", choices=("conjecture", "bounds", "scan"))
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--checks", help="scan checks, comma separated: conjecture,bounds,witnesses")
    s.add_argument("--witnesses", action="store_true", help="'bounds': also run the witness extractors")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fit", parents=[common], help="log-log scaling of line counts")
    s.add_argument("family", choices=("kpartite", "subdivided-path"))
    s.add_argument("sizes", type=int, nargs="+")
    s.set_defaults(func=cmd_fit)
    return p


def _emit(payload, out: str | None) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, rest = parser.parse_known_args(argv)
    # argparse fills an optional positional with its default when an option
    # precedes it ("scan --format graph6 FILE"); pick the stray file up here
    if len(rest) == 1 and not rest[0].startswith("-") and getattr(args, "input", None) == "-":
        args.input = rest[0]
    elif rest:
        parser.error(f"unrecognized arguments: {' '.join(rest)}")
    try:
        payload, summary, status = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"metriclines: error: {exc}", file=sys.stderr)
        return 2
    except errors.MetricLinesError as exc:
        name = type(exc).__name__
        _emit({"error": name, "message": str(exc)}, args.out)
        print(f"{name}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.out)
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.out)
    print(summary, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
