"""Checking the conjecture and the lower bounds on concrete spaces and corpora.

Everything here except :func:`scaling_fit` uses exact integer arithmetic.
Scans fan out over a process pool but always emit results in input order,
so their output does not depend on the number of workers.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from multiprocessing import Pool
from typing import Callable, Iterator, Sequence

import numpy as np

from . import bounds
from .betweenness import longest_geodesic
from .errors import (
    InternalInconsistency,
    MetricLinesError,
    TooFewPoints,
    UniversalLineInFamily,
)
from .graphs import (
    Graph,
    gen_complete_kpartite,
    gen_subdivided_path,
    graph_metric,
    parse_edge_list,
    parse_graph6,
    walk_intermediate_point,
)
from .lines import LineSet, all_lines, check_no_high_degree
from .metric import MetricSpace, diameter, distance_set, induced_betweenness, random_metric
from .relations import (
    BETA,
    GAMMA,
    _line_pairs,
    _related,
    check_center_lemma,
    gamma_clique_check,
    gamma_no_mid_check,
    inner_outer,
    is_parallelogram,
    parallelogram_metric_iff,
    structure_claims_check,
)
from .space import BetweennessSpace
from .witnesses import (
    WitnessReport,
    witness_3metric,
    witness_bounded_distances,
    witness_from_geodesic,
    witness_graph,
    witness_metric,
    witness_pseudometric,
)

FORMATS = ("graph6", "edgelist", "matrix-json")
CHECKS = ("conjecture", "bounds", "witnesses")


def _frac_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


# -- single spaces -----------------------------------------------------------

def verify_conjecture(space: BetweennessSpace, lines: LineSet | None = None) -> dict:
    """Universal line, or at least ``n`` distinct lines."""
    if space.n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(space) if lines is None else lines
    universal = lines.universal() is not None
    return {"universal": universal, "line_count": lines.count,
            "holds": universal or lines.count >= space.n}


@dataclass
class BoundEntry:
    name: str
    formula: bounds.BoundFormula
    satisfied: bool
    asserted: bool

    def margin(self, count: int) -> Fraction:
        """``count - value`` (exact for rational formulas)."""
        return Fraction(count) - self.formula.value()

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "formula_value": _frac_json(self.formula.value()),
            "formula_exact": self.formula.is_rational,
            "satisfied_with_o1_zero": self.satisfied,
            "asserted": self.asserted,
        }


@dataclass
class BoundReport:
    instance_id: str | int | None
    n: int
    diameter: int | None
    w: int | None
    line_count: int
    universal: bool
    bounds: list[BoundEntry] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def asserted_failures(self) -> list[str]:
        return [b.name for b in self.bounds if b.asserted and not b.satisfied]

    def to_json(self) -> dict:
        return {
            "id": self.instance_id,
            "n": self.n,
            "diameter": self.diameter,
            "w": self.w,
            "line_count": self.line_count,
            "universal": self.universal,
            "bounds": [b.to_json() for b in self.bounds],
            "witnesses": list(self.witnesses),
        }


def verify_bounds(space: BetweennessSpace, instance_id=None, *, graph: bool = False,
                  lines: LineSet | None = None) -> BoundReport:
    """Evaluate every applicable bound with the vanishing terms dropped.

    Only the distance-count bound ``n / (5 w)`` is marked as asserted; the
    asymptotic ones are informational.  Bounds that need the absence of a
    universal line are skipped when one exists.
    """
    n = space.n
    if n < 2:
        raise TooFewPoints("need at least two points")
    lines = all_lines(space) if lines is None else lines
    count = lines.count
    universal = lines.universal() is not None
    formulas: list[tuple[bounds.BoundFormula, bool]] = []
    diam = w = None
    if not universal:
        formulas.append((bounds.pmb_bound(n), False))
    if isinstance(space, MetricSpace):
        diam = diameter(space).value
        w = len(distance_set(space))
        if not universal:
            formulas.append((bounds.metric_bound(n), False))
        formulas.append((bounds.bounded_distances_bound(n, w), True))
        if graph:
            formulas.append((bounds.d_graph_bound(n, diam), False))
            if not universal:
                formulas.append((bounds.graphs_bound(n), False))
    rep = BoundReport(instance_id, n, diam, w, count, universal)
    for f, asserted in formulas:
        rep.bounds.append(BoundEntry(f.name, f, f.satisfied_by(count), asserted))
    return rep


def _summary(rep: WitnessReport, lines: LineSet) -> dict:
    subset = all(ln in lines for ln in rep.lines)
    return {
        "construction": rep.construction,
        "count": len(rep.lines),
        "guaranteed_count": rep.guaranteed_count,
        "verified_distinct": rep.verified_distinct,
        "subset_of_lines": subset,
        "ok": rep.verified_distinct and subset and rep.guaranteed_count <= len(rep.lines),
    }


def run_witnesses(m: MetricSpace, lines: LineSet, *, graph: bool = False) -> list[dict]:
    """Every witness extractor whose preconditions hold, summarised.

    An :class:`InternalInconsistency` becomes a summary with ``ok`` false.
    """
    universal = lines.universal() is not None
    jobs: list[tuple[str, Callable[[], WitnessReport]]] = []
    if not universal:
        jobs.append(("geodesic", lambda: witness_from_geodesic(m, longest_geodesic(m), lines)))
        jobs.append(("pseudometric", lambda: witness_pseudometric(induced_betweenness(m), lines)))
        jobs.append(("metric", lambda: witness_metric(m, lines=lines)))
    jobs.append(("bounded_distances", lambda: witness_bounded_distances(m, lines)))
    if m.n >= 2 and int(m.dist.max()) <= 3:
        jobs.append(("3metric", lambda: witness_3metric(m, lines)))
    if graph and not universal:
        jobs.append(("graph", lambda: witness_graph(m, lines)))
    out = []
    for name, job in jobs:
        try:
            out.append(_summary(job(), lines))
        except InternalInconsistency as exc:
            out.append({"construction": name, "ok": False, "error": f"InternalInconsistency: {exc}"})
    return out


# -- the lemma suite ---------------------------------------------------------

@dataclass
class LemmaTally:
    """Instances checked and counterexamples found, per statement."""

    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)

    def record(self, name: str, ok: bool, example=None) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1
        self.failures.setdefault(name, [])
        if not ok:
            self.failures[name].append(example)

    def merge(self, other: "LemmaTally") -> None:
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v
        for k, v in other.failures.items():
            self.failures.setdefault(k, []).extend(v)

    @property
    def total_failures(self) -> int:
        return sum(len(v) for v in self.failures.values())


def lemma_suite(m: MetricSpace, g: Graph | None = None, *, rng: random.Random | None = None,
                walks_per_pair: int = 2, tally: LemmaTally | None = None) -> LemmaTally:
    """Evaluate the structural statements on one space, exhaustively over
    lines, pairs and quadruples.  ``g`` enables the walk statement."""
    tally = LemmaTally() if tally is None else tally
    n = m.n
    if n < 2:
        return tally
    lines = all_lines(m)
    big = diameter(m).value
    dists = [x for x in distance_set(m) if 2 * x > big]

    for ln in lines:
        for delta in dists:
            res = check_no_high_degree(m, ln, delta, lines)
            tally.record("no_high_degree", res.ok, res.counterexample)
        lp = _line_pairs(m, ln, lines)
        for p, q in combinations(lp.pairs, 2):
            kinds = _related(m, p, q, lp.io[p], lp.io[q])
            tally.record("classification_nonempty", bool(kinds), (p, q))
            tally.record("not_beta_and_gamma", not {BETA, GAMMA} <= kinds, (p, q))
        res = gamma_clique_check(m, ln, lines)
        tally.record("gamma_clique", res.ok, res.counterexample)
        gam = res.detail
        for trio in permutations(gam, 3):
            for orient in range(8):
                pairs = [pr if not (orient >> i & 1) else pr[::-1] for i, pr in enumerate(trio)]
                (a, _), (u, _), (x, _) = pairs
                if not m.between(a, x, u):
                    continue
                r = gamma_no_mid_check(m, pairs)
                tally.record("gamma_no_mid", r.ok, r.counterexample)
        rep = structure_claims_check(m, ln, lines)
        tally.record("structure_claims", rep.ok, rep.violations[:3])

    for x in range(n):
        mid = m.middle_matrix(x)
        for a, b, c in combinations(range(n), 3):
            if x in (a, b, c):
                continue
            if mid[a, b] and mid[b, c] and mid[c, a]:
                r = check_center_lemma(m, a, b, c, x)
                tally.record("center", r.ok, r.counterexample)

    for quad in permutations(range(n), 4):
        same = parallelogram_metric_iff(m, quad) == is_parallelogram(m, quad)
        tally.record("parallelogram_iff", same, quad)

    for a, b in combinations(range(n), 2):
        io = inner_outer(m, a, b)
        ln = lines.line_of(a, b)
        ok = not (io.inner & io.outer) and ln.members == (
            (1 << a) | (1 << b) | sum(1 << x for x in io.inner | io.outer))
        tally.record("line_decomposition", ok, (a, b))

    if g is not None:
        rng = random.Random(0) if rng is None else rng
        for a, b in combinations(range(n), 2):
            if m.d(a, b) < 2:
                continue
            for _ in range(walks_per_pair):
                walk = _random_walk(g, a, b, rng, 4 * n)
                try:
                    walk_intermediate_point(g, m, walk)
                    tally.record("walk_intermediate", True)
                except InternalInconsistency:
                    tally.record("walk_intermediate", False, tuple(walk))
    return tally


def _random_walk(g: Graph, a: int, b: int, rng: random.Random, cap: int) -> list[int]:
    """Random walk from ``a`` that stops at ``b``; after ``cap`` steps it
    finishes along a shortest path."""
    walk = [a]
    while walk[-1] != b and len(walk) < cap:
        walk.append(rng.choice(sorted(g.adjacency[walk[-1]])))
    if walk[-1] != b:
        from .graphs import bfs_distances

        dist = bfs_distances(g, b)
        while walk[-1] != b:
            v = walk[-1]
            walk.append(min(u for u in g.adjacency[v] if dist[u] == dist[v] - 1))
    return walk


# -- random corpora ------------------------------------------------------------

def random_metrics(count: int, seed: int = 0, *, max_n: int = 12, max_dist: int = 6,
                   min_n: int = 2) -> Iterator[MetricSpace]:
    """Integer metrics with ``min_n..max_n`` points and distances at most
    ``max_dist`` (shortest-path repair of uniform weights)."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_metric(rng.randint(min_n, max_n), max_dist, rng)


# -- corpus scanning ---------------------------------------------------------

def read_corpus(text: str, fmt: str) -> list[str]:
    """Split a corpus into instance records (still unparsed).

    graph6: one graph per line.  edgelist: blocks separated by blank lines.
    matrix-json: a JSON array of metric objects, or one object per line.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown corpus format {fmt!r}")
    if fmt == "graph6":
        return [ln.strip() for ln in text.splitlines() if ln.strip()]
    if fmt == "edgelist":
        blocks, cur = [], []
        for ln in text.splitlines():
            if ln.strip():
                cur.append(ln)
            elif cur:
                blocks.append("\n".join(cur))
                cur = []
        if cur:
            blocks.append("\n".join(cur))
        return blocks
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            return [json.dumps(obj) for obj in json.loads(stripped)]
        except json.JSONDecodeError:
            pass
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def parse_instance(record: str, fmt: str) -> tuple[MetricSpace, Graph | None]:
    if fmt == "graph6":
        g = parse_graph6(record)
        return graph_metric(g), g
    if fmt == "edgelist":
        g = parse_edge_list(record)
        return graph_metric(g), g
    return MetricSpace.from_json(json.loads(record)), None


def check_instance(task: tuple[int, str, str, tuple[str, ...]]) -> dict:
    """Scan one record; parse and library errors end up in the result."""
    idx, record, fmt, checks = task
    out: dict = {"id": idx, "record": record}
    try:
        m, g = parse_instance(record, fmt)
    except (MetricLinesError, ValueError, KeyError, TypeError) as exc:
        out["error"] = {"kind": "parse", "type": type(exc).__name__, "message": str(exc)}
        return out
    try:
        if m.n < 2:
            out.update({"n": m.n, "skipped": "fewer than two points"})
            return out
        lines = all_lines(m)
        rep = verify_bounds(m, idx, graph=g is not None, lines=lines)
        out.update({"n": rep.n, "diameter": rep.diameter, "w": rep.w,
                    "line_count": rep.line_count, "universal": rep.universal})
        if "conjecture" in checks:
            out["conjecture_holds"] = rep.universal or rep.line_count >= rep.n
        if "bounds" in checks:
            out["bounds"] = [b.to_json() for b in rep.bounds]
        if "witnesses" in checks:
            out["witnesses"] = run_witnesses(m, lines, graph=g is not None)
    except MetricLinesError as exc:
        out["error"] = {"kind": "library", "type": type(exc).__name__, "message": str(exc)}
    return out


@dataclass
class ScanResult:
    reports: list[dict]
    aggregate: dict
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        a = self.aggregate
        return bool(a["asserted_bound_violations"] or a["conjecture_violations"] or a["witness_failures"]
                    or a["library_errors"])

    def dumps(self) -> str:
        """Deterministic serialisation (no timing information)."""
        return json.dumps({"reports": self.reports, "aggregate": self.aggregate}, sort_keys=True) + "\n"


def _aggregate(reports: Sequence[dict]) -> dict:
    agg = {
        "instances": len(reports),
        "parse_errors": 0,
        "library_errors": 0,
        "conjecture_violations": 0,
        "asserted_bound_violations": 0,
        "informational_bound_misses": {},
        "witness_failures": 0,
        "min_margin": None,
    }
    best = None
    for r in reports:
        err = r.get("error")
        if err:
            agg["parse_errors" if err["kind"] == "parse" else "library_errors"] += 1
            continue
        if r.get("conjecture_holds") is False:
            agg["conjecture_violations"] += 1
        for b in r.get("bounds", []):
            if b["satisfied_with_o1_zero"]:
                if b["asserted"]:
                    fv = b["formula_value"]
                    margin = r["line_count"] - Fraction(fv["num"], fv["den"])
                    if best is None or margin < best[0]:
                        best = (margin, r["id"], b["name"])
                continue
            if b["asserted"]:
                agg["asserted_bound_violations"] += 1
            else:
                misses = agg["informational_bound_misses"]
                misses[b["name"]] = misses.get(b["name"], 0) + 1
        agg["witness_failures"] += sum(1 for wr in r.get("witnesses", []) if not wr["ok"])
    if best is not None:
        agg["min_margin"] = {"id": best[1], "bound": best[2], "margin": _frac_json(best[0])}
    return agg


def iter_scan(records: Sequence[str], fmt: str, checks: Sequence[str] = ("conjecture", "bounds"),
              jobs: int = 1) -> Iterator[dict]:
    """Per-record results in input order."""
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise ValueError(f"unknown checks {bad}")
    tasks = [(i, rec, fmt, tuple(checks)) for i, rec in enumerate(records)]
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield check_instance(t)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(check_instance, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))


def scan_corpus(source, fmt: str = "graph6", checks: Sequence[str] = ("conjecture", "bounds"),
                jobs: int = 1, out: str | None = None) -> ScanResult:
    """Scan a corpus given as a file path or as a list of unparsed records.

    ``out`` names a file that receives the deterministic JSON document.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            records = read_corpus(fh.read(), fmt)
    else:
        records = list(source)
    start = time.perf_counter()
    reports = list(iter_scan(records, fmt, checks, jobs))
    result = ScanResult(reports, _aggregate(reports), time.perf_counter() - start)
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(result.dumps())
    return result


# -- scaling -----------------------------------------------------------------

FAMILIES: dict[str, Callable[[int], Graph]] = {
    "kpartite": gen_complete_kpartite,
    "subdivided-path": gen_subdivided_path,
}
SLOPE_WINDOW = (Fraction(11, 10), Fraction(8, 5))


@dataclass
class ScalingFit:
    family: str
    sizes: list[int]
    ns: list[int]
    counts: list[int]
    slope: float
    intercept: float
    residual: float
    consistent: bool

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "sizes": self.sizes,
            "n": self.ns,
            "counts": self.counts,
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "consistent_with_4_3": self.consistent,
        }


def scaling_fit(family: str, sizes: Sequence[int]) -> ScalingFit:
    """Exact line counts along a family, with a least-squares fit of
    ``log(count)`` against ``log(n)``.  The fit is the only floating-point
    step in the package.

    ``sizes`` are vertex counts for ``kpartite`` and the parameter ``s`` for
    ``subdivided-path``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    sizes = [int(s) for s in sizes]
    if len(sizes) < 3:
        raise ValueError("a scaling fit needs at least three sizes")
    ns, counts = [], []
    for s in sizes:
        m = graph_metric(FAMILIES[family](s))
        lines = all_lines(m)
        if lines.universal() is not None:
            raise UniversalLineInFamily(f"{family} at size {s} has a universal line")
        ns.append(m.n)
        counts.append(lines.count)
    x = np.log(np.array(ns, dtype=float))
    y = np.log(np.array(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    lo, hi = SLOPE_WINDOW
    return ScalingFit(family, sizes, ns, counts, float(slope), float(intercept), resid,
                      bool(float(lo) <= slope <= float(hi)))
