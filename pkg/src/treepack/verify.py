"""Verification records for the tree-packing statements and sweeps over them.

The module also hosts the hunt for minimal k-tree graphs of large spectral radius.

Every spectral comparison goes through :func:`treepack.spectral.compare`;
anything inside the 1e-8 band is INDETERMINATE unless an isomorphism test
settles it.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .extremal import book_graph, enumerate_family, join_candidate
from .graph import (Edge, Graph, build_graph, edge_connectivity, is_connected,
                    min_degree, write_graph6)
from .iso import are_isomorphic
from .packing import arboricity, has_k_trees
from .spectral import COMPARE_MARGIN, Comparison, compare, spectral_radius

log = logging.getLogger(__name__)

STATEMENTS = ("T1.1", "T1.2", "T1.3", "L2.3", "L2.5", "L2.6", "L3.2", "L3.3", "P5.2", "P5.3")
CSV_COLUMNS = ("statement_id", "n", "delta", "k_or_kappa", "graph6", "premise",
               "conclusion", "margin", "verdict", "witness_path")


class InapplicableError(ValueError):
    """Parameters fall outside the hypotheses of the requested statement."""


class Verdict(enum.Enum):
    CONSISTENT = "CONSISTENT"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    INDETERMINATE = "INDETERMINATE"


class Mode(enum.Enum):
    FAMILY_EXHAUSTIVE = "family"
    RANDOM_SAMPLE = "random"
    GRAPH6_STREAM = "graph6"


@dataclass(frozen=True)
class VerificationRecord:
    statement_id: str
    n: int
    delta: int
    k_or_kappa: int
    graph6: str
    premise: bool
    conclusion: bool
    margin: float | int
    verdict: Verdict
    witness: str = ""

    def row(self, witness_path: str = "") -> list[str]:
        return [self.statement_id, str(self.n), str(self.delta), str(self.k_or_kappa), self.graph6,
                str(self.premise).lower(), str(self.conclusion).lower(), format_margin(self.margin),
                self.verdict.value, witness_path]


def format_margin(margin: float | int) -> str:
    if isinstance(margin, int):
        return str(margin)
    if math.isinf(margin):
        return "inf" if margin > 0 else "-inf"
    return format(margin, ".12g")


def _implication(premise: bool, conclusion: bool) -> Verdict:
    return Verdict.COUNTEREXAMPLE if premise and not conclusion else Verdict.CONSISTENT


def _gap_verdict(premise: bool, margin: float) -> Verdict:
    """Verdict for statements whose conclusion is 'margin > 0' on a spectral quantity."""
    if abs(margin) <= COMPARE_MARGIN:
        return Verdict.INDETERMINATE
    return _implication(premise, margin > 0)


# --- single-instance checks --------------------------------------------------------

def edge_threshold(n: int, delta: int, k: int) -> int:
    return comb(delta + 1, 2) + comb(n - delta - 1, 2) + k


def check_edge_theorem(g: Graph, k: int) -> VerificationRecord:
    """Edge-count condition: delta >= 2k, n >= 2delta+2 and enough edges force tau >= k."""
    delta = min_degree(g)
    thr = edge_threshold(g.n, delta, k)
    premise = is_connected(g) and delta >= 2 * k and g.n >= 2 * delta + 2 and g.m >= thr
    res = has_k_trees(g, k)
    witness = "" if res.holds else f"partition {res.partition} cross={res.cross_edges}"
    return VerificationRecord("T1.1", g.n, delta, k, write_graph6(g), premise, res.holds,
                              g.m - thr, _implication(premise, res.holds), witness)


def _spectral_gate(n: int, delta: int, k: int) -> bool:
    return k >= 2 and delta >= 2 * k and n >= 2 * delta + 3


def spectral_threshold(n: int, delta: int, k: int) -> float:
    """Spectral radius of the book graph with k-1 cross edges, the threshold of the spectral condition."""
    if not _spectral_gate(n, delta, k):
        raise InapplicableError(f"need k >= 2, delta >= 2k, n >= 2delta+3 (n={n}, delta={delta}, k={k})")
    return spectral_radius(book_graph(n, delta, k - 1))


def check_spectral_theorem(g: Graph, k: int) -> VerificationRecord:
    """rho(G) >= rho(B) forces tau >= k unless G is B itself."""
    delta = min_degree(g)
    g6 = write_graph6(g)
    res = has_k_trees(g, k)
    if not (is_connected(g) and _spectral_gate(g.n, delta, k)):
        return VerificationRecord("T1.2", g.n, delta, k, g6, False, res.holds, 0.0, Verdict.CONSISTENT)
    thr = spectral_threshold(g.n, delta, k)
    rho = spectral_radius(g)
    margin = rho - thr
    cmp = compare(rho, thr)
    if cmp is not Comparison.LESS and are_isomorphic(g, book_graph(g.n, delta, k - 1)):
        return VerificationRecord("T1.2", g.n, delta, k, g6, True, True, margin,
                                  Verdict.CONSISTENT, "isomorphic to the book graph")
    premise = cmp is not Comparison.LESS
    conclusion = res.holds
    witness = "" if res.holds else f"partition {res.partition} cross={res.cross_edges}"
    if cmp is Comparison.INDETERMINATE:
        verdict = Verdict.INDETERMINATE
    else:
        verdict = _implication(premise, conclusion)
    return VerificationRecord("T1.2", g.n, delta, k, g6, premise, conclusion, margin, verdict, witness)


def _connectivity_gate(n: int, delta: int, kappa: int) -> bool:
    return 4 <= kappa < delta and n >= 2 * delta + 4


def check_connectivity_instance(g: Graph) -> VerificationRecord:
    """Within its connectivity class the book graph should maximise rho."""
    delta = min_degree(g)
    kappa, _ = edge_connectivity(g)
    g6 = write_graph6(g)
    if not _connectivity_gate(g.n, delta, kappa):
        return VerificationRecord("T1.3", g.n, delta, kappa, g6, False, True, 0.0, Verdict.CONSISTENT)
    book = book_graph(g.n, delta, kappa)
    margin = spectral_radius(book) - spectral_radius(g)
    if compare(margin, 0.0) is not Comparison.GREATER and are_isomorphic(g, book):
        return VerificationRecord("T1.3", g.n, delta, kappa, g6, True, True, margin,
                                  Verdict.CONSISTENT, "equality: isomorphic to the book graph")
    return VerificationRecord("T1.3", g.n, delta, kappa, g6, True, margin > 0, margin,
                              _gap_verdict(True, margin))


# --- family-level checks ------------------------------------------------------------

def _bracket_bounds(n: int, delta: int, i: int, variant: str) -> tuple[float, float]:
    if variant == "L2.3":
        k = i + 1
        if not (k >= 2 and delta >= 2 * k and n >= 2 * delta + 3):
            raise InapplicableError(f"L2.3 needs i+1 >= 2, delta >= 2(i+1), n >= 2delta+3 "
                                    f"(n={n}, delta={delta}, i={i})")
        return n - delta - 2, n - delta - 1
    if variant == "L3.2":
        if not _connectivity_gate(n, delta, i):
            raise InapplicableError(f"L3.2 needs 4 <= i < delta and n >= 2delta+4 (n={n}, delta={delta}, i={i})")
        return n - delta - 2, n - delta
    raise ValueError(f"unknown bracket variant {variant!r}")


def check_bracket_lemmas(n: int, delta: int, i: int, variant: str) -> VerificationRecord:
    """Every member of the (delta+1)-split family with i cross edges has rho strictly inside the bracket."""
    lo, hi = _bracket_bounds(n, delta, i, variant)
    worst, worst_g = math.inf, None
    for fg in enumerate_family(n, delta + 1, i):
        rho = spectral_radius(fg.graph)
        slack = min(rho - lo, hi - rho)
        if slack < worst:
            worst, worst_g = slack, fg.graph
    return VerificationRecord(variant, n, delta, i, write_graph6(worst_g), True, worst > 0, worst,
                              _gap_verdict(True, worst), f"bracket ({lo}, {hi})")


def _extremality_gate(n: int, delta: int, i: int, statement: str) -> bool:
    if statement in ("L2.5", "L2.6"):
        k = i + 1
        return k >= 2 and delta >= 2 * k and n >= 2 * delta + 3
    if statement == "L3.3":
        return _connectivity_gate(n, delta, i)
    raise ValueError(f"unknown extremality statement {statement!r}")


def check_family_extremality(n: int, delta: int, i: int, statement: str = "L2.5") -> VerificationRecord:
    """The book graph is the unique rho-maximiser among the two-clique families.

    L2.5 / L3.3 compare against every split from delta+1 to n//2; L2.6 only
    against splits a >= delta+2. Uniqueness is decided by isomorphism, the
    margin is rho(B) minus the runner-up.
    """
    book = book_graph(n, delta, i)
    rho_book = spectral_radius(book)
    first = delta + 2 if statement == "L2.6" else delta + 1
    found_book = statement == "L2.6"
    best, best_g = -math.inf, None
    for a in range(first, n // 2 + 1):
        for fg in enumerate_family(n, a, i):
            rho = spectral_radius(fg.graph)
            if compare(rho, rho_book) is not Comparison.LESS and are_isomorphic(fg.graph, book):
                found_book = True
                continue
            if rho > best:
                best, best_g = rho, fg.graph
    if not found_book:
        raise RuntimeError(f"book graph missing from the enumerated family ({n}, {delta + 1}, {i})")
    premise = _extremality_gate(n, delta, i, statement)
    margin = rho_book - best
    g6 = write_graph6(best_g) if best_g is not None else write_graph6(book)
    return VerificationRecord(statement, n, delta, i, g6, premise, margin > 0, margin,
                              _gap_verdict(premise, margin), "runner-up" if best_g is not None else "no rival")


# --- random models ------------------------------------------------------------------

def _random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, tuple(e for e, k in zip(pairs, keep) if k))


def _planted_graph(n: int, a: int, p_left: float, p_right: float, cross: int,
                   rng: np.random.Generator) -> Graph:
    left = list(itertools.combinations(range(a), 2))
    right = list(itertools.combinations(range(a, n), 2))
    edges = [e for e, k in zip(left, rng.random(len(left)) < p_left) if k]
    edges += [e for e, k in zip(right, rng.random(len(right)) < p_right) if k]
    links = [(u, v) for u in range(a) for v in range(a, n)]
    if cross:
        picks = rng.choice(len(links), size=min(cross, len(links)), replace=False)
        edges += [links[j] for j in sorted(picks)]
    return build_graph(n, edges)


def random_min_degree_graph(n: int, delta: int, rng: np.random.Generator,
                            max_cross: int = 4, max_tries: int = 100_000) -> Graph:
    """Connected graph with minimum degree >= delta.

    Half the draws are G(n, p) with p between (delta+1)/(n-1) and 1; the
    other half plant two dense sides joined by a few cross edges, which is
    where graphs near the two-clique families live.
    """
    if n < delta + 1:
        raise InapplicableError(f"no graph on {n} vertices has minimum degree {delta}")
    for _ in range(max_tries):
        if rng.random() < 0.5 or n < 2 * delta + 2:
            p = rng.uniform(min(1.0, (delta + 1) / (n - 1)), 1.0)
            g = _random_graph(n, p, rng)
        else:
            a = int(rng.integers(delta + 1, n - delta))
            g = _planted_graph(n, a, rng.uniform(0.6, 1.0), rng.uniform(0.6, 1.0),
                               int(rng.integers(1, max_cross + 1)), rng)
        if min_degree(g) >= delta and is_connected(g):
            return g
    raise RuntimeError(f"could not draw a graph with n={n}, delta>={delta}")


def sample_connectivity_class(n: int, delta: int, kappa: int, count: int, seed: int,
                              budget: int | None = None) -> Iterator[VerificationRecord]:
    """Random members of the class (n, minimum degree delta, edge connectivity kappa).

    Draws mix uniform G(n, p) at mean degree delta+1 with a planted model
    (two random dense sides, kappa random cross edges); every draw is kept
    only if delta and kappa match exactly. Stops early, with a warning, once
    ``budget`` draws are spent.
    """
    if not _connectivity_gate(n, delta, kappa):
        raise InapplicableError(f"need 4 <= kappa < delta and n >= 2delta+4 (n={n}, delta={delta}, kappa={kappa})")
    rng = np.random.default_rng([seed, n, delta, kappa])
    budget = budget if budget is not None else 500 * max(count, 1)
    produced = draws = 0
    while produced < count:
        if draws >= budget:
            log.warning("sampler budget of %d draws spent after %d/%d members", budget, produced, count)
            return
        draws += 1
        if rng.random() < 0.25:
            g = _random_graph(n, (delta + 1) / (n - 1), rng)
        else:
            a = int(rng.integers(delta + 1, n - delta))
            g = _planted_graph(n, a, rng.uniform(0.5, 1.0), rng.uniform(0.5, 1.0), kappa, rng)
        if min_degree(g) != delta or not is_connected(g):
            continue
        if edge_connectivity(g)[0] != kappa:
            continue
        produced += 1
        yield check_connectivity_instance(g)


# --- minimal k-tree hunt ------------------------------------------------------------

@dataclass(frozen=True)
class HuntReport:
    n: int
    k: int
    status: str  # EXHAUSTIVE or PARTIAL
    evaluated: int
    best_rho: float
    best_graph6: str
    best_arboricity: int
    candidate_rho: float
    candidate_graph6: str
    candidate_isomorphic: bool

    @property
    def margin(self) -> float:
        return self.candidate_rho - self.best_rho

    @property
    def candidate_unbeaten(self) -> bool:
        return self.candidate_isomorphic or self.margin > -COMPARE_MARGIN

    def records(self) -> list[VerificationRecord]:
        if self.candidate_isomorphic or self.margin > COMPARE_MARGIN:
            verdict = Verdict.CONSISTENT
        elif self.margin < -COMPARE_MARGIN:
            verdict = Verdict.COUNTEREXAMPLE
        else:
            verdict = Verdict.INDETERMINATE
        tag = f"{self.status} evaluated={self.evaluated} candidate={self.candidate_graph6}"
        return [
            VerificationRecord("P5.2", self.n, self.k, self.k, self.best_graph6, True,
                               self.candidate_unbeaten, self.margin, verdict, tag),
            VerificationRecord("P5.3", self.n, self.k, self.best_arboricity, self.best_graph6, False,
                               True, self.best_rho, Verdict.CONSISTENT, "recorded pair (a, rho)"),
        ]


def _random_k_trees(n: int, k: int, rng: np.random.Generator) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        free = set(pairs)
        chosen: list[tuple[int, int]] = []
        ok = True
        for _ in range(k):
            weights = rng.random(len(pairs))
            order = [pairs[j] for j in np.argsort(weights, kind="stable") if pairs[j] in free]
            parent = list(range(n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            tree = []
            for u, v in order:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    tree.append((u, v))
            if len(tree) != n - 1:
                ok = False
                break
            chosen += tree
            free -= set(tree)
        if ok:
            return build_graph(n, chosen)


HUNT_SEGMENTS = 10


def _climb(task: tuple[int, int, int, int, int]) -> tuple[float, tuple[Edge, ...], int]:
    """One restart of the hill climb: a random k-tree graph improved by single edge swaps."""
    n, k, steps, seed, segment = task
    rng = np.random.default_rng([seed, n, k, segment])
    pairs = list(itertools.combinations(range(n), 2))
    cur = _random_k_trees(n, k, rng)
    cur_rho = spectral_radius(cur)
    best_rho, best = cur_rho, cur
    for _ in range(steps - 1):
        absent = [e for e in pairs if e not in cur.edge_set]
        out = cur.edges[int(rng.integers(len(cur.edges)))]
        into = absent[int(rng.integers(len(absent)))]
        nxt = cur.remove_edges([out]).add_edges([into])
        if not has_k_trees(nxt, k).holds:
            continue
        rho = spectral_radius(nxt)
        if rho >= cur_rho or rng.random() < 0.05:
            cur, cur_rho = nxt, rho
        if rho > best_rho:
            best_rho, best = rho, nxt
    return best_rho, best.edges, steps


def search_minimal_packing(n: int, k: int, budget: int, seed: int, jobs: int = 1) -> HuntReport:
    """Largest spectral radius among graphs made of exactly k edge-disjoint spanning trees.

    When the number of k(n-1)-edge graphs fits in ``budget`` they are all
    scanned (EXHAUSTIVE). Otherwise the budget is split over ten seeded
    restarts of a hill climb with single edge swaps (PARTIAL); restarts are
    independent, so ``jobs`` only changes the wall time, never the result.
    """
    if k < 1 or n < 2 * k + 1:
        raise InapplicableError(f"need n >= 2k+1 (n={n}, k={k})")
    size = k * (n - 1)
    pairs = list(itertools.combinations(range(n), 2))
    cand = join_candidate(n, k)
    cand_rho = spectral_radius(cand)
    best_rho, best_g, evaluated = -math.inf, None, 0
    if comb(len(pairs), size) <= budget:
        status = "EXHAUSTIVE"
        for subset in itertools.combinations(pairs, size):
            g = Graph(n, subset)
            evaluated += 1
            if not is_connected(g) or not has_k_trees(g, k).holds:
                continue
            rho = spectral_radius(g)
            if rho > best_rho:
                best_rho, best_g = rho, g
    else:
        status = "PARTIAL"
        segments = max(1, min(HUNT_SEGMENTS, budget))
        tasks = [(n, k, budget // segments + (s < budget % segments), seed, s) for s in range(segments)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_climb, tasks))
        else:
            results = [_climb(t) for t in tasks]
        for rho, edges, steps in results:
            evaluated += steps
            if rho > best_rho:
                best_rho, best_g = rho, Graph(n, edges)
    iso = are_isomorphic(best_g, cand) if compare(best_rho, cand_rho) is Comparison.INDETERMINATE else False
    return HuntReport(n, k, status, evaluated, best_rho, write_graph6(best_g), arboricity(best_g).arboricity,
                      cand_rho, write_graph6(cand), iso)


# --- sweeps --------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepConfig:
    statement_id: str
    n_values: tuple[int, ...] = ()
    delta_values: tuple[int, ...] = ()
    k_values: tuple[int, ...] = ()
    mode: Mode = Mode.FAMILY_EXHAUSTIVE
    sample_count: int = 0
    seed: int = 0
    output: Path | None = None
    jobs: int = 1
    witness_dir: Path | None = None
    graph6_lines: tuple[str, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.statement_id not in STATEMENTS:
            raise ValueError(f"unknown statement {self.statement_id!r}; choose from {', '.join(STATEMENTS)}")
        object.__setattr__(self, "mode", Mode(self.mode))
        for n, d, k in self.points():
            _check_point(self.statement_id, n, d, k)

    def points(self) -> list[tuple[int, int, int]]:
        return list(itertools.product(self.n_values, self.delta_values, self.k_values))


def _check_point(sid: str, n: int, delta: int, k: int) -> None:
    ok = {
        "T1.1": delta >= 2 * k and n >= 2 * delta + 2,
        "T1.2": _spectral_gate(n, delta, k),
        "T1.3": _connectivity_gate(n, delta, k),
        "L2.3": _spectral_gate(n, delta, k),
        "L2.5": _spectral_gate(n, delta, k),
        "L2.6": _spectral_gate(n, delta, k),
        "L3.2": _connectivity_gate(n, delta, k),
        "L3.3": _connectivity_gate(n, delta, k),
        "P5.2": n >= 2 * k + 1,
        "P5.3": n >= 2 * k + 1,
    }[sid]
    if not ok:
        raise InapplicableError(f"grid point n={n}, delta={delta}, k={k} violates the hypotheses of {sid}")


def _family_members(n: int, delta: int, counts: Sequence[int]) -> Iterator[Graph]:
    for i in counts:
        for a in range(delta + 1, n // 2 + 1):
            for fg in enumerate_family(n, a, i):
                if fg.pattern.i and is_connected(fg.graph):
                    yield fg.graph


def _point_records(task: tuple[SweepConfig, int, int, int]) -> list[VerificationRecord]:
    cfg, n, delta, k = task
    sid = cfg.statement_id
    rng = np.random.default_rng([cfg.seed, n, delta, k])
    if sid in ("T1.1", "T1.2"):
        check = check_edge_theorem if sid == "T1.1" else check_spectral_theorem
        if cfg.mode is Mode.FAMILY_EXHAUSTIVE:
            return [check(g, k) for g in _family_members(n, delta, (k - 1, k))]
        return [check(random_min_degree_graph(n, delta, rng, max_cross=2 * k), k)
                for _ in range(cfg.sample_count)]
    if sid == "T1.3":
        if cfg.mode is Mode.FAMILY_EXHAUSTIVE:
            return [check_connectivity_instance(fg.graph) for fg in enumerate_family(n, delta + 1, k)]
        return list(sample_connectivity_class(n, delta, k, cfg.sample_count, cfg.seed))
    if sid == "L2.3":
        return [check_bracket_lemmas(n, delta, k - 1, "L2.3")]
    if sid == "L3.2":
        return [check_bracket_lemmas(n, delta, k, "L3.2")]
    if sid in ("L2.5", "L2.6"):
        return [check_family_extremality(n, delta, k - 1, sid)]
    if sid == "L3.3":
        return [check_family_extremality(n, delta, k, "L3.3")]
    report = search_minimal_packing(n, k, cfg.sample_count, cfg.seed)
    return [r for r in report.records() if r.statement_id == sid]


def _stream_records(cfg: SweepConfig) -> list[VerificationRecord]:
    from .graph import parse_graph6

    out = []
    for line in cfg.graph6_lines:
        if not line.strip():
            continue
        g = parse_graph6(line)
        if cfg.statement_id == "T1.3":
            out.append(check_connectivity_instance(g))
            continue
        for k in cfg.k_values:
            check = check_edge_theorem if cfg.statement_id == "T1.1" else check_spectral_theorem
            out.append(check(g, k))
    return out


def collect_records(cfg: SweepConfig) -> list[VerificationRecord]:
    if cfg.mode is Mode.GRAPH6_STREAM:
        if cfg.statement_id not in ("T1.1", "T1.2", "T1.3"):
            raise ValueError("graph6 streams apply to T1.1, T1.2 and T1.3 only")
        return _stream_records(cfg)
    tasks = [(cfg, n, d, k) for n, d, k in cfg.points()]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_point_records, tasks))
    else:
        chunks = [_point_records(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def exit_code(records: Iterable[VerificationRecord]) -> int:
    verdicts = {r.verdict for r in records}
    if Verdict.COUNTEREXAMPLE in verdicts:
        return 3
    if Verdict.INDETERMINATE in verdicts:
        return 2
    return 0


def records_to_csv(records: Sequence[VerificationRecord], witness_dir: Path | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for idx, rec in enumerate(records):
        path = ""
        if witness_dir is not None and rec.witness:
            witness_dir.mkdir(parents=True, exist_ok=True)
            target = witness_dir / f"{idx:05d}_{rec.statement_id}.txt"
            target.write_text(rec.witness + "\n")
            path = str(target)
        writer.writerow(rec.row(path))
    if records:
        counts = {v: sum(r.verdict is v for r in records) for v in Verdict}
        summary = ";".join(f"{v.value}={c}" for v, c in counts.items())
        writer.writerow(["SUMMARY", "", "", "", "", "", "", "", summary, ""])
    return buf.getvalue()


def run_sweep(config: SweepConfig) -> tuple[str, list[VerificationRecord]]:
    """Run every grid point and render the CSV report; written to ``config.output`` if set."""
    records = collect_records(config)
    text = records_to_csv(records, config.witness_dir)
    if config.output is not None:
        try:
            Path(config.output).write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write sweep report to {config.output}: {exc}") from exc
    return text, records
