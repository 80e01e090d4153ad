"""Batch experiments: how often do random / exhaustively enumerated graphs
that pass the clique test still get caught by the deeper obstructions?

Exhaustive mode walks every labeled graph on n vertices (edge pairs in
lexicographic order, one bit per pair); sampled mode draws edge-probability
1/2 graphs whose per-sample seeds are the outputs of the documented
SplitMix64 stream, so a (n, surface, samples, seed) configuration pins the
result exactly.  Evaluations are independent per graph and may be farmed to
a process pool; the reduction is a commutative count in task order, so the
summary never depends on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .generators import gen_random, random_seed_stream
from .graph import Graph
from .obstructions import obstruct
from .surface import SurfaceParams, surface_params

EXHAUSTIVE_MAX_N = 6
SAMPLED_MAX_N = 14

# attribution order for the per-test breakdown (first fired test wins)
BREAKDOWN_TESTS = ("multipartite", "bipartite_half_graph", "half_graph", "ncl")

_FILTERED = "filtered"
_CLEAR = "clear"


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    surface: SurfaceParams
    mode: str  # "exhaustive" | "sampled"
    sample_count: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.mode == "exhaustive":
            if not 0 <= self.n <= EXHAUSTIVE_MAX_N:
                raise ValueError(
                    f"exhaustive mode iterates 2**(n choose 2) graphs; "
                    f"n must be <= {EXHAUSTIVE_MAX_N}, got {self.n}"
                )
        elif self.mode == "sampled":
            if not 0 <= self.n <= SAMPLED_MAX_N:
                raise ValueError(f"sampled mode needs n <= {SAMPLED_MAX_N}, got {self.n}")
            if self.sample_count < 1:
                raise ValueError("sampled mode needs sample_count >= 1")
        else:
            raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {self.mode!r}")


@dataclass(frozen=True)
class ExperimentSummary:
    config: ExperimentConfig
    total: int
    passed_clique: int
    obstructed_among_passed: int
    fraction: Fraction
    per_test: Tuple[Tuple[str, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "config": {
                "n": self.config.n,
                "genus": self.config.surface.genus,
                "punctures": self.config.surface.punctures,
                "mode": self.config.mode,
                "sample_count": self.config.sample_count,
                "seed": self.config.seed,
            },
            "total": self.total,
            "passed_clique": self.passed_clique,
            "obstructed_among_passed": self.obstructed_among_passed,
            "fraction": str(self.fraction),
            "per_test": dict(self.per_test),
        }


def graph_from_index(n: int, index: int) -> Graph:
    """The labeled graph whose edge set is the binary expansion of ``index``.

    Bit i corresponds to the i-th pair (u, v), u < v, in lexicographic
    order, matching the exhaustive enumeration.
    """
    edges = []
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if index >> bit & 1:
                edges.append((u, v))
            bit += 1
    return Graph(n, edges)


def _classify(g: Graph, surface: SurfaceParams) -> str:
    report = obstruct(g, surface)
    if not report.fired_tests:
        return _CLEAR
    first = report.fired_tests[0].test_name
    return _FILTERED if first == "clique" else first


def _evaluate(task: Tuple[str, int, int, int, int]) -> str:
    kind, n, genus, punctures, payload = task
    surface = surface_params(genus, punctures)
    if kind == "exhaustive":
        g = graph_from_index(n, payload)
    else:
        g = gen_random(n, Fraction(1, 2), payload)
    return _classify(g, surface)


def run_enumeration_experiment(
    cfg: ExperimentConfig, workers: int = 1
) -> ExperimentSummary:
    surface = cfg.surface
    if cfg.mode == "exhaustive":
        count = 1 << (cfg.n * (cfg.n - 1) // 2)
        tasks: List[Tuple[str, int, int, int, int]] = [
            ("exhaustive", cfg.n, surface.genus, surface.punctures, index)
            for index in range(count)
        ]
    else:
        seeds = random_seed_stream(cfg.seed, cfg.sample_count)
        tasks = [
            ("sampled", cfg.n, surface.genus, surface.punctures, s) for s in seeds
        ]

    if workers <= 1:
        labels: Iterable[str] = map(_evaluate, tasks)
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        pool = ProcessPoolExecutor(max_workers=workers)
        try:
            labels = list(pool.map(_evaluate, tasks, chunksize=chunk))
        finally:
            pool.shutdown()

    passed = 0
    counts = {name: 0 for name in BREAKDOWN_TESTS}
    for label in labels:
        if label == _FILTERED:
            continue
        passed += 1
        if label != _CLEAR:
            counts[label] += 1
    obstructed = sum(counts.values())
    fraction = Fraction(obstructed, passed) if passed else Fraction(0)
    return ExperimentSummary(
        config=cfg,
        total=len(tasks),
        passed_clique=passed,
        obstructed_among_passed=obstructed,
        fraction=fraction,
        per_test=tuple(counts.items()),
    )
