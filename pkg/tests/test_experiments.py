from fractions import Fraction
from itertools import combinations

import pytest

from nclgraph import (
    ExperimentConfig,
    graph_from_index,
    run_enumeration_experiment,
    surface_params,
)


def test_graph_from_index_enumerates_all_labeled_graphs():
    seen = {graph_from_index(3, i) for i in range(8)}
    assert len(seen) == 8
    assert graph_from_index(3, 0).edge_count == 0
    assert graph_from_index(3, 7).edge_count == 3


def _brute_exhaustive_counts_n4_sphere5():
    """Independent enumeration: clique filter is triangle-freeness (cap 2),
    the only reachable deeper obstruction at n=4 is an induced 4-cycle
    (half-graph thresholds need 10 vertices, NCL can never exceed 4)."""
    pairs = list(combinations(range(4), 2))
    passed = obstructed = 0
    for index in range(1 << 6):
        edges = {p for bit, p in enumerate(pairs) if index >> bit & 1}

        def adjacent(u, v):
            return (min(u, v), max(u, v)) in edges

        has_triangle = any(
            adjacent(a, b) and adjacent(b, c) and adjacent(a, c)
            for a, b, c in combinations(range(4), 3)
        )
        if has_triangle:
            continue
        passed += 1
        has_c4 = any(
            not adjacent(x, y)
            and not adjacent(z, w)
            and all(adjacent(p, q) for p in (x, y) for q in (z, w))
            for (x, y), (z, w) in [
                ((0, 1), (2, 3)),
                ((0, 2), (1, 3)),
                ((0, 3), (1, 2)),
            ]
        )
        if has_c4:
            obstructed += 1
    return passed, obstructed


def test_exhaustive_n4_against_independent_enumeration():
    cfg = ExperimentConfig(n=4, surface=surface_params(0, 5), mode="exhaustive")
    summary = run_enumeration_experiment(cfg)
    passed, obstructed = _brute_exhaustive_counts_n4_sphere5()
    assert summary.total == 64
    assert summary.passed_clique == passed == 41
    assert summary.obstructed_among_passed == obstructed == 3
    assert summary.fraction == Fraction(3, 41)
    assert dict(summary.per_test)["multipartite"] == 3


def test_sampled_determinism():
    cfg = ExperimentConfig(
        n=10, surface=surface_params(0, 5), mode="sampled", sample_count=100, seed=1
    )
    first = run_enumeration_experiment(cfg)
    second = run_enumeration_experiment(cfg)
    assert first == second


def test_worker_count_does_not_change_results():
    cfg = ExperimentConfig(
        n=6, surface=surface_params(0, 5), mode="sampled", sample_count=60, seed=5
    )
    serial = run_enumeration_experiment(cfg, workers=1)
    parallel = run_enumeration_experiment(cfg, workers=2)
    assert serial == parallel


def test_sampled_fraction_goldens_grow_with_n():
    # frozen after first computation (seed 7, 300 samples, five-punctured
    # sphere); the obstructed share among clique-passing graphs rises with n
    expected = {
        4: Fraction(8, 191),
        6: Fraction(11, 29),
        8: Fraction(7, 9),
    }
    fractions = {}
    for n, value in expected.items():
        cfg = ExperimentConfig(
            n=n, surface=surface_params(0, 5), mode="sampled", sample_count=300, seed=7
        )
        summary = run_enumeration_experiment(cfg)
        assert summary.fraction == value
        fractions[n] = summary.fraction
    ordered = [fractions[n] for n in sorted(fractions)]
    assert all(a <= b for a, b in zip(ordered, ordered[1:]))


def test_sampled_goldens_large_n():
    # at 10+ vertices nothing survives the clique filter at edge
    # probability 1/2, so the conditional fraction collapses to 0
    expected = {8: Fraction(7, 9), 10: Fraction(0), 12: Fraction(0)}
    for n, value in expected.items():
        cfg = ExperimentConfig(
            n=n, surface=surface_params(0, 5), mode="sampled", sample_count=300, seed=7
        )
        summary = run_enumeration_experiment(cfg)
        assert summary.fraction == value


def test_config_validation():
    surface = surface_params(0, 5)
    with pytest.raises(ValueError):
        ExperimentConfig(n=7, surface=surface, mode="exhaustive")
    with pytest.raises(ValueError):
        ExperimentConfig(n=15, surface=surface, mode="sampled", sample_count=10)
    with pytest.raises(ValueError):
        ExperimentConfig(n=5, surface=surface, mode="sampled", sample_count=0)
    with pytest.raises(ValueError):
        ExperimentConfig(n=5, surface=surface, mode="guess")


def test_summary_json_shape():
    cfg = ExperimentConfig(n=3, surface=surface_params(0, 5), mode="exhaustive")
    data = run_enumeration_experiment(cfg).to_json_dict()
    assert data["schema_version"] == 1
    assert data["config"]["mode"] == "exhaustive"
    assert data["total"] == 8
    assert set(data["per_test"]) == {
        "multipartite",
        "bipartite_half_graph",
        "half_graph",
        "ncl",
    }
