from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nclgraph import (
    NestedComplexitySequence,
    SizeCapError,
    build_graph,
    check_certificate,
    gen_complete,
    gen_cycle,
    gen_edgeless,
    gen_half_graph,
    gen_marking_graph,
    gen_multipartite,
    gen_random,
    has_kmn_subgraph,
    ncl_exact,
    ncl_naive,
    ncl_upper_bound_bipartite,
    verify_certificate,
)

from conftest import all_graphs, graphs


# -- exact values ------------------------------------------------------------


def test_complete_graphs_have_ncl_one():
    for n in range(1, 9):
        assert ncl_exact(gen_complete(n))[0] == 1


def test_multipartite_pairs_value():
    for r in range(1, 6):
        assert ncl_exact(gen_multipartite(r, 2))[0] == 2 * r


def test_half_graph_lower_bound():
    for n in range(1, 7):
        assert ncl_exact(gen_half_graph(n, bipartite=True))[0] >= n


def test_path_on_four_vertices():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert ncl_exact(g)[0] == 4


def test_edgeless_is_two():
    for k in range(2, 6):
        assert ncl_exact(gen_edgeless(k))[0] == 2


def test_empty_graph_reports_zero():
    assert ncl_exact(gen_edgeless(0)) == (0, None)
    assert ncl_naive(gen_edgeless(0)) == 0


def test_single_vertex():
    assert ncl_exact(gen_edgeless(1))[0] == 1
    assert ncl_naive(gen_edgeless(1)) == 1


def test_vertex_cap():
    with pytest.raises(SizeCapError):
        ncl_exact(gen_edgeless(25))
    assert ncl_exact(gen_edgeless(25), vertex_cap=25)[0] == 2
    with pytest.raises(SizeCapError):
        ncl_naive(gen_edgeless(9))


def test_memory_estimate_logged_above_20(caplog):
    with caplog.at_level("WARNING", logger="nclgraph.ncl"):
        ncl_exact(gen_edgeless(21))
    assert "MiB" in caplog.text


# -- naive oracle -------------------------------------------------------------


def test_naive_examples():
    assert ncl_naive(gen_complete(3)) == 1
    assert ncl_naive(gen_cycle(4)) == 4


def test_oracle_equivalence_on_all_4_vertex_graphs():
    for g in all_graphs(4):
        assert ncl_exact(g)[0] == ncl_naive(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_oracle_equivalence_random(g):
    assert ncl_exact(g)[0] == ncl_naive(g)


# -- certificates --------------------------------------------------------------


def test_marking_chain_certificate():
    # the explicit chain: curves then transversals, witnessed by
    # transversals 2..k followed by curves 1..k
    for genus, punctures in [(0, 5), (2, 0), (1, 3)]:
        k = 3 * genus - 3 + punctures
        b = tuple(range(2 * k))
        a = tuple(range(k + 1, 2 * k)) + tuple(range(k))
        cert = NestedComplexitySequence(b, a)
        for mode in ("none", "all", "path"):
            g = gen_marking_graph(genus, punctures, mode)
            assert verify_certificate(g, cert), (genus, punctures, mode)


def test_k2_has_no_escape():
    g = build_graph(2, [(0, 1)])
    cert = NestedComplexitySequence((0, 1), (0,))
    assert not verify_certificate(g, cert)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_exact_certificates_verify(g):
    value, cert = ncl_exact(g, want_certificate=True)
    assert cert is not None
    assert len(cert) == value
    assert verify_certificate(g, cert)


def test_certificate_deterministic_and_lex_least():
    _, cert = ncl_exact(gen_cycle(4), want_certificate=True)
    assert cert == NestedComplexitySequence((0, 1, 2, 3), (3, 0, 1))
    _, again = ncl_exact(gen_cycle(4), want_certificate=True)
    assert cert == again


def test_check_certificate_reports_clauses():
    g = gen_cycle(4)
    problems = check_certificate(g, NestedComplexitySequence((0, 1, 2, 3), (3, 0, 0)))
    assert problems and any("escape" in line for line in problems)
    problems = check_certificate(g, NestedComplexitySequence((0, 2), (1, 0)))
    assert any("witnesses" in line for line in problems)
    assert check_certificate(g, NestedComplexitySequence((), ())) == ["b-sequence is empty"]


def test_check_certificate_range_error():
    g = gen_cycle(4)
    with pytest.raises(ValueError, match="outside"):
        check_certificate(g, NestedComplexitySequence((0, 7), (1,)))


def test_certificate_json_round_trip():
    cert = NestedComplexitySequence((0, 1, 2), (2, 0))
    data = cert.to_json_dict()
    assert data == {"b": [0, 1, 2], "a": [2, 0]}
    assert NestedComplexitySequence.from_json_dict(data) == cert
    with pytest.raises(ValueError):
        NestedComplexitySequence.from_json_dict({"b": [0]})


# -- upper bound from missing complete bipartite subgraphs ----------------------


def test_bound_edgeless():
    result = ncl_upper_bound_bipartite(gen_edgeless(4))
    assert (result.m, result.n, result.bound) == (1, 1, 6)
    assert ncl_exact(gen_edgeless(4))[0] <= result.bound


def test_bound_c4():
    result = ncl_upper_bound_bipartite(gen_cycle(4))
    assert (result.m, result.n, result.bound) == (1, 3, 30)


def test_bound_absent_for_k5():
    assert ncl_upper_bound_bipartite(gen_complete(5), search_limit=4) is None


def test_bound_search_limit_validated():
    with pytest.raises(ValueError):
        ncl_upper_bound_bipartite(gen_cycle(4), search_limit=1)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_bound_dominates_exact_value(g):
    result = ncl_upper_bound_bipartite(g)
    if result is not None:
        assert not has_kmn_subgraph(g, result.m, result.n)
        assert result.bound == 2 ** (result.m + result.n + 1) - 2
        assert ncl_exact(g)[0] <= result.bound


# -- structural properties -------------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=1, max_n=9), st.randoms(use_true_random=False))
def test_monotone_under_induced_subgraphs(g, rng):
    vertices = list(range(g.vertex_count))
    keep = [v for v in vertices if rng.random() < 0.6]
    if not keep:
        keep = [0]
    h = g.induced_subgraph(keep)
    assert ncl_exact(h)[0] <= ncl_exact(g)[0]


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_bounded_by_vertex_count(g):
    assert ncl_exact(g)[0] <= g.vertex_count


def test_marking_graph_value_independent_of_transversal_mode():
    surfaces = [
        (0, 5), (0, 6), (0, 7), (0, 8),
        (1, 2), (1, 3), (1, 4), (1, 5),
        (2, 0), (2, 1), (2, 2),
    ]
    for genus, punctures in surfaces:
        expected = 6 * genus - 6 + 2 * punctures
        for mode in ("none", "all", "path"):
            g = gen_marking_graph(genus, punctures, mode)
            assert ncl_exact(g)[0] == expected, (genus, punctures, mode)


def test_random_graph_certificates_verify():
    for seed in range(20):
        g = gen_random(10, Fraction(1, 2), seed)
        value, cert = ncl_exact(g, want_certificate=True)
        assert len(cert) == value
        assert verify_certificate(g, cert)
