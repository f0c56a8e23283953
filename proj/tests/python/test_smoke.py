import itertools

import networkx as nx
import pytest

import oddsum


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_round_trip():
    g = oddsum.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert (g.n, g.m) == (4, 4)
    assert oddsum.Graph.from_graph6(g.to_graph6()) == g
    assert oddsum.Graph.parse(g.to_json()) == g
    assert g.closed_neighborhood(0) == [0, 1, 3]


def test_bad_edge_raises_value_error():
    with pytest.raises(ValueError):
        oddsum.Graph(3, [(0, 0)])


def test_families_match_networkx():
    j = oddsum.family("J", delta=4, k=1)
    assert j.n == 95
    assert oddsum.girth(j) == 5
    h = to_nx(j)
    assert nx.girth(h) == 5
    assert max(d for _, d in h.degree()) == 4
    b = oddsum.family("bipartite", delta=4, g=6)
    assert oddsum.is_bipartite(b) is not None
    assert nx.is_bipartite(to_nx(b))
    assert oddsum.girth(oddsum.family("path", n=4)) is None


def test_odd_dominating_sets_brute_force():
    g = nx.petersen_graph()
    pg = oddsum.Graph(10, list(g.edges()))
    closed = [set(g[v]) | {v} for v in g]
    expected = sorted(
        sorted(s)
        for r in range(11)
        for s in itertools.combinations(range(10), r)
        if all(len(set(s) & c) % 2 == 1 for c in closed)
    )
    assert sorted(oddsum.odd_dominating_sets(pg)) == expected
    assert oddsum.ods_count(pg) == len(expected)


def test_chromatic_and_chios():
    k4 = oddsum.family("complete", n=4)
    assert oddsum.chromatic_number(k4) == 4
    cert = oddsum.odd_sum_chromatic(oddsum.family("thm4"))
    assert cert["chios"] == 8
    assert oddsum.is_odd_sum_coloring(oddsum.family("thm4"), cert["colors"])
    assert oddsum.chios(oddsum.family("product-k2kn", n=3)) == 6


def test_chios_matches_oracle_on_small_graphs():
    for n in range(1, 6):
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() != n or not nx.is_connected(g):
                continue
            og = oddsum.Graph(n, list(g.edges()))
            assert oddsum.chios(og) == oddsum.oracle_chios(og)


def test_gt_counts_are_exact_integers():
    assert oddsum.ods_count(oddsum.family("Gt", t=3)) == 64


def test_cap_raises_resource_limit():
    with pytest.raises(RuntimeError):
        oddsum.odd_dominating_sets(oddsum.family("complete", n=2), cap=1)


def test_surfaces():
    assert oddsum.surfaces.heawood_number(30) == 22
    assert oddsum.surfaces.lower_bound(30) > 22
    gaps = [row[3] for row in oddsum.surfaces.gap_table(240)]
    assert gaps == sorted(gaps) and len(set(gaps)) == 4


def test_verify_target():
    passed, text = oddsum.verify("thm4")
    assert passed, text
