"""Point graph, strong regularity, partitions, triads and profiles."""

import random

import pytest

from gq416.counting import profile_system
from gq416.graph import (
    PointGraph,
    adjacency_profile,
    bit_list,
    bits,
    check_3_regularity,
    derived_profile,
    local_partition,
    pair_law_check,
    perp_of,
    refine_partition,
    refined_counts_check,
    triad_trace,
    verify_srg,
)
from gq416.verify_constants import Q54_PROFILE


def test_degrees_and_edge_count(graph):
    assert all(graph.degree(v) == 68 for v in range(graph.n))
    assert graph.edge_count() == 325 * 68 // 2 == 11050


def test_line_points_are_adjacent(q54, graph):
    for line in q54.lines[:20]:
        for i in range(5):
            for j in range(i + 1, 5):
                assert graph.are_adjacent(line[i], line[j])


def test_constructor_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        PointGraph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        PointGraph(1, [0b1])  # self-loop


def test_verify_srg(graph):
    res = verify_srg(graph)
    assert res.ok
    assert (res.params.v, res.params.k, res.params.lam, res.params.mu) == (325, 68, 3, 17)


def test_complete_graph_is_not_srg():
    n = 5
    adj = [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    res = verify_srg(PointGraph(n, adj))
    assert not res.ok


def test_single_edge_deletion_breaks_srg(graph):
    p = 0
    q = bit_list(graph.adj[0])[0]
    res = verify_srg(graph.without_edge(p, q))
    assert not res.ok
    assert res.witness is not None


def test_local_partition_sizes(graph, canonical):
    assert canonical.sizes == (17, 204, 51, 51)
    # the parts plus {p, q} partition the vertex set
    union = (
        canonical.a_mask
        | canonical.b_mask
        | canonical.c_mask
        | canonical.d_mask
        | (1 << canonical.p)
        | (1 << canonical.q)
    )
    assert union == graph.full_mask
    assert sum(canonical.sizes) == 323


def test_a_is_coclique(graph, canonical):
    for a in bits(canonical.a_mask):
        assert graph.adj[a] & canonical.a_mask == 0


def test_local_partition_rejects_edges(graph):
    p = 0
    q = bit_list(graph.adj[p])[0]
    with pytest.raises(ValueError):
        local_partition(graph, p, q)
    with pytest.raises(ValueError):
        local_partition(graph, p, p)


def test_partition_sizes_sampled_non_edges(graph):
    rng = random.Random(0)
    non_edges = rng.sample(list(graph.non_edges()), 50)
    for p, q in non_edges:
        assert local_partition(graph, p, q).sizes == (17, 204, 51, 51)


def test_refined_partition_sizes(graph, canonical):
    for r in bit_list(canonical.b_mask)[:10]:
        ref = refine_partition(graph, canonical, r)
        assert ref.a1_mask.bit_count() == 5
        assert ref.a2_mask.bit_count() == 12
        assert ref.b1_mask.bit_count() == 39
        assert ref.b2_mask.bit_count() == 164
        assert ref.c1_mask.bit_count() == 12
        assert ref.d1_mask.bit_count() == 12


def test_refine_rejects_vertex_outside_b(graph, canonical):
    with pytest.raises(ValueError):
        refine_partition(graph, canonical, canonical.p)


def test_triad_trace_and_rejection(graph, canonical):
    p, q = canonical.p, canonical.q
    r = bit_list(canonical.b_mask)[0]
    trace = triad_trace(graph, p, q, r)
    assert trace.bit_count() == 5
    edge_end = bit_list(graph.adj[p])[0]
    with pytest.raises(ValueError):
        triad_trace(graph, p, edge_end, r)
    with pytest.raises(ValueError):
        triad_trace(graph, p, p, r)


def test_3_regularity_and_perp_contains_triad(graph, canonical):
    p, q = canonical.p, canonical.q
    for r in bit_list(canonical.b_mask)[:25]:
        assert check_3_regularity(graph, p, q, r)
        u = perp_of(graph, triad_trace(graph, p, q, r))
        for v in (p, q, r):
            assert u & (1 << v)


def test_adjacency_profile(graph, canonical):
    system = profile_system()
    for r in bit_list(canonical.b_mask):
        ref = refine_partition(graph, canonical, r)
        prof = adjacency_profile(graph, ref)
        assert prof == Q54_PROFILE
        assert prof[5] == 3
        assert sum(prof) == 204
        assert sum(i * n for i, n in enumerate(prof)) == 300
        assert all(res == 0 for res in system.residuals(prof))
        assert 4 * prof[0] + prof[1] == 186 + prof[5]


def test_refined_counts(graph, canonical):
    for r in bit_list(canonical.b_mask)[:25]:
        ref = refine_partition(graph, canonical, r)
        counts = refined_counts_check(graph, ref)
        assert counts["b1_n0"] == 24
        assert counts["b1_n1"] == 15
        assert counts["b1_higher"] == 0
        assert counts["b1_n0"] + counts["b1_n1"] == 39
        assert set(counts["per_a_b1_n0"].values()) == {10}


def test_pair_law(graph, canonical):
    b_list = bit_list(canonical.b_mask)
    rng = random.Random(0)
    checked = 0
    while checked < 300:
        x, y = rng.sample(b_list, 2)
        if graph.are_adjacent(x, y):
            continue
        counts = pair_law_check(graph, canonical, x, y)
        k = counts["k"]
        assert k <= 5
        assert counts["in_b"] == 7 + k
        assert counts["in_c"] == 5 - k
        assert counts["in_d"] == 5 - k
        assert counts["in_b"] + counts["in_c"] + counts["in_d"] + k == 17
        checked += 1


def test_pair_law_rejects_adjacent(graph, canonical):
    b_list = bit_list(canonical.b_mask)
    x = b_list[0]
    y = next(v for v in b_list if graph.are_adjacent(x, v))
    with pytest.raises(ValueError):
        pair_law_check(graph, canonical, x, y)


def test_derived_profile(graph, canonical):
    for r in bit_list(canonical.b_mask)[:10]:
        ref = refine_partition(graph, canonical, r)
        for a in bits(ref.a2_mask):
            m = derived_profile(graph, ref, a)
            assert sum(m) == 60
            assert m[4] <= 1
            assert m[3] <= 2
            # membership in the derived family
            assert m[0] == 15 - m[3] - 3 * m[4]
            assert m[1] == 15 + 3 * m[3] + 8 * m[4]
            assert m[2] == 30 - 3 * m[3] - 6 * m[4]


def test_derived_profile_rejects_vertex_outside_a2(graph, canonical):
    r = bit_list(canonical.b_mask)[0]
    ref = refine_partition(graph, canonical, r)
    with pytest.raises(ValueError):
        derived_profile(graph, ref, canonical.p)


def test_non_edge_count(graph):
    assert sum(1 for _ in graph.non_edges()) == 325 * 324 // 2 - 11050 == 41600
