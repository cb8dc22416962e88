from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import complete_graph, make_graph, random_graph
from triscope.graph import (
    OTHER_CLUSTER,
    Graph,
    ParseError,
    Triangle,
    cluster_triangle_density,
    count_triangles,
    count_wedges,
    ego_network,
    enumerate_triangles,
    induced_subgraph,
    influence_score,
    parse_clusters,
    parse_edge_list,
    triangle_cluster,
    triangle_density,
)


class TestParseEdgeList:
    def test_smallest_triangle(self):
        g = parse_edge_list("0 1\n1 2\n2 0").graph
        assert g.node_count == 3
        assert g.edge_count == 3

    def test_duplicates_and_self_loops_dropped_and_counted(self):
        parsed = parse_edge_list("a b\nb a\na a")
        assert parsed.graph.node_count == 2
        assert parsed.graph.edge_count == 1
        assert parsed.duplicate_edges == 1
        assert parsed.self_loops == 1

    def test_karate_counts(self, karate: Graph):
        assert karate.node_count == 34
        assert karate.edge_count == 78

    def test_first_appearance_indexing(self):
        g = parse_edge_list("x y\nz x").graph
        assert g.labels == {0: "x", 1: "y", 2: "z"}
        assert g.index_of("z") == 2

    def test_comments_and_blanks_skipped(self):
        g = parse_edge_list("# header\n\n0 1\n  \n# tail\n").graph
        assert g.edge_count == 1

    def test_wrong_token_count_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("0 1\n0 1 2\n")
        assert exc.value.line_no == 2

    def test_empty_text_gives_empty_graph(self):
        assert parse_edge_list("").graph.node_count == 0


class TestParseClusters:
    def test_karate_two_clubs(self, karate_clustered: Graph):
        assert karate_clustered.clusters is not None
        assert len(set(karate_clustered.clusters.values())) == 2

    def test_empty_cluster_file_rejected(self, karate: Graph):
        with pytest.raises(ValueError, match="unassigned"):
            parse_clusters("", karate)

    def test_conflicting_reassignment_rejected(self):
        g = parse_edge_list("0 1").graph
        with pytest.raises(ParseError, match="reassigned"):
            parse_clusters("0 a\n0 b\n1 a", g)

    def test_unknown_node_rejected(self):
        g = parse_edge_list("0 1").graph
        with pytest.raises(ParseError, match="unknown node"):
            parse_clusters("9 a", g)

    def test_reserved_other_rejected(self):
        g = parse_edge_list("0 1").graph
        with pytest.raises(ParseError, match="reserved"):
            parse_clusters(f"0 {OTHER_CLUSTER}\n1 a", g)


class TestTriangles:
    def test_k3(self):
        g = complete_graph(3)
        assert [t.as_tuple() for t in enumerate_triangles(g)] == [(0, 1, 2)]

    def test_four_cycle_triangle_free(self):
        g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert enumerate_triangles(g) == []

    def test_karate_45(self, karate: Graph):
        assert count_triangles(karate) == 45

    def test_football_810(self, football: Graph):
        assert football.node_count == 115
        assert football.edge_count == 613
        assert count_triangles(football) == 810

    def test_sorted_and_canonical(self, karate: Graph):
        tris = [t.as_tuple() for t in enumerate_triangles(karate)]
        assert tris == sorted(tris)
        assert all(u < v < w for u, v, w in tris)

    def test_supporting_edges_exist(self, karate: Graph):
        for t in enumerate_triangles(karate):
            u, v, w = t
            assert karate.has_edge(u, v) and karate.has_edge(u, w) and karate.has_edge(v, w)

    def test_matches_triple_scan_on_random_graphs(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 30), rng.random())
            assert [t.as_tuple() for t in enumerate_triangles(g)] == oracles.triangles_triple_scan(g)


class TestWedges:
    def test_k3(self):
        assert count_wedges(complete_graph(3)) == 3

    def test_path3(self):
        assert count_wedges(make_graph(3, [(0, 1), (1, 2)])) == 1

    def test_k4(self):
        assert count_wedges(complete_graph(4)) == 12

    def test_matches_two_hop_scan_on_random_graphs(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 30), rng.random())
            assert count_wedges(g) == oracles.wedges_two_hop_scan(g)


class TestTriangleDensity:
    def test_k4_is_one(self):
        assert triangle_density(complete_graph(4)) == 1.0

    def test_star_is_zero(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert triangle_density(star) == 0.0

    def test_karate_value(self, karate: Graph):
        assert triangle_density(karate) == pytest.approx(135 / 528, abs=1e-15)

    def test_in_unit_interval_on_random_graphs(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 20), rng.random())
            assert 0.0 <= triangle_density(g) <= 1.0


class TestInducedSubgraph:
    def test_k4_minus_node_is_k3(self):
        sub = induced_subgraph(complete_graph(4), [0, 1, 2])
        assert sub.node_count == 3 and sub.edge_count == 3

    def test_single_node(self, karate: Graph):
        sub = induced_subgraph(karate, [5])
        assert sub.node_count == 1 and sub.edge_count == 0

    def test_karate_prefix_matches_edge_filter(self, karate: Graph):
        keep = {0, 1, 2, 3}
        expected = sum(1 for u, v in karate.edges if u in keep and v in keep)
        sub = induced_subgraph(karate, keep)
        assert sub.edge_count == expected

    def test_labels_keep_identity(self, karate: Graph):
        sub = induced_subgraph(karate, [4, 10])
        assert sub.label_of(0) == karate.label_of(4)
        assert sub.label_of(1) == karate.label_of(10)


class TestEgoNetwork:
    def test_star_center(self):
        star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert ego_network(star, 0).node_count == 4

    def test_k4_any_node(self):
        assert ego_network(complete_graph(4), 2).edge_count == 6

    def test_karate_node_0(self, karate: Graph):
        ego = ego_network(karate, 0)
        assert ego.node_count == 1 + karate.degree(0)
        assert karate.degree(0) == 16

    def test_out_of_range(self, karate: Graph):
        with pytest.raises(IndexError):
            ego_network(karate, 99)


class TestInfluenceScore:
    def test_k4(self):
        assert influence_score(complete_graph(4), 1) == (3, 3)

    def test_star_center(self):
        star = make_graph(5, [(0, i) for i in range(1, 5)])
        assert influence_score(star, 0) == (4, 0)

    def test_karate_node_33(self, karate: Graph):
        v = karate.index_of("33")
        score = influence_score(karate, v)
        assert score.degree == 17
        assert score.supporting_triangles == oracles.incident_triangles_scan(karate, v)

    def test_consistent_with_enumeration(self, karate: Graph):
        tris = enumerate_triangles(karate)
        for v in range(karate.node_count):
            expected = sum(1 for t in tris if v in t)
            assert influence_score(karate, v).supporting_triangles == expected

    def test_out_of_range(self, karate: Graph):
        with pytest.raises(IndexError):
            influence_score(karate, -1)


def _clustered_triangle(c0: str, c1: str, c2: str) -> Graph:
    return Graph(
        node_count=3,
        edges=frozenset({(0, 1), (0, 2), (1, 2)}),
        clusters={0: c0, 1: c1, 2: c2},
    )


class TestTriangleCluster:
    def test_majority_pair(self):
        g = _clustered_triangle("A", "A", "B")
        assert triangle_cluster(g, Triangle(0, 1, 2)) == "A"

    def test_three_distinct_is_other(self):
        g = _clustered_triangle("A", "B", "C")
        assert triangle_cluster(g, Triangle(0, 1, 2)) == OTHER_CLUSTER

    def test_unanimous(self):
        g = _clustered_triangle("A", "A", "A")
        assert triangle_cluster(g, Triangle(0, 1, 2)) == "A"

    def test_requires_cluster_map(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            triangle_cluster(g, Triangle(0, 1, 2))

    @given(st.permutations(["A", "A", "B"]) | st.permutations(["A", "B", "C"]))
    @settings(max_examples=30)
    def test_invariant_under_endpoint_permutation(self, assignment):
        g = _clustered_triangle(*assignment)
        # relabeling the same multiset of cluster ids never changes the answer
        baseline = triangle_cluster(_clustered_triangle(*sorted(assignment)), Triangle(0, 1, 2))
        assert triangle_cluster(g, Triangle(0, 1, 2)) == baseline


class TestClusterTriangleDensity:
    def test_k4_cluster(self):
        g = Graph(
            node_count=5,
            edges=frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)}),
            clusters={0: "A", 1: "A", 2: "A", 3: "A", 4: "B"},
        )
        assert cluster_triangle_density(g, "A") == 1.0
        assert cluster_triangle_density(g, "B") == 0.0

    def test_unknown_cluster(self, karate_clustered: Graph):
        with pytest.raises(KeyError):
            cluster_triangle_density(karate_clustered, "nope")

    def test_karate_clubs_match_induced_oracle(self, karate_clustered: Graph):
        vals = {}
        for cid in sorted(set(karate_clustered.clusters.values())):
            members = [v for v, c in karate_clustered.clusters.items() if c == cid]
            sub = induced_subgraph(karate_clustered, members)
            tris = len(oracles.triangles_triple_scan(sub))
            wedges = oracles.wedges_two_hop_scan(sub)
            expected = 3 * tris / wedges if wedges else 0.0
            assert cluster_triangle_density(karate_clustered, cid) == pytest.approx(expected)
            vals[cid] = expected
        assert vals["Mr.Hi"] > vals["Officer"]
