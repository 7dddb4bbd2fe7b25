from __future__ import annotations

import random

import pytest

from botscope.graphs import Graph, hashtag_graph, mention_graph, retweet_graph
from botscope.snapshot import snapshot_from_document
from .oracles import degree_map, describe_values, transitivity
from .test_snapshot import CAPTURED_TS, make_doc, make_tweet


def undirected_from_edges(edges):
    g = Graph(directed=False)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def test_k4_minus_one_edge():
    # complete graph on 4 nodes with one edge removed: 2 triangles remain,
    # closed triples = 6, connected triples = 8 -> 0.75
    edges = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    g = undirected_from_edges(edges)
    assert g.transitivity() == 0.75


def test_triangle_and_path():
    assert undirected_from_edges([(1, 2), (2, 3), (1, 3)]).transitivity() == 1.0
    assert undirected_from_edges([(1, 2), (2, 3)]).transitivity() == 0.0


def test_empty_graph():
    g = Graph(directed=True)
    assert g.node_count == 0
    assert g.edge_count == 0
    assert g.density() == 0.0
    assert g.transitivity() == 0.0


def test_self_loops_ignored():
    g = Graph(directed=True)
    g.add_edge("x", "x")
    assert g.node_count == 0
    g.add_edge("x", "y")
    assert g.node_count == 2
    assert g.edge_count == 1


def test_parallel_edges_accumulate_weight():
    g = Graph(directed=True)
    g.add_edge("a", "b", 2.0)
    g.add_edge("a", "b", 3.0)
    assert g.edge_count == 1
    assert g.weight("a", "b") == 5.0
    assert g.out_strength("a") == 5.0
    assert g.in_strength("b") == 5.0


def test_undirected_edge_canonical():
    g = Graph(directed=False)
    g.add_edge("b", "a")
    g.add_edge("a", "b")
    assert g.edge_count == 1
    assert g.weight("a", "b") == 2.0
    assert g.weight("b", "a") == 2.0
    assert g.degree("a") == 1
    assert g.strength("a") == 2.0


def test_density_directed_vs_undirected():
    gd = Graph(directed=True)
    gd.add_edge(1, 2)
    gd.add_edge(2, 1)
    assert gd.density() == pytest.approx(1.0)
    gu = Graph(directed=False)
    gu.add_edge(1, 2)
    assert gu.density() == pytest.approx(1.0)


def test_random_graphs_match_oracle_exactly():
    rng = random.Random(55)
    for _ in range(200):
        n = rng.randrange(2, 31)
        m = rng.randrange(1, n * 3)
        edges = []
        for _ in range(m):
            u, v = rng.randrange(n), rng.randrange(n)
            edges.append((u, v))
        g = undirected_from_edges(edges)
        assert g.transitivity() == transitivity(edges)
        ref_deg = degree_map(edges)
        for node in ref_deg:
            assert g.degree(node) == ref_deg[node]
        seq = g.degree_sequence()
        ref = describe_values(sorted(ref_deg.values()))
        if ref is None:
            continue
        stats = describe_values(sorted(seq))
        assert stats == ref


def test_degree_centrality():
    g = undirected_from_edges([(1, 2), (1, 3), (1, 4)])
    assert g.degree_centrality(1) == pytest.approx(1.0)
    assert g.degree_centrality(2) == pytest.approx(1 / 3)


def retweet_doc():
    t = [
        make_tweet(0, CAPTURED_TS - 10, is_retweet=True, retweeted_author={
            "user_id": "500", "followers_count": 1, "friends_count": 1,
            "statuses_count": 1, "created_at": "2020-01-01T00:00:00Z"}),
        make_tweet(1, CAPTURED_TS - 20, is_retweet=True, retweeted_author={
            "user_id": "500", "followers_count": 1, "friends_count": 1,
            "statuses_count": 1, "created_at": "2020-01-01T00:00:00Z"}),
        make_tweet(2, CAPTURED_TS - 30, is_retweet=True, retweeted_author={
            "user_id": "600", "followers_count": 1, "friends_count": 1,
            "statuses_count": 1, "created_at": "2020-01-01T00:00:00Z"}),
    ]
    return make_doc(tweets=t)


def test_retweet_graph_shape():
    snap = snapshot_from_document(retweet_doc())
    g = retweet_graph(snap)
    assert g.node_count == 3  # ego + two authors
    assert g.out_strength("42") == 3.0
    assert g.in_strength("500") == 2.0


def test_mention_graph_both_directions():
    tweets = [make_tweet(0, CAPTURED_TS - 10,
                         mentioned_users=[{"user_id": "9", "screen_name": "x"}])]
    mentions = [make_tweet(1, CAPTURED_TS - 5, author_id="77",
                           mentioned_users=[{"user_id": "42", "screen_name": "tester"}])]
    snap = snapshot_from_document(make_doc(tweets=tweets, mentions=mentions))
    g = mention_graph(snap)
    assert g.out_strength("42") == 1.0
    assert g.in_strength("42") == 1.0
    assert g.out_strength("77") == 1.0


def test_hashtag_graph_cooccurrence():
    tweets = [
        make_tweet(0, CAPTURED_TS - 10, hashtags=["a", "b", "c"]),
        make_tweet(1, CAPTURED_TS - 20, hashtags=["a", "b"]),
        make_tweet(2, CAPTURED_TS - 30, hashtags=["solo"]),
    ]
    snap = snapshot_from_document(make_doc(tweets=tweets))
    g = hashtag_graph(snap)
    # pairs: (a,b) twice, (a,c), (b,c); "solo" never co-occurs
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.strength("a") == 3.0
    assert g.transitivity() == 1.0
