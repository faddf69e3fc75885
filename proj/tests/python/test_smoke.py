import os
import random
from pathlib import Path

import pytest

import rehub

DATA = Path(os.environ.get("REHUB_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


@pytest.fixture(scope="module")
def tree():
    graph = rehub.Graph.read(DATA / "figure1_tree.txt")
    labels = rehub.build_labels(graph)
    index = rehub.preprocess(graph, labels, [4, 10, 12], k=1)
    return graph, labels, index


def test_labels(tree):
    graph, labels, _ = tree
    assert graph.vertex_count == 14
    assert labels.total_pairs == 39
    assert labels.label(0) == [(0, 0)]
    for s in range(14):
        bfs = rehub.bfs_distances(graph, s)
        assert [labels.distance(s, t) for t in range(14)] == bfs


def test_query(tree):
    graph, labels, index = tree
    assert rehub.rknn_query(index, labels, 0) == [(0, 1), (2, 3)]
    assert rehub.knn_query(index, labels, 9, 1) == [(0, 3)]
    assert index.epsilon == pytest.approx(8 / 9)
    for q in range(14):
        assert rehub.rknn_query(index, labels, q) == rehub.oracle_rknn(graph, [4, 10, 12], q, 1)


def test_random_graph_matches_oracle():
    rng = random.Random(5)
    n = 80
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    edges += [(rng.randrange(n), rng.randrange(n)) for _ in range(120)]
    graph = rehub.Graph.from_edges(n, edges)
    labels = rehub.build_labels(graph)
    objects = sorted(rng.sample(range(n), 12))
    for k in (1, 3):
        index = rehub.preprocess(graph, labels, objects, k=k, threads=4)
        for q in rng.sample(range(n), 20):
            assert rehub.rknn_query(index, labels, q) == rehub.oracle_rknn(graph, objects, q, k)


def test_round_trip_and_errors(tree, tmp_path):
    _, labels, index = tree
    labels.save(tmp_path / "t.rhub")
    loaded = rehub.LabelSet.load(tmp_path / "t.rhub")
    assert loaded == labels
    assert rehub.Index.from_bytes(index.to_bytes(), loaded) == index
    bad = bytearray(labels.to_bytes())
    bad[0] ^= 1
    with pytest.raises(rehub.FormatError):
        rehub.LabelSet.from_bytes(bytes(bad))
    with pytest.raises(rehub.ParseError):
        rehub.Graph.from_text("0 x\n")
    with pytest.raises(rehub.RangeError):
        rehub.rknn_query(index, labels, 99)
    with pytest.raises(rehub.Error):
        rehub.preprocess(rehub.Graph.read(DATA / "figure1_tree.txt"), labels, [4, 4], k=1)
