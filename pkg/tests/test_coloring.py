import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hamgraph.coloring import (
    Coloring,
    ColoringError,
    canonical_partition,
    class_sizes,
    color_classes,
    coordinate_coloring,
    is_even,
    is_proper,
    monochromatic_edge,
    partition_from_words,
    read_coloring,
    swap_along_edge,
    write_coloring,
)
from hamgraph.constructions import figure2, h243_example
from hamgraph.core import GraphParams, ParamsError, valid_params
from hamgraph.graph import HammingGraph, cached_graph
from oracles import adjacency, proper


def graph(q, n, d):
    return HammingGraph(GraphParams(q, n, d))


def test_is_proper_examples():
    g = graph(2, 3, 2)
    assert is_proper(g, figure2(1).coloring)
    assert not is_proper(g, Coloring(g.params, 1, (0,) * 8))
    assert is_proper(graph(2, 4, 3), h243_example(1).coloring)


def test_is_proper_matches_edge_oracle():
    g = graph(2, 4, 3)
    adj = adjacency(2, 4, 3)
    rng = random.Random(3)
    for _ in range(300):
        colors = tuple(rng.randrange(4) for _ in range(16))
        K = Coloring(g.params, 4, colors)
        assert is_proper(g, K) == proper(adj, colors)
        clash = monochromatic_edge(g, K)
        assert (clash is None) == proper(adj, colors)
        if clash:
            u, v = clash
            assert u < v and g.is_edge(u, v) and colors[u] == colors[v]


def test_params_mismatch():
    with pytest.raises(ParamsError):
        is_proper(graph(2, 4, 3), figure2(1).coloring)


def test_coordinate_colorings_of_h232_are_first_three_rows():
    g = graph(2, 3, 2)
    for row, idx in zip((1, 2, 3), [(1, 2), (1, 3), (2, 3)]):
        assert canonical_partition(coordinate_coloring(g, idx)) == canonical_partition(figure2(row).coloring)


def test_coordinate_coloring_color_value():
    g = graph(3, 4, 3)
    K = coordinate_coloring(g, (2, 4))
    for x in range(81):
        dig = g.words.digits(x)
        assert K[x] == dig[1] + 3 * dig[3]


def test_coordinate_coloring_on_hqnn():
    g = graph(3, 3, 3)
    for i in (1, 2, 3):
        K = coordinate_coloring(g, (i,))
        assert K.k == 3 and is_proper(g, K)
        assert all(K[x] == g.words.digits(x)[i - 1] for x in range(27))


def test_coordinate_coloring_errors():
    g = graph(2, 4, 3)
    for bad in [(1,), (1, 2, 3), (2, 1), (1, 1), (0, 2), (1, 5)]:
        with pytest.raises(ColoringError):
            coordinate_coloring(g, bad)


@pytest.mark.parametrize("p", [p for p in valid_params(4096) if p.q ** (p.n - p.d + 1) <= 4096], ids=str)
def test_every_coordinate_coloring_proper_and_even(p):
    g = cached_graph(p.q, p.n, p.d)
    m = p.n - p.d + 1
    choices = list(combinations(range(1, p.n + 1), m))
    if len(choices) > 6:
        choices = random.Random(p.n * 100 + p.d).sample(choices, 6)
    for idx in choices:
        K = coordinate_coloring(g, idx)
        assert is_proper(g, K)
        assert class_sizes(K) == [p.q ** (p.d - 1)] * p.q ** m
        assert is_even(K)


def test_evenness_examples():
    assert not is_even(h243_example(1).coloring)
    assert sorted(class_sizes(h243_example(1).coloring)) == [3, 4, 4, 5]
    assert is_even(h243_example(2).coloring)
    # an unused palette entry makes the coloring uneven
    g = graph(2, 3, 2)
    K = figure2(1).coloring
    assert not is_even(Coloring(g.params, 5, K.colors))


def test_swap_examples():
    g = graph(2, 3, 2)
    K3, K4 = figure2(3).coloring, figure2(4).coloring
    assert canonical_partition(swap_along_edge(g, K3, "011", "101")) == canonical_partition(K4)
    K1, K5 = figure2(1).coloring, figure2(5).coloring
    assert canonical_partition(swap_along_edge(g, K1, "100", "001")) == canonical_partition(K5)
    assert swap_along_edge(g, swap_along_edge(g, K3, "011", "101"), "011", "101") == K3
    with pytest.raises(ColoringError):
        swap_along_edge(g, K3, "000", "100")


def test_swap_preserves_class_sizes():
    g = graph(2, 4, 3)
    K = h243_example(1).coloring
    for u, v in g.edges():
        K2 = swap_along_edge(g, K, u, v)
        assert sorted(class_sizes(K2)) == sorted(class_sizes(K))
        assert swap_along_edge(g, K2, u, v) == K


def test_canonical_partition_examples():
    g = graph(2, 3, 2)
    part = canonical_partition(figure2(2).coloring)
    printed = [["000", "010"], ["001", "011"], ["100", "110"], ["101", "111"]]
    assert sorted(part.words(g)) == printed
    # classes are ordered by least member index; 100 is index 1 and 001 is index 4
    assert part.words(g) == [["000", "010"], ["100", "110"], ["001", "011"], ["101", "111"]]
    assert [c[0] for c in part.classes] == sorted(c[0] for c in part.classes)
    assert part == partition_from_words(g, [["101", "111"], ["000", "010"], ["110", "100"], ["001", "011"]])
    classes = color_classes(coordinate_coloring(graph(3, 4, 3), (1, 2)))
    assert [len(c) for c in classes] == [9] * 9


@settings(max_examples=50)
@given(st.permutations(range(9)), st.integers(1, 9))
def test_canonical_partition_palette_invariant(perm, row):
    K = figure2(row).coloring
    padded = Coloring(K.params, 9, K.colors)
    assert canonical_partition(padded.relabel(perm)) == canonical_partition(K)


def test_json_round_trip():
    K = h243_example(2).coloring
    data = write_coloring(K)
    assert read_coloring(data) == K
    doc = json.loads(data)
    assert set(doc) == {"q", "n", "d", "k", "colors"}


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        "[1, 2]",
        '{"q":2,"n":3,"d":2,"k":4}',
        '{"q":2,"n":3,"d":2,"k":4,"colors":[0,1,2,3,0,1,2]}',
        '{"q":2,"n":3,"d":2,"k":4,"colors":[0,1,2,3,0,1,2,4]}',
        '{"q":2,"n":3,"d":2,"k":4,"colors":[0,1,2,3,0,1,2,-1]}',
        '{"q":2,"n":3,"d":2,"k":4,"colors":"01230123"}',
        '{"q":2,"n":3,"d":3,"k":4,"colors":[0,1,2,3,0,1,2,3]}',
    ],
)
def test_read_coloring_rejects(doc):
    with pytest.raises(ValueError):
        read_coloring(doc)


@pytest.mark.parametrize("p", [p for p in valid_params(256) if p.n >= 2], ids=str)
def test_class_pair_scan_matches_edge_scan(p):
    from hamgraph.coloring import _monochromatic_pair

    g = cached_graph(p.q, p.n, p.d)
    rng = random.Random(p.vertex_count * 31 + p.d)
    for k in (2, p.q ** (p.n - p.d + 1), 2 * p.q ** (p.n - p.d + 1)):
        for _ in range(5):
            K = Coloring(g.params, k, tuple(rng.randrange(k) for _ in range(g.vertex_count)))
            assert _monochromatic_pair(g, K) == monochromatic_edge(g, K)
    K = coordinate_coloring(g, list(range(1, p.n - p.d + 2)))
    assert _monochromatic_pair(g, K) is None
