from itertools import combinations

import pytest

from hamgraph.coloring import (
    canonical_partition,
    class_sizes,
    classes_as_words,
    coordinate_coloring,
    is_even,
    is_proper,
    swap_along_edge,
)
from hamgraph.constructions import (
    CONSTRUCTION_NAMES,
    DEFAULT_SEED,
    MDS_ROWS,
    coloring_corpus,
    construct,
    figure2,
    h243_example,
    hamming_code,
    hamming_coset_coloring,
    independent_set_J,
    is_prime,
    parity_coloring,
    projective_points,
    span,
    swapped_h254,
    uneven27,
    uneven_variant,
)
from hamgraph.core import ParamsError, word_space
from hamgraph.graph import cached_graph
from hamgraph.search import enumerate_colorings
from hamgraph.transitions import generator_set, max_robust_check, transition_space


def words_of(nc):
    return [set(c) for c in classes_as_words(nc.graph, nc.coloring)]


def test_figure2_rows():
    assert words_of(figure2(1)) == [{"000", "001"}, {"100", "101"}, {"010", "011"}, {"110", "111"}]
    with pytest.raises(ParamsError):
        figure2(10)
    g = cached_graph(2, 3, 2)
    assert canonical_partition(figure2(3).coloring) == canonical_partition(coordinate_coloring(g, (2, 3)))
    K4 = swap_along_edge(g, figure2(3).coloring, "011", "101")
    assert canonical_partition(K4) == canonical_partition(figure2(4).coloring)


def test_figure2_equals_enumeration():
    g = cached_graph(2, 3, 2)
    rows = sorted(canonical_partition(figure2(i).coloring).classes for i in range(1, 10))
    assert [p.classes for p in enumerate_colorings(g, 4)] == rows


def test_h243_examples():
    K1 = h243_example(1)
    cls = [c for c in words_of(K1) if "1110" in c]
    assert cls == [{"1110", "1101", "1011", "0111", "1111"}]
    assert is_proper(K1.graph, K1.coloring) and not is_even(K1.coloring)
    assert sorted(class_sizes(K1.coloring)) == [3, 4, 4, 5]
    K2 = h243_example(2)
    assert is_proper(K2.graph, K2.coloring) and is_even(K2.coloring)
    with pytest.raises(ParamsError):
        h243_example(3)


@pytest.mark.parametrize("base,moves", [(2, [("0000", 1)]), (2, [("1111", 2)]), (1, [("0000", 3)]), (2, [("0000", 1), ("1111", 2)])])
def test_uneven_variants(base, moves):
    nc = uneven_variant(base, moves)
    assert is_proper(nc.graph, nc.coloring)
    assert not is_even(nc.coloring)
    base_colors = h243_example(base).coloring.colors
    moved = {nc.graph.index(word): target - 1 for word, target in moves}
    for x in range(16):
        assert nc.coloring[x] == moved.get(x, base_colors[x])


def test_uneven_variant_rejects_unlisted_moves():
    with pytest.raises(ParamsError):
        uneven_variant(2, [("0001", 3)])
    with pytest.raises(ParamsError):
        uneven_variant(1, [("1111", 2)])
    with pytest.raises(ParamsError):
        uneven_variant(2, [])


def test_parity_coloring():
    nc = parity_coloring(4, 1)
    g = nc.graph
    A00 = {g.word(x) for x in range(16) if nc.coloring[x] == 0}
    assert A00 == {"0000", "0011", "0101", "0110"}
    oracle = {w for w in (format(i, "04b") for i in range(16)) if w.count("1") % 2 == 0 and w[0] == "0"}
    assert A00 == oracle
    for n in (4, 6):
        for j in range(1, n + 1):
            nc = parity_coloring(n, j)
            assert class_sizes(nc.coloring) == [2 ** (n - 2)] * 4
            ones = (1 << n) - 1
            assert set(generator_set(nc.graph, nc.coloring)) == {ones, ones ^ (1 << (j - 1))}
            assert max_robust_check(nc.graph, nc.coloring) == (True, True, True)
    with pytest.raises(ParamsError):
        parity_coloring(5, 1)
    with pytest.raises(ParamsError):
        parity_coloring(4, 5)


def test_swapped_h254():
    nc = swapped_h254()
    g = nc.graph
    assert is_proper(g, nc.coloring) and is_even(nc.coloring)
    ts = transition_space(g, nc.coloring)
    assert [g.word(y) for y in ts.at(g.index("10111"))] == ["00000"]
    assert sorted(g.word(y) for y in ts.at(g.index("00001"))) == ["01110", "10110"]
    assert ts.generator is None


def test_projective_points_and_hamming_code():
    assert projective_points(3) == [(0, 1), (1, 0), (1, 1), (1, 2)]
    code = hamming_code(3)
    assert sorted(code) == sorted(span(MDS_ROWS, 3))
    assert set(code) == {tuple((a * x + b * y) % 3 for x, y in zip(*MDS_ROWS)) for a in range(3) for b in range(3)}
    ws = word_space(3, 4)
    for x, y in combinations(code, 2):
        assert ws.distance(ws.encode(x), ws.encode(y)) >= 3
    for q in (5, 7):
        code = hamming_code(q)
        assert len(code) == q ** (q - 1)
    with pytest.raises(ParamsError):
        hamming_code(4)
    assert is_prime(7) and not is_prime(9) and not is_prime(1)


def test_hamming_coset_coloring():
    nc = hamming_coset_coloring(3)
    g = nc.graph
    assert (g.q, g.n, g.d) == (3, 4, 3)
    assert is_proper(g, nc.coloring)
    assert class_sizes(nc.coloring) == [9] * 9
    part = canonical_partition(nc.coloring)
    for coords in combinations(range(1, 5), 2):
        assert part != canonical_partition(coordinate_coloring(g, coords))
    assert len(transition_space(g, nc.coloring)) == 0
    ws = g.words
    for cls in part.classes:
        assert all(ws.distance(u, v) <= 2 for u, v in combinations(cls, 2))


def test_hamming_coset_coloring_q5():
    nc = hamming_coset_coloring(5)
    assert (nc.graph.q, nc.graph.n, nc.graph.d) == (5, 6, 3)
    assert class_sizes(nc.coloring) == [25] * 625
    assert is_proper(nc.graph, nc.coloring)


def test_uneven27():
    assert len(independent_set_J()) == 11
    nc = uneven27()
    g = nc.graph
    sizes = class_sizes(nc.coloring)
    assert sorted(sizes) == [8] * 18 + [11] * 9
    assert sum(sizes) == 243
    assert is_proper(g, nc.coloring)
    assert not is_even(nc.coloring)
    assert len(transition_space(g, nc.coloring)) == 0
    ws = g.words
    for cls in canonical_partition(nc.coloring).classes:
        assert all(ws.distance(u, v) <= 2 for u, v in combinations(cls, 2))


def test_construct_registry():
    for name in CONSTRUCTION_NAMES:
        nc = construct(name)
        assert nc.name == name
        assert is_proper(nc.graph, nc.coloring)
        assert nc.provenance
    assert construct("figure2:4").coloring == figure2(4).coloring
    for bad in ["nope", "figure2", "figure2:x", "parity:5:1", "variant:2:0001>3"]:
        with pytest.raises(ParamsError):
            construct(bad)


def test_corpus():
    corpus = coloring_corpus()
    assert len(corpus) >= 200
    assert corpus == coloring_corpus(seed=DEFAULT_SEED)
    seen = set()
    for name, K in corpus:
        g = cached_graph(2, K.params.n, K.params.d)
        assert K.params.d == K.params.n - 1 and K.k == 4
        assert is_proper(g, K)
        seen.add((K.params, K.colors))
    assert len(seen) == len(corpus)
    assert {K.params.n for _, K in corpus} == {3, 4, 5, 6}
