from itertools import product

import pytest

from hamgraph.bounds import alpha_formula, chi_bounds, mds_clique
from hamgraph.coloring import canonical_partition, is_proper
from hamgraph.constructions import figure2
from hamgraph.core import ParamsError, valid_params
from hamgraph.graph import cached_graph
from hamgraph.search import (
    EXHAUSTED,
    PROVEN,
    SearchConfig,
    chromatic_number,
    enumerate_colorings,
    heuristic_independent_set,
    is_clique,
    is_independent,
    is_k_colorable,
    max_clique,
    max_independent_set,
    partition_orbits,
)
from oracles import adjacency, chromatic, coverable, max_independent_size, partitions_into_independent_sets, proper

SMALL = valid_params(64)
# refuting chi-1 without the independence bound is exponential for H_2(6,3)
NO_BOUNDS = [p for p in SMALL if p.vertex_count <= 32 or p.q > 2]


def g_(q, n, d):
    return cached_graph(q, n, d)


def lex_least_independent(adj, size, clique=False):
    """Lex-least vertex set of the given size; depth-first in increasing order."""
    N = len(adj)
    nbrs = [set(a) for a in adj]
    compatible = [{v for v in range(N) if v != u and ((v in nbrs[u]) == clique)} for u in range(N)]

    def extend(chosen, cand):
        if len(chosen) == size:
            return tuple(chosen)
        for i, v in enumerate(cand):
            if len(chosen) + len(cand) - i < size:
                return None
            found = extend(chosen + [v], [w for w in cand[i + 1:] if w in compatible[v]])
            if found:
                return found
        return None

    return extend([], list(range(N)))


def complement(adj):
    N = len(adj)
    return [[v for v in range(N) if v != u and v not in set(adj[u])] for u in range(N)]


def test_mis_examples():
    assert max_independent_set(g_(2, 4, 3)).value == 5
    for q, n in [(2, 3), (3, 2), (4, 3)]:
        assert max_independent_set(g_(q, n, 1)).value == 1
    res = max_independent_set(g_(3, 5, 3))
    assert res.value == 11 and res.proven


def test_clique_examples():
    res = max_clique(g_(2, 3, 2))
    assert res.value == 4
    assert set(res.witness) == {0, 3, 5, 6}  # the even-weight code
    assert max_clique(g_(2, 4, 3)).value == 2
    res = max_clique(g_(3, 3, 2))
    assert res.value == 9 == len(mds_clique(3, 3, 2))


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_set_solvers_against_oracles(p):
    g = g_(p.q, p.n, p.d)
    adj = adjacency(p.q, p.n, p.d)
    a = max_independent_set(g)
    w = max_clique(g)
    assert a.value == max_independent_size(adj)
    assert w.value == max_independent_size(complement(adj))
    assert is_independent(g, a.witness) and is_clique(g, w.witness)
    assert a.proven and w.proven and a.canonical and w.canonical
    if g.vertex_count <= 32:
        assert a.witness == lex_least_independent(adj, a.value)
        assert w.witness == lex_least_independent(adj, w.value, clique=True)


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_symmetry_and_thread_invariance(p):
    g = g_(p.q, p.n, p.d)
    configs = [SearchConfig(), SearchConfig(symmetry_breaking=False), SearchConfig(thread_count=2)]
    for solver in (max_independent_set, max_clique, chromatic_number):
        results = [solver(g, cfg) for cfg in configs]
        assert len({(r.value, r.status) for r in results}) == 1
        witnesses = [r.witness for r in results]
        assert all(w == witnesses[0] for w in witnesses)


@pytest.mark.parametrize("p", NO_BOUNDS, ids=str)
def test_colorability_without_bounds(p):
    g = g_(p.q, p.n, p.d)
    chi = chromatic_number(g).value
    for cfg in (SearchConfig(use_bounds=False), SearchConfig(use_bounds=False, symmetry_breaking=False)):
        yes = is_k_colorable(g, chi, cfg)
        assert yes.colorable and is_proper(g, yes.witness)
        if chi > 1:
            assert is_k_colorable(g, chi - 1, cfg).colorable is False


def test_colorability_examples():
    g = g_(2, 3, 2)
    assert is_k_colorable(g, 3).colorable is False
    res = is_k_colorable(g, 4)
    rows = {canonical_partition(figure2(i).coloring) for i in range(1, 10)}
    assert res.colorable and canonical_partition(res.witness) in rows
    res = is_k_colorable(g_(2, 4, 2), 7)
    assert res.colorable is False and res.nodes == 0 and "ceil(16/2)" in res.reason


def test_lex_least_coloring_matches_brute_force():
    for q, n, d in [(2, 3, 2), (3, 2, 2)]:
        g = g_(q, n, d)
        adj = adjacency(q, n, d)
        res = chromatic_number(g)
        k = res.value
        assert k == chromatic(adj)
        least = next(c for c in product(range(k), repeat=g.vertex_count) if proper(adj, c))
        assert res.witness.colors == least
        assert res.canonical


def test_chromatic_examples():
    assert chromatic_number(g_(2, 4, 3)).value == 4
    assert chromatic_number(g_(3, 3, 2)).value == 9
    assert chromatic_number(g_(2, 4, 2)).value == 8


def test_omega_chi_sandwich():
    for p in valid_params(128):
        g = g_(p.q, p.n, p.d)
        chi = chromatic_number(g, SearchConfig(time_budget=5))
        if not chi.proven:
            continue
        omega = max_clique(g).value
        assert omega <= chi.value <= p.q ** (p.n - p.d + 1)
        assert is_proper(g, chi.witness) and chi.witness.k == chi.value


def test_alpha_matches_exact_formula_small():
    for p in valid_params(128):
        value, exact = alpha_formula(p.q, p.n, p.d)
        res = max_independent_set(g_(p.q, p.n, p.d))
        assert res.value <= value
        if exact:
            assert res.value == value


def test_budget_exhaustion_reports_bracket():
    res = chromatic_number(g_(2, 7, 5), SearchConfig(time_budget=0.3))
    assert res.status == EXHAUSTED and not res.proven
    assert res.lower <= res.upper == 8
    assert is_proper(g_(2, 7, 5), res.witness)
    col = is_k_colorable(g_(2, 7, 5), 6, SearchConfig(time_budget=0.3))
    assert col.status == EXHAUSTED and col.colorable is None
    big = max_independent_set(g_(2, 14, 7), SearchConfig(time_budget=0.5))
    assert big.status == EXHAUSTED and big.lower <= big.upper
    assert is_independent(g_(2, 14, 7), big.witness)


def test_guards():
    with pytest.raises(ParamsError):
        max_independent_set(g_(2, 17, 5))
    with pytest.raises(ParamsError):
        enumerate_colorings(g_(2, 9, 5), 4)
    with pytest.raises(ParamsError):
        SearchConfig(thread_count=0)


def test_enumeration_examples():
    g = g_(2, 3, 2)
    parts = enumerate_colorings(g, 4)
    assert len(parts) == 9
    assert enumerate_colorings(g, 3) == []
    assert partition_orbits(g, parts) == 2
    for q, n in [(2, 3), (3, 2)]:
        N = q ** n
        parts = enumerate_colorings(g_(q, n, 1), N)
        assert len(parts) == 1 and all(len(c) == 1 for c in parts[0].classes)


@pytest.mark.parametrize("q,n,d,k", [(2, 3, 2, 4), (2, 3, 2, 5), (3, 2, 2, 3), (3, 2, 2, 4), (2, 4, 3, 4)])
def test_enumeration_against_brute_force(q, n, d, k):
    adj = adjacency(q, n, d)
    if k ** len(adj) > 5 * 10 ** 6:
        pytest.skip("brute force too large")
    expected = partitions_into_independent_sets(adj, k)
    assert [p.classes for p in enumerate_colorings(g_(q, n, d), k)] == expected


def test_enumeration_h243_count_is_stable():
    g = g_(2, 4, 3)
    parts = enumerate_colorings(g, 4)
    assert parts == sorted(parts, key=lambda p: p.classes)
    assert len(parts) == len(set(parts))
    assert parts == enumerate_colorings(g, 4, SearchConfig(symmetry_breaking=False))


def test_heuristic_is_deterministic():
    adj = g_(2, 8, 5).adj
    a = heuristic_independent_set(adj, seed=5)
    assert a == heuristic_independent_set(adj, seed=5)
    assert is_independent(g_(2, 8, 5), a)


def test_statuses_are_strings():
    assert PROVEN == "proven" and EXHAUSTED == "budget-exhausted"
    assert chi_bounds(2, 3, 2).exact == chromatic_number(g_(2, 3, 2)).value


@pytest.mark.parametrize("q,n,d", [(2, 3, 2), (2, 4, 3), (3, 2, 2), (2, 4, 2), (2, 5, 3), (2, 5, 4)])
def test_chromatic_number_against_cover_oracle(q, n, d):
    adj = adjacency(q, n, d)
    res = chromatic_number(g_(q, n, d))
    assert res.proven
    assert proper(adj, res.witness.colors) and len(set(res.witness.colors)) == res.value
    assert coverable(adj, res.value) and not coverable(adj, res.value - 1)


def test_h253_needs_seven_colors():
    g = g_(2, 5, 3)
    assert chromatic_number(g).value == 7
    for cfg in (SearchConfig(), SearchConfig(symmetry_breaking=False), SearchConfig(use_bounds=False)):
        assert is_k_colorable(g, 6, cfg).colorable is False
        assert is_k_colorable(g, 7, cfg).colorable is True
