import json
from fractions import Fraction
from itertools import combinations
from math import comb, floor

import pytest

from hamgraph.bounds import (
    alpha_formula,
    chi_bounds,
    diametric_lower_bound,
    evenness_forced,
    exact_alpha,
    mds_clique,
)
from hamgraph.constructions import independent_set_J
from hamgraph.core import ParamsError, valid_params, word_space
from hamgraph.graph import cached_graph
from hamgraph.search import SearchConfig, chromatic_number, max_independent_set
from oracles import adjacency, chromatic, max_independent_size


def test_alpha_examples():
    assert alpha_formula(2, 4, 3) == (5, True)
    value, exact = alpha_formula(3, 5, 3)
    assert value == 11 and not exact
    assert alpha_formula(2, 3, 2) == (2, True)


def test_alpha_formula_matches_definition():
    # q >= 3 branch evaluated straight from the displayed formula with exact rationals
    for p in valid_params(10 ** 6, q_values=range(3, 8)):
        q, n, d = p.q, p.n, p.d
        value, exact = alpha_formula(q, n, d)
        if d >= n - q + 2:
            assert (value, exact) == (q ** (d - 1), True)
            continue
        r = (n - d) // (q - 2)
        raw = Fraction(q) ** (d - 1 - 2 * r) * sum(comb(n - d + 1 + 2 * r, i) * (q - 1) ** i for i in range(r + 1))
        assert value == floor(raw)
        assert exact == (d >= 2 * r + 1)


@pytest.mark.parametrize("p", [p for p in valid_params(64)], ids=str)
def test_alpha_against_brute_force(p):
    alpha = max_independent_size(adjacency(p.q, p.n, p.d))
    value, exact = alpha_formula(p.q, p.n, p.d)
    assert alpha <= value
    if exact:
        assert alpha == value
    ea = exact_alpha(p.q, p.n, p.d)
    if ea is not None:
        assert ea == alpha
    assert diametric_lower_bound(p.q, p.n, p.d) <= alpha


def test_chi_rules():
    assert chi_bounds(2, 3, 2).exact == 4
    assert chi_bounds(2, 4, 2).exact == 8
    assert chi_bounds(3, 3, 2).exact == 9
    assert chi_bounds(3, 4, 3).exact == 9
    assert chi_bounds(4, 3, 1).exact == 64
    assert chi_bounds(2, 5, 4).exact == 4
    rep = chi_bounds(2, 6, 4)
    assert (rep.lower, rep.upper, rep.exact) == (6, 8, None)
    assert [name for name, _ in rep.reported] == ["binary-n-2"]
    assert all(name != "binary-n-2" for name, _ in rep.rules)


def test_bound_report_json():
    rep = chi_bounds(2, 4, 3)
    doc = json.loads(rep.to_json())
    assert doc["exact"] == 4 and doc["lower"] == 4 and doc["upper"] == 4
    assert all(len(r) == 2 for r in doc["rules"])
    assert "near-complete-binary" in rep.table()


def test_sufficiency_rule():
    for p in valid_params(4096):
        q, n, d = p.q, p.n, p.d
        top = q ** (n - d + 1)
        rep = chi_bounds(q, n, d)
        fired = "sufficiency" in [name for name, _ in rep.rules]
        expected = top > 1 and alpha_formula(q, n, d)[0] < -(-q ** n // (top - 1))
        assert fired == expected
        if fired:
            assert rep.exact == top
    assert "sufficiency" in [name for name, _ in chi_bounds(2, 4, 3).rules]


def test_certificates():
    clique = mds_clique(3, 3, 2)
    rep = chi_bounds(3, 3, 2, clique=clique)
    assert any(name == "clique-certificate" for name, _ in rep.rules)
    with pytest.raises(ParamsError):
        chi_bounds(2, 3, 2, clique=[0, 1])
    with pytest.raises(ParamsError):
        chi_bounds(2, 3, 2, independent_set=[0, 7])
    rep = chi_bounds(3, 5, 3, independent_set=independent_set_J())
    assert any(name == "independent-certificate" for name, _ in rep.rules)


def test_chi_bounds_against_brute_force():
    for p in valid_params(16):
        rep = chi_bounds(p.q, p.n, p.d)
        chi = chromatic(adjacency(p.q, p.n, p.d))
        assert rep.lower <= chi <= rep.upper
        if rep.exact is not None:
            assert rep.exact == chi


@pytest.mark.parametrize("p", sorted(set(valid_params(64)) | {p for p in valid_params(81) if p.q == 3}), ids=str)
def test_chi_bounds_against_search(p):
    rep = chi_bounds(p.q, p.n, p.d)
    if rep.exact is None:
        pytest.skip("no exact rule")
    res = chromatic_number(cached_graph(p.q, p.n, p.d), SearchConfig(use_bounds=False, canonical_witness=False, time_budget=60))
    assert res.proven and res.value == rep.exact


def test_evenness_forced():
    assert evenness_forced(3, 4, 3)
    assert not evenness_forced(2, 4, 3)
    assert evenness_forced(3, 3, 2)
    for q in (3, 4, 5):
        assert evenness_forced(q, 3, 2)  # every q^(n-1)-coloring of H_q(n,2) is even


def test_mds_clique():
    ws = word_space(5, 4)
    words = mds_clique(5, 4, 3)
    assert len(words) == 25
    assert all(ws.distance(x, y) >= 3 for x, y in combinations(words, 2))
    assert len(mds_clique(3, 3, 2)) == 9
    assert mds_clique(3, 4, 2) is None
    with pytest.raises(ParamsError):
        mds_clique(4, 3, 2)


def test_j_attains_alpha_bound():
    J = independent_set_J()
    ws = word_space(3, 5)
    assert all(ws.distance(x, y) < 3 for x, y in combinations(J, 2))
    assert len(J) == alpha_formula(3, 5, 3)[0]
    assert max_independent_set(cached_graph(3, 5, 3)).value == 11
