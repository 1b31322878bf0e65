"""Closed-form independence numbers and chromatic bounds with provenance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from .core import GraphParams, ParamsError, word_space


def _diametric(q: int, n: int, d: int, r: int) -> Fraction:
    """q^(d-1-2r) * sum_{i<=r} C(n-d+1+2r, i) (q-1)^i, kept exact."""
    total = sum(comb(n - d + 1 + 2 * r, i) * (q - 1) ** i for i in range(r + 1))
    e = d - 1 - 2 * r
    return Fraction(total * q ** e) if e >= 0 else Fraction(total, q ** (-e))


def alpha_formula(q: int, n: int, d: int) -> Tuple[int, bool]:
    """Erdős–Ko–Rado value for α(H_q(n,d)) and whether it is exact.

    Binary: Kleitman's exact value.  q >= 3: the Frankl–Tokushige bound with
    r = floor((n-d)/(q-2)), exact when d >= 2r+1, and equal to q^(d-1) (exact)
    when d >= n-q+2.
    """
    GraphParams(q, n, d)
    if q == 2:
        if d % 2:
            return sum(comb(n, i) for i in range((d - 1) // 2 + 1)), True
        return 2 * sum(comb(n - 1, i) for i in range((d - 2) // 2 + 1)), True
    if d >= n - q + 2:
        return q ** (d - 1), True
    r = (n - d) // (q - 2)
    value = int(_diametric(q, n, d, r))  # floor of a nonnegative Fraction
    return value, d >= 2 * r + 1


def diametric_lower_bound(q: int, n: int, d: int) -> int:
    """Largest explicit anticode {wt on n-d+1+2r coordinates <= r} over valid r."""
    return max(int(_diametric(q, n, d, r)) for r in range((d - 1) // 2 + 1))


def exact_alpha(q: int, n: int, d: int) -> Optional[int]:
    """α(H_q(n,d)) when a formula pins it down, else None."""
    value, exact = alpha_formula(q, n, d)
    if exact:
        return value
    if d == 1:
        return 1
    if d == 2:
        return q  # every maximal independent set is a line {v + a e_j}
    low = diametric_lower_bound(q, n, d)
    return value if low == value else None


@dataclass
class BoundReport:
    q: int
    n: int
    d: int
    lower: int
    upper: int
    exact: Optional[int] = None
    rules: List[Tuple[str, str]] = field(default_factory=list)
    reported: List[Tuple[str, str]] = field(default_factory=list)

    def to_json(self) -> bytes:
        doc = {
            "q": self.q,
            "n": self.n,
            "d": self.d,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "rules": [list(r) for r in self.rules],
            "reported": [list(r) for r in self.reported],
        }
        return (json.dumps(doc) + "\n").encode()

    def table(self) -> str:
        lines = [f"H_{self.q}({self.n},{self.d}): {self.lower} <= chi <= {self.upper}"
                 + (f", chi = {self.exact}" if self.exact is not None else "")]
        width = max((len(r[0]) for r in self.rules + self.reported), default=4)
        for name, why in self.rules:
            lines.append(f"  {name:<{width}}  {why}")
        for name, why in self.reported:
            lines.append(f"  {name:<{width}}  (reported, not used) {why}")
        return "\n".join(lines) + "\n"


def _check_clique(q, n, d, words) -> int:
    ws = word_space(q, n)
    words = sorted(set(words))
    for i, x in enumerate(words):
        ws.check(x)
        for y in words[i + 1:]:
            if ws.distance(x, y) < d:
                raise ParamsError("clique certificate contains two words at distance < d")
    return len(words)


def _check_independent(q, n, d, words) -> int:
    ws = word_space(q, n)
    words = sorted(set(words))
    for i, x in enumerate(words):
        ws.check(x)
        for y in words[i + 1:]:
            if ws.distance(x, y) >= d:
                raise ParamsError("independent-set certificate contains an edge")
    return len(words)


def chi_bounds(
    q: int,
    n: int,
    d: int,
    clique: Optional[Sequence[int]] = None,
    independent_set: Optional[Sequence[int]] = None,
) -> BoundReport:
    """Combine every applicable rule into a lower/upper bracket for χ(H_q(n,d))."""
    GraphParams(q, n, d)
    N = q ** n
    top = q ** (n - d + 1)
    rep = BoundReport(q, n, d, lower=1, upper=top)
    rep.rules.append(("coordinate-coloring", f"upper {top}: coordinate colorings are proper q^(n-d+1)-colorings"))

    alpha, alpha_exact = alpha_formula(q, n, d)
    tag = "Kleitman" if q == 2 else "Frankl–Tokushige"
    lower = -(-N // alpha)
    rep.lower = lower
    rep.rules.append(("independence", f"lower {lower} = ceil(q^n / {alpha}); alpha <= {alpha} by {tag}"))

    exact_rules = []
    if d == 1:
        exact_rules.append(("complete-graph", N, "H_q(n,1) is the complete graph on q^n vertices"))
    if q == 2 and d == 2:
        exact_rules.append(("binary-d2", 2 ** (n - 1), "chi(H_2(n,2)) = 2^(n-1)"))
    if d == 2:
        exact_rules.append(("d2-lines", q ** (n - 1), "chi(H_q(n,2)) = q^(n-1): maximal independent sets are lines"))
    if q >= 3 and d >= n - q + 2:
        exact_rules.append(("large-d", top, "chi = q^(n-d+1) for q >= 3 and d >= n-q+2"))
    if q == 2 and d == n - 1:
        exact_rules.append(("near-complete-binary", 4, "chi(H_2(n,n-1)) = 4 (Payan: non-bipartite cube-like graphs need 4 colors)"))
    threshold = -(-N // (top - 1)) if top > 1 else None
    if threshold is not None and alpha < threshold:
        exact_rules.append(("sufficiency", top, f"alpha <= {alpha} < ceil(q^n/(q^(n-d+1)-1)) = {threshold}"))
    if q == 2 and d == n - 2 and 4 <= n <= 7:
        rep.reported.append(("binary-n-2", "chi(H_2(n,n-2)) = 8 for 4 <= n <= 7 was reported from coloring-ideal computations"))

    if clique is not None:
        size = _check_clique(q, n, d, clique)
        rep.rules.append(("clique-certificate", f"lower {size}: verified clique (code with minimum distance >= d)"))
        rep.lower = max(rep.lower, size)
    if independent_set is not None:
        size = _check_independent(q, n, d, independent_set)
        if size > alpha:
            raise ParamsError(f"independent set of size {size} exceeds the bound {alpha}")
        rep.rules.append(("independent-certificate", f"alpha >= {size}: verified anticode"))

    for name, value, why in exact_rules:
        if not rep.lower <= value <= rep.upper:
            raise AssertionError(f"rule {name} gives {value} outside [{rep.lower}, {rep.upper}]")
        rep.rules.append((name, f"exact {value}: {why}"))
        rep.lower = rep.upper = value
    if rep.lower > rep.upper:
        raise AssertionError("inconsistent bounds")
    rep.exact = rep.lower if rep.lower == rep.upper else None
    return rep


def evenness_forced(q: int, n: int, d: int) -> bool:
    """True iff α(H_q(n,d)) = q^(d-1), so every q^(n-d+1)-coloring is even."""
    GraphParams(q, n, d)
    target = q ** (d - 1)
    alpha = exact_alpha(q, n, d)
    if alpha is not None:
        return alpha == target
    # the upper bound is not tight, but the explicit anticode already beats q^(d-1)
    if diametric_lower_bound(q, n, d) > target:
        return False
    raise ParamsError(f"α(H_{q}({n},{d})) is not determined by the available formulas")


def mds_clique(q: int, n: int, d: int) -> Optional[List[int]]:
    """Reed–Solomon clique of size q^(n-d+1) in H_q(n,d), or None when n > q."""
    from .constructions import is_prime, reed_solomon

    if not is_prime(q):
        raise ParamsError(f"q={q} is not prime")
    GraphParams(q, n, d)
    if n > q:
        return None
    words = reed_solomon(q, n, d)
    if words is None:
        return None
    if _check_clique(q, n, d, words) != q ** (n - d + 1):
        raise AssertionError("evaluation code has repeated words")
    return words
