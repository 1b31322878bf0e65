"""Transition edges, robustness and the structure of maximally robust 4-colorings.

An edge (x, y) is a transition edge of a proper coloring K when swapping the
colors of x and y keeps K proper.  Equivalently x is the only neighbor of y
with color K(x), and y is the only neighbor of x with color K(y).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .coloring import Coloring, ColoringError, is_proper, monochromatic_edge, swap_along_edge
from .core import ParamsError
from .graph import HammingGraph, VertexLike, bits


@dataclass(frozen=True)
class TransitionSpace:
    edges: Tuple[Tuple[int, int], ...]
    per_vertex: Tuple[Tuple[int, ...], ...]
    generator: Optional[Tuple[int, ...]] = None

    def __len__(self):
        return len(self.edges)

    def at(self, x: int) -> Tuple[int, ...]:
        return self.per_vertex[x]


@dataclass(frozen=True)
class RobustnessReport:
    transition_edge_count: int
    edge_count: int
    robustness: Fraction

    def __str__(self):
        return f"{self.transition_edge_count}/{self.edge_count}"


@dataclass(frozen=True)
class Contradiction:
    """Propagation failed; ``vertex`` is where the first disagreement appeared."""

    vertex: int
    reason: str

    def __bool__(self):
        return False


def _require_proper(g: HammingGraph, K: Coloring):
    if not is_proper(g, K):
        raise ColoringError("coloring is not proper")


def _edge(g: HammingGraph, x: VertexLike, y: VertexLike) -> Tuple[int, int]:
    x, y = g.index(x), g.index(y)
    if x == y or not g.is_edge(x, y):
        raise ColoringError(f"({g.word(x)}, {g.word(y)}) is not an edge")
    return x, y


def is_transition_edge(g: HammingGraph, K: Coloring, x: VertexLike, y: VertexLike) -> bool:
    """Unique-neighbor criterion: K^{-1}(K(x)) ∩ N(y) = {x} and vice versa."""
    x, y = _edge(g, x, y)
    _require_proper(g, K)
    masks = K.class_masks()
    return (g.neighbor_mask(y) & masks[K[x]]) == 1 << x and (
        g.neighbor_mask(x) & masks[K[y]]
    ) == 1 << y


def swap_keeps_proper(g: HammingGraph, K: Coloring, x: VertexLike, y: VertexLike) -> bool:
    """Definition-level check: swap the two colors and rescan every edge."""
    x, y = _edge(g, x, y)
    _require_proper(g, K)
    return is_proper(g, swap_along_edge(g, K, x, y))


def _unique_neighbors(g: HammingGraph, K: Coloring) -> List[dict]:
    """unique[x][c] = the only neighbor of x with color c, when there is exactly one."""
    masks = K.class_masks()
    live = [c for c in range(K.k) if masks[c]]
    out = []
    for x in range(g.vertex_count):
        nb = g.neighbor_mask(x)
        u = {}
        for c in live:
            m = nb & masks[c]
            if m and not m & (m - 1):
                u[c] = m.bit_length() - 1
        out.append(u)
    return out


def transition_space(g: HammingGraph, K: Coloring) -> TransitionSpace:
    _require_proper(g, K)
    unique = _unique_neighbors(g, K)
    colors = K.colors
    per_vertex = [[] for _ in range(g.vertex_count)]
    edges = []
    for x in range(g.vertex_count):
        for c, y in unique[x].items():
            if y > x and unique[y].get(colors[x]) == x:
                edges.append((x, y))
                per_vertex[x].append(y)
                per_vertex[y].append(x)
    edges.sort()
    pv = tuple(tuple(sorted(p)) for p in per_vertex)
    return TransitionSpace(tuple(edges), pv, _generator_of(g, pv) if g.q == 2 else None)


def _generator_of(g: HammingGraph, per_vertex) -> Optional[Tuple[int, ...]]:
    B = per_vertex[0]
    if not B:
        return None
    for x in range(g.vertex_count):
        if per_vertex[x] != tuple(sorted(x ^ b for b in B)):
            return None
    return B


def robustness(g: HammingGraph, K: Coloring) -> RobustnessReport:
    t = len(transition_space(g, K))
    return RobustnessReport(t, g.edge_count, Fraction(t, g.edge_count))


def generator_set(g: HammingGraph, K: Coloring) -> Optional[Tuple[int, ...]]:
    """B := T_0(K) when T(K) = {(x, x+b) : b in B}; None otherwise (or when T(K) is empty)."""
    if g.q != 2:
        raise ParamsError("generated transition spaces are defined for q = 2 only")
    return transition_space(g, K).generator


def coordinate_generators(n: int, d: int, coords: Sequence[int]) -> Tuple[int, ...]:
    """Predicted B of the binary coordinate coloring: 1 + sum_{j != i} e_{c_j}, one per i."""
    ones = (1 << n) - 1
    full = 0
    for c in coords:
        full |= 1 << (c - 1)
    return tuple(sorted(ones ^ full ^ (1 << (c - 1)) for c in coords))


def coordinate_robustness(n: int, d: int) -> Fraction:
    from math import comb

    return Fraction(n - d + 1, sum(comb(n, i) for i in range(n - d + 1)))


# ------------------------------------------------------------ 4-cycle tilings


def tiles_in_4cycles(g: HammingGraph, M: Iterable[Tuple[int, int]]) -> bool:
    """True iff M splits into vertex-disjoint 4-cycles covering every vertex once."""
    nbrs: List[List[int]] = [[] for _ in range(g.vertex_count)]
    count = 0
    for x, y in M:
        x, y = _edge(g, x, y)
        nbrs[x].append(y)
        nbrs[y].append(x)
        count += 1
    if count == 0 or g.vertex_count % 4:
        return False
    if any(len(set(nb)) != 2 or len(nb) != 2 for nb in nbrs):
        return False
    seen = [False] * g.vertex_count
    components = 0
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        if len(comp) != 4:
            return False
        components += 1
    return components == g.vertex_count // 4


# ------------------------------------------------------------ H_2(n, n-1)


def _require_near_code(g: HammingGraph, K: Optional[Coloring] = None):
    if g.q != 2 or g.d != g.n - 1 or g.n < 3:
        raise ParamsError("this check needs H_2(n, n-1) with n >= 3")
    if K is not None:
        if K.k != 4:
            raise ColoringError("expected a 4-coloring")
        _require_proper(g, K)


def max_robust_check(g: HammingGraph, K: Coloring) -> Tuple[bool, bool, bool]:
    """(generated by two neighbors of 0, rb = 2/(n+1), T(K) tiles in 4-cycles)."""
    _require_near_code(g, K)
    ts = transition_space(g, K)
    B = ts.generator
    neighbors_of_0 = set(g.neighbors(0))
    cond_i = B is not None and len(B) == 2 and set(B) <= neighbors_of_0
    cond_ii = Fraction(len(ts), g.edge_count) == Fraction(2, g.n + 1)
    cond_iii = tiles_in_4cycles(g, ts.edges)
    return cond_i, cond_ii, cond_iii


def transition_degree_bound(g: HammingGraph, K: Coloring) -> int:
    _require_near_code(g, K)
    return max(len(t) for t in transition_space(g, K).per_vertex)


def longest_simple_path(adjacency: Sequence[Sequence[int]]) -> int:
    """Edge count of the longest simple path in a small, sparse graph."""
    best = 0
    N = len(adjacency)
    onpath = [False] * N

    def extend(u: int, length: int):
        nonlocal best
        if length > best:
            best = length
        onpath[u] = True
        for v in adjacency[u]:
            if not onpath[v]:
                extend(v, length + 1)
        onpath[u] = False

    for s in range(N):
        if adjacency[s]:
            extend(s, 0)
    return best


def max_transition_path_length(g: HammingGraph, K: Coloring) -> int:
    _require_near_code(g, K)
    return longest_simple_path(transition_space(g, K).per_vertex)


def propagate_from_cycle(
    g: HammingGraph, v: VertexLike, w: VertexLike, seed: Sequence[int] = (0, 1, 2, 3)
):
    """Spread the coloring of the 4-cycle 0, v, v+w, w over the whole graph.

    Each coset x + {0, v, w, v+w} reached from a colored coset y + U along an
    edge with label s = x + y receives color K(u) = K(u + s + v + w).  Cosets are
    visited in BFS order from 0; the first vertex whose forced color disagrees
    with an earlier assignment is reported in a :class:`Contradiction`.
    """
    _require_near_code(g)
    v, w = g.index(v), g.index(w)
    nb0 = g.neighbors(0)
    if v not in nb0 or w not in nb0 or v == w:
        raise ParamsError("v and w must be distinct neighbors of 0")
    if len(seed) != 4 or len(set(seed)) != 4 or any(not 0 <= c < 4 for c in seed):
        raise ParamsError("seed must assign four distinct colors from [0, 4)")
    z = v ^ w
    U = (0, v, z, w)
    col = [-1] * g.vertex_count
    for u, c in zip(U, seed):
        col[u] = c
    queue = deque([0])
    while queue:
        y = queue.popleft()
        for s in nb0:
            if s in U:
                continue
            x = y ^ s
            fresh = col[x] == -1
            for a in U:
                u = x ^ a
                c = col[u ^ s ^ z]
                if col[u] == -1:
                    col[u] = c
                elif col[u] != c:
                    return Contradiction(u, f"color {col[u]} already assigned, {c} forced from {g.word(y)}")
            if fresh:
                queue.append(x)
    K = Coloring(g.params, 4, tuple(col))
    clash = monochromatic_edge(g, K)
    if clash is not None:
        return Contradiction(clash[0], f"edge {g.word(clash[0])}-{g.word(clash[1])} is monochromatic")
    ts = transition_space(g, K)
    for x in range(g.vertex_count):
        if x ^ v not in ts.per_vertex[x] or x ^ w not in ts.per_vertex[x]:
            return Contradiction(x, "shifted seed cycle is not made of transition edges")
    return K


def four_cycles_through(g: HammingGraph, x: int = 0) -> List[Tuple[int, int, int, int]]:
    """Every 4-cycle (x, a, c, b) with a < b, listed once."""
    out = []
    nb = g.neighbors(x)
    for i, a in enumerate(nb):
        for b in nb[i + 1:]:
            common = g.neighbor_mask(a) & g.neighbor_mask(b) & ~(1 << x)
            for c in bits(common):
                out.append((x, a, c, b))
    return out


def four_cycle_sum_check(g: HammingGraph, cycle: Sequence[VertexLike]) -> bool:
    """x_1 + x_2 = x_3 + x_4 for a 4-cycle x_1 x_2 x_3 x_4 of H_2(n, n-1)."""
    _require_near_code(g)
    c = [g.index(x) for x in cycle]
    if len(c) != 4 or len(set(c)) != 4:
        raise ParamsError("need four distinct vertices")
    for i in range(4):
        if not g.is_edge(c[i], c[(i + 1) % 4]):
            raise ParamsError("consecutive vertices must be adjacent")
    return c[0] ^ c[1] == c[2] ^ c[3]


def generated_and_even(g: HammingGraph, K: Coloring) -> Tuple[bool, bool]:
    from .coloring import is_even

    return generator_set(g, K) is not None, is_even(K)


def transition_json(g: HammingGraph, K: Coloring) -> bytes:
    ts = transition_space(g, K)
    rb = Fraction(len(ts), g.edge_count)
    doc = {
        "edges": [list(e) for e in ts.edges],
        "generator": list(ts.generator) if ts.generator is not None else None,
        "robustness": f"{rb.numerator}/{rb.denominator}",
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def read_transition_json(data) -> dict:
    doc = json.loads(data)
    doc["edges"] = [tuple(e) for e in doc["edges"]]
    num, den = doc["robustness"].split("/")
    doc["robustness"] = Fraction(int(num), int(den))
    return doc
