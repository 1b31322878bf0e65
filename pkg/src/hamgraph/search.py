"""Exact solvers: maximum independent set, maximum clique, k-colorability,
chromatic number and exhaustive enumeration of colorings.

Independent sets and cliques share one branch-and-bound kernel over bitsets.
Its bound is a greedy clique cover of the candidate set.  With symmetry
breaking on, the kernel puts vertex 0 into the solution (translations act
transitively).  It then does orbital branching under the coordinate
permutations that fix the chosen words: either the representative of an orbit
joins the solution, or the whole orbit leaves the candidate set.

Colorings use DSATUR backtracking.  A greedy clique is pre-colored and new
colors are introduced in increasing order.
"""

from __future__ import annotations

import multiprocessing as mp
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from .bounds import alpha_formula, chi_bounds
from .coloring import Coloring, Partition, coordinate_coloring, is_proper
from .constructions import DEFAULT_SEED
from .core import GraphParams, ParamsError
from .graph import HammingGraph, adjacency_masks, bits, cached_graph

SEARCH_LIMIT = 2 ** 16
ENUMERATION_LIMIT = 256
CANONICAL_LIMIT = 64

PROVEN = "proven"
EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchConfig:
    time_budget: Optional[float] = None
    thread_count: int = 1
    symmetry_breaking: bool = True
    # consult closed-form bounds (chromatic and colorability); off for cross-checks
    use_bounds: bool = True
    # recompute the lexicographically least optimum for graphs up to CANONICAL_LIMIT vertices
    canonical_witness: bool = True
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not isinstance(self.thread_count, int) or self.thread_count < 1:
            raise ParamsError("thread_count must be a positive integer")
        if self.time_budget is not None and self.time_budget < 0:
            raise ParamsError("time budget must be nonnegative")

    def deadline(self) -> Optional[float]:
        return None if self.time_budget is None else time.time() + self.time_budget


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: object
    status: str
    lower: int
    upper: int
    nodes: int = 0
    canonical: bool = False

    @property
    def proven(self) -> bool:
        return self.status == PROVEN


class BudgetExhausted(Exception):
    pass


def _guard(g: HammingGraph, limit: int = SEARCH_LIMIT):
    if g.vertex_count > limit:
        raise ParamsError(f"{g.params} has {g.vertex_count} vertices; the limit is {limit}")


def _adjacency(g: HammingGraph) -> List[int]:
    if g.adj is not None:
        return g.adj
    return adjacency_masks(g.q, g.n, g.d)


def _complement(adj: List[int]) -> List[int]:
    full = (1 << len(adj)) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(adj)]


# ====================================================================== frames


@dataclass(frozen=True)
class Frame:
    """Coordinates in which the symmetry group acts by permuting positions.

    The search runs on relabeled vertices: vertex x of the graph becomes
    ``relabel[x]`` (None means the identity).  ``masks[v][s-1]`` is the set of
    positions where the label of search vertex v has digit s (s = 1..q-1).  A
    folded frame identifies each label with its complement, which is how the
    folded cube stores its vertices.
    """

    m: int
    masks: Tuple[Tuple[int, ...], ...]
    folded: bool = False
    relabel: Optional[Tuple[int, ...]] = None


def standard_frame(g: HammingGraph) -> Frame:
    q, n = g.q, g.n
    masks = []
    for x in range(g.vertex_count):
        dig = g.words.digits(x)
        masks.append(tuple(sum(1 << i for i in range(n) if dig[i] == s) for s in range(1, q)))
    return Frame(n, tuple(masks))


def folded_frame(g: HammingGraph) -> Frame:
    """H_2(n,n-1) with n even is the folded (n+1)-cube.

    The linear map sending f_i to e_i (and hence 1 to the all-ones word) turns
    the neighbor set {f_1..f_n, 1} into {e_1..e_n, 1}; on words it is
    x -> x for even weight and x -> x + 1 for odd weight.  In the new
    coordinates the label y stands for the pair {(y, 0), (y + 1, 1)} of
    Z_2^(n+1), on which all n+1 positions are interchangeable.
    """
    n = g.n
    if g.q != 2 or g.d != n - 1 or n % 2:
        raise ParamsError("the folded frame needs H_2(n, n-1) with n even")
    ones = (1 << n) - 1
    relabel = tuple(x if x.bit_count() % 2 == 0 else x ^ ones for x in range(g.vertex_count))
    return Frame(n + 1, tuple((y,) for y in range(g.vertex_count)), folded=True, relabel=relabel)


def best_frame(g: HammingGraph) -> Frame:
    if g.q == 2 and g.d == g.n - 1 and g.n % 2 == 0:
        return folded_frame(g)
    return standard_frame(g)


def _relabeled(adj: List[int], relabel: Sequence[int]) -> List[int]:
    out = [0] * len(adj)
    for x, m in enumerate(adj):
        row = 0
        for y in bits(m):
            row |= 1 << relabel[y]
        out[relabel[x]] = row
    return out


# ============================================================ set kernel


class _SetSearch:
    """Maximum independent set in the graph given by bitset rows ``adj``."""

    def __init__(self, adj: List[int], frame: Optional[Frame], deadline: Optional[float] = None):
        self.adj = adj
        self.N = len(adj)
        self.frame = frame
        self.deadline = deadline
        self.best = 0
        self.best_set: Tuple[int, ...] = ()
        self.nodes = 0

    # -- bound
    def cover_bound(self, S: int) -> int:
        """Number of cliques in a greedy clique cover of S."""
        adj = self.adj
        count = 0
        while S:
            low = S & -S
            S ^= low
            cand = adj[low.bit_length() - 1] & S
            while cand:
                u = cand & -cand
                S ^= u
                cand &= adj[u.bit_length() - 1]
            count += 1
        return count

    # -- symmetry
    def orbits(self, S: int, blocks: Tuple[int, ...]):
        masks = self.frame.masks
        groups = {}
        if self.frame.folded:
            sizes = [b.bit_count() for b in blocks]
            while S:
                low = S & -S
                S ^= low
                v = low.bit_length() - 1
                lab = masks[v][0]
                k1 = tuple((lab & b).bit_count() for b in blocks)
                k2 = tuple(z - c for z, c in zip(sizes, k1))
                key = k1 if k1 <= k2 else k2
                if key in groups:
                    groups[key].append(v)
                else:
                    groups[key] = [v]
        else:
            while S:
                low = S & -S
                S ^= low
                v = low.bit_length() - 1
                key = tuple((m & b).bit_count() for b in blocks for m in masks[v])
                if key in groups:
                    groups[key].append(v)
                else:
                    groups[key] = [v]
        return groups.values()

    def refine(self, blocks: Tuple[int, ...], v: int) -> Tuple[int, ...]:
        out = []
        for b in blocks:
            rest = b
            for m in self.frame.masks[v]:
                part = b & m
                if part:
                    out.append(part)
                rest &= ~m
            if rest:
                out.append(rest)
        return tuple(out)

    # -- branching
    def choose(self, S: int, blocks):
        """Orbit whose representative has most neighbors in S; larger orbit on ties."""
        adj = self.adj
        if blocks is None or len(blocks) == self.frame.m:
            best_v, best_deg = -1, -1
            s = S
            while s:
                low = s & -s
                s ^= low
                v = low.bit_length() - 1
                deg = (adj[v] & S).bit_count()
                if deg > best_deg:
                    best_v, best_deg = v, deg
            return best_v, 1 << best_v
        best_key, best_orbit = None, None
        for orbit in self.orbits(S, blocks):
            key = ((adj[orbit[0]] & S).bit_count(), len(orbit), -orbit[0])
            if best_key is None or key > best_key:
                best_key, best_orbit = key, orbit
        mask = 0
        for u in best_orbit:
            mask |= 1 << u
        return best_orbit[0], mask

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and time.time() > self.deadline:
            raise BudgetExhausted

    def run(self, S: int, chosen: Tuple[int, ...], blocks):
        """Explore one subproblem; improves self.best / self.best_set."""
        adj = self.adj
        size = len(chosen)
        while True:
            self.tick()
            if not S:
                if size > self.best:
                    self.best = size
                    self.best_set = chosen
                return
            if size + self.cover_bound(S) <= self.best:
                return
            v, orbit = self.choose(S, blocks)
            self.run(S & ~adj[v] & ~(1 << v), chosen + (v,),
                     self.refine(blocks, v) if blocks is not None else None)
            S &= ~orbit

    def root(self, symmetry: bool):
        """(S, chosen, blocks) of the root problem."""
        full = (1 << self.N) - 1
        if symmetry and self.frame is not None:
            start = 0
            return full & ~self.adj[start] & ~(1 << start), (start,), self.refine(((1 << self.frame.m) - 1,), start)
        return full, (), None

    def top_branches(self, S, chosen, blocks, prune_at: int):
        """The include-children along the root's exclusion chain, in search order."""
        out = []
        size = len(chosen)
        while S:
            if size + self.cover_bound(S) <= prune_at:
                break
            v, orbit = self.choose(S, blocks)
            out.append((S & ~self.adj[v] & ~(1 << v), chosen + (v,),
                        self.refine(blocks, v) if blocks is not None else None))
            S &= ~orbit
        return out


def _greedy_fill(adj, sol: int, cand: int, order) -> int:
    for v in order:
        if cand >> v & 1:
            sol |= 1 << v
            cand &= ~adj[v] & ~(1 << v)
    return sol


def heuristic_independent_set(
    adj: List[int], seed: int = DEFAULT_SEED, rounds: int = 300, deadline: Optional[float] = None
) -> Tuple[int, ...]:
    """Iterated local search with (1,2)-swaps, deterministic for a fixed seed.

    Stops early once ``deadline`` passes; the best set so far is returned.
    """
    N = len(adj)
    if N == 0:
        return ()
    rng = random.Random(seed)
    full = (1 << N) - 1
    order = sorted(range(N), key=lambda v: (adj[v].bit_count(), v))
    sol = _greedy_fill(adj, 0, full, order)

    def improve(sol: int) -> int:
        while True:
            if deadline is not None and time.time() > deadline:
                return sol
            one = two = 0
            for s in bits(sol):
                m = adj[s]
                two |= one & m
                one |= m
            free = full & ~one & ~sol
            if free:
                sol = _greedy_fill(adj, sol, free, bits(free))
                continue
            tight = one & ~two & ~sol
            swapped = False
            for x in bits(sol):
                c = tight & adj[x]
                if c & (c - 1) == 0:
                    continue
                for u in bits(c):
                    rest = c & ~adj[u] & ~(1 << u)
                    if rest:
                        w = (rest & -rest).bit_length() - 1
                        sol = (sol & ~(1 << x)) | (1 << u) | (1 << w)
                        swapped = True
                        break
                if swapped:
                    break
            if not swapped:
                return sol

    sol = improve(sol)
    best = sol
    for _ in range(rounds):
        if deadline is not None and time.time() > deadline:
            break
        outside = bits(full & ~sol)
        if not outside:
            break
        for _ in range(1 + (rng.random() < 0.5)):
            u = outside[rng.randrange(len(outside))]
            sol = (sol & ~adj[u]) | (1 << u)
        sol = improve(sol)
        if sol.bit_count() > best.bit_count():
            best = sol
        elif sol.bit_count() < best.bit_count() - 1 or rng.random() < 0.1:
            sol = best
    return tuple(bits(best))


def _apply_lower_bound(search: _SetSearch, witness: Sequence[int]):
    search.best = len(witness)
    search.best_set = tuple(witness)


# -- worker plumbing ----------------------------------------------------------

_WORKER_CACHE = {}


def _problem(params: Tuple[int, int, int], kind: str, symmetry: bool):
    key = (params, kind, symmetry)
    if key not in _WORKER_CACHE:
        g = cached_graph(*params)
        adj = _adjacency(g)
        if kind == "clique":
            adj = _complement(adj)
        frame = best_frame(g) if symmetry else None
        if frame is not None and frame.relabel is not None:
            adj = _relabeled(adj, frame.relabel)
        _WORKER_CACHE[key] = (adj, frame)
    return _WORKER_CACHE[key]


def _set_worker(args):
    params, kind, symmetry, branch, lower, deadline = args
    adj, frame = _problem(params, kind, symmetry)
    s = _SetSearch(adj, frame, deadline)
    s.best = lower
    try:
        s.run(*branch)
        return s.best, s.best_set if s.best > lower else None, s.nodes, False
    except BudgetExhausted:
        return s.best, s.best_set if s.best > lower else None, s.nodes, True


def _pool(threads: int):
    try:
        ctx = mp.get_context("fork")
    except ValueError:
        ctx = mp.get_context()
    return ProcessPoolExecutor(max_workers=threads, mp_context=ctx)


def _max_set(g: HammingGraph, cfg: SearchConfig, kind: str) -> SearchResult:
    _guard(g)
    deadline = cfg.deadline()
    params = (g.q, g.n, g.d)
    adj, frame = _problem(params, kind, cfg.symmetry_breaking)
    search = _SetSearch(adj, frame, deadline)
    seed_set = heuristic_independent_set(adj, cfg.seed, rounds=min(300, 4 * g.vertex_count), deadline=deadline)
    _apply_lower_bound(search, seed_set)
    root = search.root(cfg.symmetry_breaking)
    upper = len(root[1]) + search.cover_bound(root[0])
    exhausted = False
    nodes = 0
    if cfg.thread_count == 1:
        try:
            S, chosen, blocks = root
            size = len(chosen)
            while S:
                search.tick()
                if size + search.cover_bound(S) <= search.best:
                    break
                v, orbit = search.choose(S, blocks)
                search.run(S & ~adj[v] & ~(1 << v), chosen + (v,),
                           search.refine(blocks, v) if blocks is not None else None)
                S &= ~orbit
            else:
                if size > search.best:
                    search.best, search.best_set = size, chosen
        except BudgetExhausted:
            exhausted = True
        nodes = search.nodes
        best, best_set = search.best, search.best_set
    else:
        lower = search.best
        branches = search.top_branches(*root, prune_at=lower)
        best, best_set = lower, search.best_set
        if not root[0] and len(root[1]) > best:
            best, best_set = len(root[1]), root[1]
        jobs = [(params, kind, cfg.symmetry_breaking, b, lower, deadline) for b in branches]
        with _pool(cfg.thread_count) as pool:
            results = list(pool.map(_set_worker, jobs))
        for value, witness, count, ran_out in results:
            nodes += count
            exhausted |= ran_out
            if witness is not None and value > best:
                best, best_set = value, witness
    if frame is not None and frame.relabel is not None:
        back = {y: x for x, y in enumerate(frame.relabel)}
        best_set = [back[y] for y in best_set]
    witness = tuple(sorted(best_set))
    status = EXHAUSTED if exhausted else PROVEN
    canonical = False
    if not exhausted and cfg.canonical_witness and g.vertex_count <= CANONICAL_LIMIT:
        witness = _lex_least_set(_problem(params, kind, False)[0], best)
        canonical = True
    return SearchResult(best, witness, status, best, best if not exhausted else max(best, upper), nodes, canonical)


def _has_independent_set(adj, S: int, target: int) -> bool:
    """Decision version without symmetry: an independent subset of S of size >= target?"""
    if target <= 0:
        return True
    s = _SetSearch(adj, None)
    s.best = target - 1

    class Found(Exception):
        pass

    def run(S, size):
        while True:
            if size >= target:
                raise Found
            if not S or size + s.cover_bound(S) < target:
                return
            low = S & -S
            v = low.bit_length() - 1
            run(S & ~adj[v] & ~low, size + 1)
            S ^= low

    try:
        run(S, 0)
    except Found:
        return True
    return False


def _lex_least_set(adj: List[int], size: int) -> Tuple[int, ...]:
    """The lexicographically least independent set with ``size`` elements."""
    N = len(adj)
    R = (1 << N) - 1
    out = []
    remaining = size
    while remaining:
        for v in bits(R):
            rest = R & ~adj[v] & ~((1 << (v + 1)) - 1)
            if _has_independent_set(adj, rest, remaining - 1):
                out.append(v)
                R = rest
                remaining -= 1
                break
        else:
            raise AssertionError("no independent set of the claimed size")
    return tuple(out)


def max_independent_set(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """α(g) with a witness anticode (independent set)."""
    return _max_set(g, cfg, "mis")


def max_clique(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """ω(g) with a witness code (pairwise distance >= d)."""
    return _max_set(g, cfg, "clique")


def is_independent(g: HammingGraph, vertices: Sequence[int]) -> bool:
    vs = sorted(set(vertices))
    return all(g.words.distance(x, y) < g.d for i, x in enumerate(vs) for y in vs[i + 1:])


def is_clique(g: HammingGraph, vertices: Sequence[int]) -> bool:
    vs = sorted(set(vertices))
    return all(g.words.distance(x, y) >= g.d for i, x in enumerate(vs) for y in vs[i + 1:])


# ============================================================ coloring


def greedy_clique(adj: List[int], start: int = 0) -> List[int]:
    clique = [start]
    cand = adj[start]
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique.append(v)
        cand &= adj[v]
    return clique


class _Colorer:
    """DSATUR backtracking for a proper coloring with at most k colors."""

    def __init__(self, adj: List[int], k: int, deadline: Optional[float] = None):
        self.N = len(adj)
        self.k = k
        self.nbrs = [bits(m) for m in adj]
        self.color = [-1] * self.N
        self.forb = [[0] * k for _ in range(self.N)]
        self.sat = [0] * self.N
        self.colored = 0
        self.deadline = deadline
        self.nodes = 0

    def assign(self, v: int, c: int) -> bool:
        """Color v; returns False when some uncolored neighbor loses every color."""
        self.color[v] = c
        self.colored += 1
        ok = True
        k = self.k
        for u in self.nbrs[v]:
            f = self.forb[u]
            if f[c] == 0:
                self.sat[u] += 1
                if self.sat[u] == k and self.color[u] < 0:
                    ok = False
            f[c] += 1
        return ok

    def unassign(self, v: int):
        c = self.color[v]
        self.color[v] = -1
        self.colored -= 1
        for u in self.nbrs[v]:
            f = self.forb[u]
            f[c] -= 1
            if f[c] == 0:
                self.sat[u] -= 1

    def pick(self) -> int:
        """Highest saturation, then lowest index (degrees are all equal)."""
        best, best_sat = -1, -1
        color, sat = self.color, self.sat
        for v in range(self.N):
            if color[v] < 0 and sat[v] > best_sat:
                best, best_sat = v, sat[v]
        return best

    def options(self, v: int, used: int) -> List[int]:
        f = self.forb[v]
        return [c for c in range(min(used + 1, self.k)) if f[c] == 0]

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 63 and time.time() > self.deadline:
            raise BudgetExhausted

    def solve(self, used: int) -> bool:
        self.tick()
        if self.colored == self.N:
            return True
        v = self.pick()
        for c in self.options(v, used):
            if self.assign(v, c) and self.solve(max(used, c + 1)):
                return True
            self.unassign(v)
        return False

    def preset(self, pairs) -> Optional[int]:
        """Apply fixed assignments; returns colors used, or None on a clash."""
        used = 0
        for v, c in pairs:
            if self.forb[v][c] or self.color[v] >= 0:
                return None
            alive = self.assign(v, c)
            used = max(used, c + 1)
            if not alive:
                return None
        return used

    def expand(self, used: int):
        """Children (v, c, used') of the current node in search order."""
        if self.colored == self.N:
            return []
        v = self.pick()
        return [(v, c, max(used, c + 1)) for c in self.options(v, used)]


def _colorer_prefix(adj, k, symmetric: bool):
    if symmetric:
        clique = greedy_clique(adj)
        if len(clique) > k:
            return None
        return [(v, i) for i, v in enumerate(clique)]
    return []


def _color_worker(args):
    params, k, prefix, deadline = args
    g = cached_graph(*params)
    col = _Colorer(_adjacency(g), k, deadline)
    used = col.preset(prefix)
    if used is None:
        return None, col.nodes, False
    try:
        if col.solve(used):
            return tuple(col.color), col.nodes, False
        return None, col.nodes, False
    except BudgetExhausted:
        return None, col.nodes, True


def _raise_recursion(N: int):
    need = 3 * N + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


@dataclass(frozen=True)
class Colorability:
    colorable: Optional[bool]
    witness: Optional[Coloring]
    status: str
    nodes: int = 0
    reason: str = ""
    canonical: bool = False

    def __bool__(self):
        return bool(self.colorable)


def is_k_colorable(g: HammingGraph, k: int, cfg: SearchConfig = SearchConfig()) -> Colorability:
    _guard(g)
    N = g.vertex_count
    adj = _adjacency(g)
    if k < 1:
        return Colorability(False, None, PROVEN, 0, "no colors")
    if k >= N:
        return Colorability(True, Coloring(g.params, k, tuple(range(N))), PROVEN, 0, "one color per vertex")
    if cfg.use_bounds:
        alpha, _ = alpha_formula(g.q, g.n, g.d)
        if -(-N // alpha) > k:
            return Colorability(False, None, PROVEN, 0, f"ceil({N}/{alpha}) > {k}")
    prefix = _colorer_prefix(adj, k, cfg.symmetry_breaking)
    if prefix is None:
        return Colorability(False, None, PROVEN, 0, f"clique larger than {k}")
    _raise_recursion(N)
    deadline = cfg.deadline()
    colors, nodes, exhausted = None, 0, False
    if cfg.thread_count == 1:
        colors, nodes, exhausted = _color_worker(((g.q, g.n, g.d), k, prefix, deadline))
    else:
        tasks = _color_frontier(adj, k, prefix, 4 * cfg.thread_count)
        jobs = [((g.q, g.n, g.d), k, t, deadline) for t in tasks]
        with _pool(cfg.thread_count) as pool:
            results = list(pool.map(_color_worker, jobs))
        for found, count, ran_out in results:
            nodes += count
            if found is not None and colors is None and not exhausted:
                colors = found
            exhausted |= ran_out and colors is None
    if colors is not None:
        K = Coloring(g.params, k, colors)
        assert is_proper(g, K)
        least = None
        if cfg.canonical_witness and N <= CANONICAL_LIMIT:
            least = _lex_least_coloring(adj, g.params, k)
        return Colorability(True, least or K, PROVEN, nodes, "search", least is not None)
    if exhausted:
        return Colorability(None, None, EXHAUSTED, nodes, "budget exhausted")
    return Colorability(False, None, PROVEN, nodes, "search")


def _color_frontier(adj, k, prefix, want: int) -> List[List[Tuple[int, int]]]:
    """Partial assignments, in DFS order, that split the search into subtrees."""
    frontier = [list(prefix)]
    while len(frontier) < want:
        nxt = []
        grew = False
        for part in frontier:
            col = _Colorer(adj, k)
            used = col.preset(part)
            if used is None:
                continue
            kids = col.expand(used)
            if not kids:
                nxt.append(part)
                continue
            grew = True
            for v, c, _ in kids:
                nxt.append(part + [(v, c)])
        frontier = nxt
        if not grew:
            break
    return frontier


def _lex_least_coloring(adj: List[int], params: GraphParams, k: int, node_limit: int = 200000) -> Optional[Coloring]:
    """Lexicographically least proper coloring array, by static-order DFS.

    Colors are tried in increasing order on vertices 0, 1, 2, ...; the first
    complete assignment is the least one.  Returns None past ``node_limit``.
    """
    N = len(adj)
    ccol = _Colorer(adj, k)
    nodes = 0

    def rec(v: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExhausted
        if v == N:
            return True
        for c in ccol.options(v, used):
            if ccol.assign(v, c) and rec(v + 1, max(used, c + 1)):
                return True
            ccol.unassign(v)
        return False

    try:
        if rec(0, 0):
            return Coloring(params, k, tuple(ccol.color))
    except BudgetExhausted:
        return None
    return None


def chromatic_number(g: HammingGraph, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """χ(g): bracket from the bounds module, then k-colorability from the bottom up."""
    _guard(g)
    N = g.vertex_count
    adj = _adjacency(g)
    top = g.q ** (g.n - g.d + 1)
    upper_witness = coordinate_coloring(g, list(range(1, g.n - g.d + 2)))
    if cfg.use_bounds:
        rep = chi_bounds(g.q, g.n, g.d)
        lower, upper = rep.lower, rep.upper
    else:
        lower, upper = len(greedy_clique(adj)), top
    deadline = cfg.deadline()
    nodes = 0
    k = lower
    while k < upper:
        remaining = None if deadline is None else max(0.0, deadline - time.time())
        res = is_k_colorable(g, k, replace(cfg, time_budget=remaining))
        nodes += res.nodes
        if res.status == EXHAUSTED:
            return SearchResult(upper, upper_witness, EXHAUSTED, k, upper, nodes)
        if res.colorable:
            return SearchResult(k, res.witness, PROVEN, k, k, nodes, res.canonical)
        k += 1
    witness = upper_witness
    canonical = False
    if cfg.canonical_witness and N <= CANONICAL_LIMIT:
        least = _lex_least_coloring(adj, g.params, upper)
        if least is not None:
            witness, canonical = least, True
    return SearchResult(upper, witness, PROVEN, upper, upper, nodes, canonical)


# ============================================================ enumeration


def enumerate_colorings(g: HammingGraph, k: int, cfg: SearchConfig = SearchConfig()) -> List[Partition]:
    """Every partition of V into at most k independent sets, sorted.

    Vertices are colored in index order with restricted growth (a vertex may
    open only the next unused color), so each partition arises exactly once.
    """
    _guard(g, ENUMERATION_LIMIT)
    N = g.vertex_count
    adj = _adjacency(g)
    _raise_recursion(N)
    col = _Colorer(adj, max(k, 1), cfg.deadline())
    out = []

    def rec(v: int, used: int):
        col.tick()
        if v == N:
            out.append(tuple(col.color))
            return
        for c in col.options(v, used):
            if col.assign(v, c):
                rec(v + 1, max(used, c + 1))
            col.unassign(v)

    if k >= 1:
        rec(0, 0)
    parts = []
    for colors in out:
        classes = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        parts.append(Partition(tuple(sorted(tuple(cl) for cl in classes.values()))))
    return sorted(parts, key=lambda p: p.classes)


def partition_orbits(g: HammingGraph, parts: Sequence[Partition]) -> int:
    """Number of classes of ``parts`` under translations and coordinate permutations."""
    from itertools import permutations

    perms = []
    for sigma in permutations(range(g.n)):
        table = []
        for x in range(g.vertex_count):
            dig = g.words.digits(x)
            table.append(g.words.encode([dig[sigma[i]] for i in range(g.n)]))
        perms.append(table)
    shifts = [g.translate(z) for z in range(g.vertex_count)]
    seen = set()
    for p in parts:
        forms = []
        for table in perms:
            for shift in shifts:
                forms.append(tuple(sorted(tuple(sorted(shift[table[v]] for v in cl)) for cl in p.classes)))
        seen.add(min(forms))
    return len(seen)


__all__ = [
    "Colorability",
    "Frame",
    "SearchConfig",
    "SearchResult",
    "best_frame",
    "chromatic_number",
    "enumerate_colorings",
    "folded_frame",
    "heuristic_independent_set",
    "is_clique",
    "is_independent",
    "is_k_colorable",
    "max_clique",
    "max_independent_set",
    "partition_orbits",
    "standard_frame",
]
