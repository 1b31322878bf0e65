"""The Hamming-distance graph H_q(n,d).

Vertices are the canonical indices 0..q^n-1; two words are adjacent when their
Hamming distance is at least d.  Graphs with at most ``ADJACENCY_CACHE_LIMIT``
vertices carry a bitset adjacency list (``adj[x]`` has bit y set iff x ~ y),
built eagerly at construction.
"""

from __future__ import annotations

import json
from collections import deque
from functools import lru_cache
from math import comb
from typing import List, Optional, Union

import numpy as np

from .core import GraphParams, ParamsError, Vertex, word_space

ADJACENCY_CACHE_LIMIT = 4096
EXPORT_LIMIT = 2 ** 20

VertexLike = Union[int, str, Vertex]


def degree_formula(q: int, n: int, d: int) -> int:
    return sum(comb(n, i) * (q - 1) ** (n - i) for i in range(n - d + 1))


@lru_cache(maxsize=8)
def _digit_matrix(q: int, n: int) -> np.ndarray:
    """Column i holds digit x_{i+1} of every word (read-only, shared)."""
    idx = np.arange(q ** n, dtype=np.int64)
    digs = np.stack([(idx // q ** i) % q for i in range(n)], axis=0).astype(np.uint8)
    digs.setflags(write=False)
    return digs


def distance_matrix(q: int, n: int, rows: Optional[range] = None) -> np.ndarray:
    """Hamming distances from the words in ``rows`` (default all) to all q^n words."""
    N = q ** n
    rows = range(N) if rows is None else rows
    if q == 2:
        idx = np.arange(N, dtype=np.int64)
        table = np.array(word_space(2, n).weights, dtype=np.uint8)
        return table[idx[rows.start:rows.stop, None] ^ idx[None, :]]
    digs = _digit_matrix(q, n)
    out = np.zeros((len(rows), N), dtype=np.uint8)
    for col in digs:
        out += col[rows.start:rows.stop, None] != col[None, :]
    return out


def adjacency_masks(q: int, n: int, d: int, chunk: int = 1024) -> List[int]:
    """Bitset adjacency of H_q(n,d), built a block of rows at a time."""
    N = q ** n
    out: List[int] = []
    for start in range(0, N, chunk):
        out += _pack_rows(distance_matrix(q, n, range(start, min(N, start + chunk))) >= d)
    return out


def _pack_rows(mask: np.ndarray) -> List[int]:
    packed = np.packbits(mask, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class HammingGraph:
    def __init__(self, params: GraphParams, cache: Optional[bool] = None):
        if not isinstance(params, GraphParams):
            params = GraphParams(*params)
        self.params = params
        self.q, self.n, self.d = params.q, params.n, params.d
        self.words = word_space(self.q, self.n)
        self.vertex_count = self.q ** self.n
        self.degree = degree_formula(self.q, self.n, self.d)
        self.edge_count = self.vertex_count * self.degree // 2
        if cache is None:
            cache = self.vertex_count <= ADJACENCY_CACHE_LIMIT
        self.adj: Optional[List[int]] = None
        if cache:
            if self.vertex_count > ADJACENCY_CACHE_LIMIT:
                raise ParamsError("adjacency cache limited to 4096 vertices")
            self.adj = _pack_rows(distance_matrix(self.q, self.n) >= self.d)
        self._generators = None

    @classmethod
    def of(cls, q: int, n: int, d: int) -> "HammingGraph":
        return cached_graph(q, n, d)

    def __repr__(self):
        return f"HammingGraph({self.q}, {self.n}, {self.d})"

    # ------------------------------------------------------------ vertices
    def index(self, x: VertexLike) -> int:
        """Resolve an int index, a Vertex, or a word string to an index."""
        if isinstance(x, bool):
            raise ParamsError("booleans are not vertices")
        if isinstance(x, int):
            return self.words.check(x)
        if isinstance(x, Vertex):
            if (x.q, x.n) != (self.q, self.n):
                raise ParamsError(f"vertex {x} is not a word of Z_{self.q}^{self.n}")
            return x.index
        if isinstance(x, str):
            return self.words.parse(x)
        raise ParamsError(f"cannot interpret {x!r} as a vertex")

    def word(self, x: int) -> str:
        return self.words.format(x)

    def vertex(self, x: int) -> Vertex:
        return Vertex(self.q, self.n, x)

    @property
    def generating_set(self) -> List[int]:
        """S_d = {v : wt(v) >= d} in ascending index order."""
        if self._generators is None:
            w = self.words.weights
            self._generators = [v for v in range(self.vertex_count) if w[v] >= self.d]
        return self._generators

    # ------------------------------------------------------------ adjacency
    def is_edge(self, x: VertexLike, y: VertexLike) -> bool:
        x, y = self.index(x), self.index(y)
        if x == y:
            raise ParamsError("self-loop query: x equals y")
        if self.adj is not None:
            return bool(self.adj[x] >> y & 1)
        return self.words.distance(x, y) >= self.d

    def neighbor_mask(self, x: int) -> int:
        if self.adj is not None:
            return self.adj[x]
        m = 0
        for y in self.neighbors(x):
            m |= 1 << y
        return m

    def neighbors(self, x: VertexLike) -> List[int]:
        x = self.index(x)
        if self.adj is not None:
            return bits(self.adj[x])
        ws = self.words
        if self.q == 2:
            return sorted(x ^ s for s in self.generating_set)
        return sorted(ws.add(x, s) for s in self.generating_set)

    def edges(self):
        """All edges (u, v) with u < v, sorted."""
        for u in range(self.vertex_count):
            if self.adj is not None:
                m = self.adj[u] >> (u + 1)
                base = u + 1
                while m:
                    low = m & -m
                    yield (u, base + low.bit_length() - 1)
                    m ^= low
            else:
                for v in self.neighbors(u):
                    if v > u:
                        yield (u, v)

    # ------------------------------------------------------------ structure
    def girth(self, verify: bool = False) -> int:
        """Closed-form girth; with ``verify`` it is recomputed by BFS from every vertex."""
        q, n, d = self.q, self.n, self.d
        value = 3 if (q >= 3 or 3 * d <= 2 * n) else 4
        if verify:
            measured = min(shortest_cycle_through(self, v) for v in range(self.vertex_count))
            if measured != value:
                raise AssertionError(f"girth formula {value} disagrees with BFS {measured}")
        return value

    def graph_distance(self, x: VertexLike, y: VertexLike) -> int:
        x, y = self.index(x), self.index(y)
        if x == y:
            return 0
        dist = {x: 0}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    if v == y:
                        return dist[v]
                    queue.append(v)
        raise ParamsError("vertices are disconnected")

    def odd_cycle(self) -> List[int]:
        """The closed walk 0, f_1, f_1+f_2, ... returning to 0.

        The list repeats the start vertex at the end; its edge count is n for
        odd n and n+1 for even n.
        """
        q, n, d = self.q, self.n, self.d
        if q != 2 or not (3 * d > 2 * n and d < n):
            raise ParamsError("odd_cycle needs q = 2 and 2n/3 < d < n")
        ones = self.words.all_ones()
        steps = [ones ^ (1 << i) for i in range(n)]
        if n % 2 == 0:
            steps.append(ones)
        cycle = [0]
        for s in steps:
            cycle.append(cycle[-1] ^ s)
        assert cycle[-1] == 0
        return cycle

    def translate(self, z: VertexLike) -> List[int]:
        z = self.index(z)
        if self.q == 2:
            return [v ^ z for v in range(self.vertex_count)]
        return [self.words.add(v, z) for v in range(self.vertex_count)]

    # ------------------------------------------------------------ export
    def export(self, fmt: str) -> bytes:
        if self.vertex_count > EXPORT_LIMIT:
            raise ParamsError(f"refusing to materialize {self.vertex_count} vertices")
        if fmt == "dimacs":
            lines = [f"p edge {self.vertex_count} {self.edge_count}"]
            lines += [f"e {u + 1} {v + 1}" for u, v in self.edges()]
        elif fmt == "dot":
            lines = [f"graph H_{self.q}_{self.n}_{self.d} {{"]
            lines += [f"  {u} -- {v};" for u, v in self.edges()]
            lines.append("}")
        elif fmt in ("edge-list-json", "json"):
            doc = {"q": self.q, "n": self.n, "d": self.d, "edges": [list(e) for e in self.edges()]}
            return (json.dumps(doc, separators=(",", ":")) + "\n").encode()
        else:
            raise ParamsError(f"unknown export format {fmt!r}")
        return ("\n".join(lines) + "\n").encode()


@lru_cache(maxsize=64)
def cached_graph(q: int, n: int, d: int) -> HammingGraph:
    return HammingGraph(GraphParams(q, n, d))


def bits(mask: int) -> List[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def shortest_cycle_through(g: HammingGraph, source: int = 0) -> int:
    """Length of the shortest cycle through ``source`` (BFS with parent labels)."""
    dist = {source: 0}
    branch = {source: -1}
    queue = deque([source])
    best = None
    while queue:
        u = queue.popleft()
        if best is not None and 2 * dist[u] + 1 >= best:
            break
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                branch[v] = v if u == source else branch[u]
                queue.append(v)
            elif v != source and branch[v] != branch[u] and u != source:
                length = dist[u] + dist[v] + 1
                if best is None or length < best:
                    best = length
    return best if best is not None else 0


def bfs_reach(g: HammingGraph, source: int = 0) -> int:
    """Number of vertices reachable from ``source``."""
    if g.adj is not None:
        seen = frontier = 1 << source
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen.bit_count()
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen)
