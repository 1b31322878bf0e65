"""Colorings of H_q(n,d) as total vertex -> color arrays."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .core import GraphParams, ParamsError
from .graph import HammingGraph, VertexLike


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    params: GraphParams
    k: int
    colors: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.colors, tuple):
            object.__setattr__(self, "colors", tuple(self.colors))
        N = self.params.vertex_count
        if len(self.colors) != N:
            raise ColoringError(f"coloring has {len(self.colors)} entries, expected {N}")
        if self.k < 1:
            raise ColoringError("palette size must be positive")
        for c in self.colors:
            if not isinstance(c, int) or not 0 <= c < self.k:
                raise ColoringError(f"color {c!r} outside palette [0, {self.k})")

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def class_masks(self) -> List[int]:
        """Bitset of each color class, indexed by color (empty classes included)."""
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return masks

    def relabel(self, perm: Sequence[int]) -> "Coloring":
        return Coloring(self.params, self.k, tuple(perm[c] for c in self.colors))


@dataclass(frozen=True)
class Partition:
    classes: Tuple[Tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)

    def words(self, g: HammingGraph) -> List[List[str]]:
        return [[g.word(v) for v in cls] for cls in self.classes]


def coloring_from_classes(params: GraphParams, classes, k: int | None = None) -> Coloring:
    """Build a coloring whose color c is the c-th class of ``classes``."""
    N = params.vertex_count
    colors = [-1] * N
    for c, cls in enumerate(classes):
        for v in cls:
            if colors[v] != -1:
                raise ColoringError(f"vertex {v} appears in two classes")
            colors[v] = c
    if -1 in colors:
        raise ColoringError(f"vertex {colors.index(-1)} is in no class")
    return Coloring(params, k if k is not None else len(classes), tuple(colors))


def _check(g: HammingGraph, K: Coloring):
    if K.params != g.params:
        raise ParamsError(f"coloring of {K.params} used on {g.params}")


def monochromatic_edge(g: HammingGraph, K: Coloring):
    """First monochromatic edge (u, v), u < v, in edge order, or None."""
    _check(g, K)
    if g.adj is None:
        return _monochromatic_pair(g, K)
    masks = K.class_masks()
    for u in range(g.vertex_count):
        clash = g.neighbor_mask(u) & masks[K.colors[u]] & ~((1 << (u + 1)) - 1)
        if clash:
            return (u, (clash & -clash).bit_length() - 1)
    return None


def _monochromatic_pair(g: HammingGraph, K: Coloring):
    """Same answer as the edge scan, found by comparing words inside each class."""
    groups: Dict[int, List[int]] = {}
    for v, c in enumerate(K.colors):
        groups.setdefault(c, []).append(v)
    distance, d = g.words.distance, g.d
    best = None
    for members in groups.values():
        for i, u in enumerate(members):
            if best is not None and u >= best[0]:
                break
            for v in members[i + 1:]:
                if distance(u, v) >= d:
                    if best is None or (u, v) < best:
                        best = (u, v)
                    break
    return best


def is_proper(g: HammingGraph, K: Coloring) -> bool:
    """Scan every edge; true iff none is monochromatic."""
    return monochromatic_edge(g, K) is None


def coordinate_coloring(g: HammingGraph, indices: Sequence[int]) -> Coloring:
    """Color x by (x_{i_1}, ..., x_{i_m}) read as a little-endian base-q number."""
    m = g.n - g.d + 1
    indices = list(indices)
    if len(indices) != m:
        raise ColoringError(f"need exactly n-d+1 = {m} coordinates, got {len(indices)}")
    if any(not isinstance(i, int) or not 1 <= i <= g.n for i in indices):
        raise ColoringError(f"coordinates must lie in [1, {g.n}]")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ColoringError("coordinates must be strictly increasing")
    q = g.q
    colors = []
    for x in range(g.vertex_count):
        digs = g.words.digits(x)
        c = 0
        for pos, i in enumerate(indices):
            c += digs[i - 1] * q ** pos
        colors.append(c)
    return Coloring(g.params, q ** m, tuple(colors))


def class_sizes(K: Coloring) -> List[int]:
    sizes = [0] * K.k
    for c in K.colors:
        sizes[c] += 1
    return sizes


def is_even(K: Coloring) -> bool:
    """All k classes have the same size (unused palette entries count as size 0)."""
    return len(set(class_sizes(K))) == 1


def swap_along_edge(g: HammingGraph, K: Coloring, x: VertexLike, y: VertexLike) -> Coloring:
    _check(g, K)
    x, y = g.index(x), g.index(y)
    if x == y or not g.is_edge(x, y):
        raise ColoringError(f"({g.word(x)}, {g.word(y)}) is not an edge")
    colors = list(K.colors)
    colors[x], colors[y] = colors[y], colors[x]
    return Coloring(K.params, K.k, tuple(colors))


def color_classes(K: Coloring) -> List[set]:
    """Nonempty color classes as sets, in canonical order."""
    return [set(c) for c in canonical_partition(K).classes]


def canonical_partition(K: Coloring) -> Partition:
    groups: Dict[int, List[int]] = {}
    for v, c in enumerate(K.colors):
        groups.setdefault(c, []).append(v)
    classes = sorted(tuple(vs) for vs in groups.values())
    return Partition(tuple(classes))


def partition_from_words(g: HammingGraph, classes: Sequence[Sequence[str]]) -> Partition:
    cls = sorted(tuple(sorted(g.index(w) for w in c)) for c in classes)
    return Partition(tuple(cls))


def write_coloring(K: Coloring) -> bytes:
    doc = {"q": K.params.q, "n": K.params.n, "d": K.params.d, "k": K.k, "colors": list(K.colors)}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def read_coloring(data) -> Coloring:
    if isinstance(data, (bytes, bytearray)):
        data = data.decode()
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ColoringError(f"malformed coloring JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ColoringError("coloring JSON must be an object")
    missing = [key for key in ("q", "n", "d", "k", "colors") if key not in doc]
    if missing:
        raise ColoringError(f"coloring JSON lacks {', '.join(missing)}")
    if not isinstance(doc["colors"], list):
        raise ColoringError("colors must be an array")
    params = GraphParams(doc["q"], doc["n"], doc["d"])
    if not isinstance(doc["k"], int):
        raise ColoringError("k must be an integer")
    return Coloring(params, doc["k"], tuple(doc["colors"]))


def classes_as_words(g: HammingGraph, K: Coloring) -> List[List[str]]:
    return canonical_partition(K).words(g)


__all__ = [
    "Coloring",
    "ColoringError",
    "Partition",
    "canonical_partition",
    "class_sizes",
    "classes_as_words",
    "color_classes",
    "coloring_from_classes",
    "coordinate_coloring",
    "is_even",
    "is_proper",
    "monochromatic_edge",
    "partition_from_words",
    "read_coloring",
    "swap_along_edge",
    "write_coloring",
]
