"""Explicit colorings and codes, addressable by name.

The H_2(3,2) and H_2(4,3) tables are embedded literally (words written with
coordinate 1 first).  Linear-code constructions work over the prime field Z_q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

from .coloring import (
    Coloring,
    ColoringError,
    coloring_from_classes,
    coordinate_coloring,
    is_proper,
    swap_along_edge,
)
from .core import GraphParams, ParamsError, word_space
from .graph import HammingGraph, cached_graph

DEFAULT_SEED = int.from_bytes(b"HAMG", "big")


@dataclass(frozen=True)
class NamedColoring:
    name: str
    coloring: Coloring
    provenance: str

    @property
    def graph(self) -> HammingGraph:
        p = self.coloring.params
        return cached_graph(p.q, p.n, p.d)


def _named(name, params: GraphParams, classes, provenance, k=None) -> NamedColoring:
    g = cached_graph(params.q, params.n, params.d)
    idx = [[g.index(w) if isinstance(w, str) else w for w in cls] for cls in classes]
    K = coloring_from_classes(params, idx, k)
    if not is_proper(g, K):
        raise ColoringError(f"construction {name} is not proper")
    return NamedColoring(name, K, provenance)


# ------------------------------------------------------------ H_2(3,2)

FIGURE2_ROWS = (
    ("000 001", "100 101", "010 011", "110 111"),
    ("000 010", "100 110", "001 011", "101 111"),
    ("000 100", "010 110", "001 101", "011 111"),
    ("000 100", "010 110", "001 011", "101 111"),
    ("000 100", "010 011", "001 101", "110 111"),
    ("000 010", "100 110", "001 101", "011 111"),
    ("000 010", "100 101", "001 011", "110 111"),
    ("000 001", "100 110", "010 011", "101 111"),
    ("000 001", "100 101", "010 110", "011 111"),
)


def figure2(i: int) -> NamedColoring:
    """Row K_i of the table of all minimal colorings of H_2(3,2)."""
    if not 1 <= i <= 9:
        raise ParamsError("row index must be in 1..9")
    classes = [c.split() for c in FIGURE2_ROWS[i - 1]]
    return _named(f"figure2:{i}", GraphParams(2, 3, 2), classes, f"all 4-colorings of H_2(3,2), row K_{i}")


# ------------------------------------------------------------ H_2(4,3)

H243_ROWS = {
    1: (
        ("0000", "1000", "0100", "1100"),
        ("0010", "1010", "0110"),
        ("0001", "1001", "0101", "0011"),
        ("1110", "1101", "1011", "0111", "1111"),
    ),
    2: (
        ("0001", "0010", "0100", "1000"),
        ("1110", "1101", "1011", "0111"),
        ("1111", "1100", "0110", "1010"),
        ("0000", "0011", "0101", "1001"),
    ),
}


def h243_example(which: int) -> NamedColoring:
    if which not in H243_ROWS:
        raise ParamsError("which must be 1 or 2")
    kind = "uneven" if which == 1 else "even"
    return _named(f"h243:{which}", GraphParams(2, 4, 3), H243_ROWS[which], f"{kind} 4-coloring K_{which} of H_2(4,3)")


# (base, word, target class) moves listed alongside the H_2(4,3) table.
VARIANT_MOVES = {
    (2, "0000", 1),
    (2, "1111", 2),
    (1, "0000", 3),
}


def uneven_variant(base: int, moves: Sequence[Tuple[str, int]]) -> NamedColoring:
    """Move words into other classes of K_1 or K_2 (classes numbered from 1)."""
    if base not in H243_ROWS:
        raise ParamsError("base must be 1 or 2")
    if not moves:
        raise ParamsError("at least one move is required")
    classes = [list(c) for c in H243_ROWS[base]]
    for word, target in moves:
        if (base, word, target) not in VARIANT_MOVES:
            raise ParamsError(f"move {word} -> class {target} is not a listed modification of K_{base}")
        for c in classes:
            if word in c:
                c.remove(word)
        classes[target - 1].append(word)
    label = "+".join(f"{w}>{t}" for w, t in moves)
    return _named(f"variant:{base}:{label}", GraphParams(2, 4, 3), classes, f"K_{base} of H_2(4,3) with {label}")


# ------------------------------------------------------------ H_2(n,n-1)


def parity_coloring(n: int, j: int) -> NamedColoring:
    """Classes A^nu_mu = {v : wt(v) = nu mod 2, v_j = mu} of H_2(n, n-1), n even."""
    if n % 2:
        raise ParamsError("the parity coloring needs even n")
    if not 1 <= j <= n:
        raise ParamsError(f"j must lie in [1, {n}]")
    params = GraphParams(2, n, n - 1)
    colors = tuple(2 * (x.bit_count() & 1) + (x >> (j - 1) & 1) for x in range(2 ** n))
    K = Coloring(params, 4, colors)
    if not is_proper(cached_graph(2, n, n - 1), K):
        raise ColoringError("parity coloring is not proper")
    return NamedColoring(f"parity:{n}:{j}", K, "classes A^nu_mu by weight parity and coordinate j")


def swapped_h254() -> NamedColoring:
    g = cached_graph(2, 5, 4)
    K = swap_along_edge(g, coordinate_coloring(g, (1, 2)), "00000", "10111")
    return NamedColoring("swapped-h254", K, "(1,2)-coordinate coloring of H_2(5,4) with 00000 and 10111 swapped")


# ------------------------------------------------------------ q-ary codes


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def projective_points(q: int) -> List[Tuple[int, int]]:
    """Normalized representatives of the q+1 points of PG(1, q), sorted."""
    return sorted([(0, 1)] + [(1, a) for a in range(q)])


def nullspace_mod(rows: Sequence[Sequence[int]], q: int) -> List[List[int]]:
    """Basis of {x : H x = 0} over Z_q (q prime), in reduced echelon order."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] % q), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(v * inv) % q for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % q:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-m[i][f]) % q
        basis.append(x)
    return basis


def span(basis: Sequence[Sequence[int]], q: int) -> List[Tuple[int, ...]]:
    n = len(basis[0])
    words = set()
    for coeffs in product(range(q), repeat=len(basis)):
        words.add(tuple(sum(a * b[i] for a, b in zip(coeffs, basis)) % q for i in range(n)))
    return sorted(words)


def hamming_code(q: int) -> List[Tuple[int, ...]]:
    """The length-(q+1) Hamming code with a 2-row parity-check matrix over Z_q.

    The check matrix has the normalized projective points as columns in
    lexicographic order; the code is its null space, with q^(q-1) words.
    """
    if not is_prime(q):
        raise ParamsError(f"q={q} is not prime")
    cols = projective_points(q)
    H = [[c[0] for c in cols], [c[1] for c in cols]]
    return span(nullspace_mod(H, q), q)


def hamming_coset_coloring(q: int) -> NamedColoring:
    """Color classes v + I, v in the Hamming code, I = {wt <= 1}, on H_q(q+1, 3)."""
    code = hamming_code(q)
    n = q + 1
    ws = word_space(q, n)
    ball = [x for x in range(q ** n) if ws.weights[x] <= 1]
    classes = []
    for c in code:
        v = ws.encode(c)
        classes.append([ws.add(v, b) for b in ball])
    return _named(f"hamming-coset:{q}", GraphParams(q, n, 3), classes, "shifts of the radius-1 ball by Hamming codewords")


MDS_ROWS = ((0, 1, 1, 1), (1, 0, 1, 2))


def uneven27() -> NamedColoring:
    """27 classes v+J, v+B_1, v+B_2 (v in the padded ternary code) of H_3(5,3)."""
    ws = word_space(3, 5)
    code = span(MDS_ROWS, 3)
    J = [x for x in range(3 ** 5) if ws.weights[x] <= 1]
    B = {a: [x for x in range(3 ** 5) if x // 81 == a and ws.weights[x % 81] == 1] for a in (1, 2)}
    classes = []
    for c in code:
        v = ws.encode(c + (0,))
        for part in (J, B[1], B[2]):
            classes.append([ws.add(v, b) for b in part])
    return _named("uneven27", GraphParams(3, 5, 3), classes, "uneven 27-coloring of H_3(5,3) from the ternary code")


def independent_set_J() -> List[int]:
    ws = word_space(3, 5)
    return [x for x in range(3 ** 5) if ws.weights[x] <= 1]


def reed_solomon(q: int, n: int, d: int) -> Optional[List[int]]:
    """Evaluations of all polynomials of degree < n-d+1 at 0, 1, ..., n-1 over Z_q."""
    if not is_prime(q):
        raise ParamsError(f"q={q} is not prime")
    if n > q or not 1 <= d <= n:
        return None
    m = n - d + 1
    ws = word_space(q, n)
    words = []
    for coeffs in product(range(q), repeat=m):
        word = [sum(c * pow(a, e, q) for e, c in enumerate(coeffs)) % q for a in range(n)]
        words.append(ws.encode(word))
    return sorted(words)


# ------------------------------------------------------------ registry


def construct(name: str) -> NamedColoring:
    """Look up a construction such as ``figure2:4``, ``h243:1``, ``parity:4:1``."""
    head, _, rest = name.partition(":")
    args = rest.split(":") if rest else []
    try:
        if head == "figure2" and len(args) == 1:
            return figure2(int(args[0]))
        if head == "h243" and len(args) == 1:
            return h243_example(int(args[0]))
        if head == "parity" and len(args) == 2:
            return parity_coloring(int(args[0]), int(args[1]))
        if head == "swapped-h254" and not args:
            return swapped_h254()
        if head == "hamming-coset" and len(args) == 1:
            return hamming_coset_coloring(int(args[0]))
        if head == "uneven27" and not args:
            return uneven27()
        if head == "variant" and len(args) >= 2:
            moves = []
            for m in args[1].split("+"):
                word, _, target = m.partition(">")
                moves.append((word, int(target)))
            return uneven_variant(int(args[0]), moves)
    except ValueError as e:
        if isinstance(e, (ParamsError, ColoringError)):
            raise
        raise ParamsError(f"bad construction arguments in {name!r}") from None
    raise ParamsError(f"unknown construction {name!r}")


CONSTRUCTION_NAMES = (
    [f"figure2:{i}" for i in range(1, 10)]
    + ["h243:1", "h243:2", "variant:2:0000>1", "variant:2:1111>2", "variant:2:0000>1+1111>2", "variant:1:0000>3"]
    + ["parity:4:1", "swapped-h254", "hamming-coset:3", "uneven27"]
)


# ------------------------------------------------------------ corpus


def swap_walk(g: HammingGraph, K: Coloring, steps: int, rng: random.Random) -> List[Coloring]:
    """Colorings visited by swapping along uniformly chosen transition edges."""
    from .transitions import transition_space

    out = []
    for _ in range(steps):
        edges = transition_space(g, K).edges
        if not edges:
            break
        x, y = edges[rng.randrange(len(edges))]
        K = swap_along_edge(g, K, x, y)
        out.append(K)
    return out


def coloring_corpus(ns: Sequence[int] = (3, 4, 5, 6), walks: int = 4, steps: int = 12, seed: int = DEFAULT_SEED) -> List[Tuple[str, Coloring]]:
    """Named proper 4-colorings of H_2(n, n-1) for property tests.

    Contains all literal examples, every coordinate and parity coloring, and
    seeded swap walks started from coordinate colorings.
    """
    rng = random.Random(seed)
    out: List[Tuple[str, Coloring]] = []
    seen = set()

    def push(name, K):
        key = (K.params, K.colors)
        if key not in seen:
            seen.add(key)
            out.append((name, K))

    for i in range(1, 10):
        push(f"figure2:{i}", figure2(i).coloring)
    for which in (1, 2):
        push(f"h243:{which}", h243_example(which).coloring)
    for name in ("variant:2:0000>1", "variant:2:1111>2", "variant:2:0000>1+1111>2", "variant:1:0000>3"):
        push(name, construct(name).coloring)
    push("swapped-h254", swapped_h254().coloring)
    for n in ns:
        g = cached_graph(2, n, n - 1)
        coords = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for c in coords:
            push(f"coord:{n}:{c[0]},{c[1]}", coordinate_coloring(g, c))
        if n % 2 == 0:
            for j in range(1, n + 1):
                push(f"parity:{n}:{j}", parity_coloring(n, j).coloring)
        for w in range(walks):
            start = coords[rng.randrange(len(coords))]
            K = coordinate_coloring(g, start)
            for s, K2 in enumerate(swap_walk(g, K, steps, rng)):
                push(f"walk:{n}:{w}:{s}", K2)
    return out
