"""Words over Z_q^n and the arithmetic used by every other module.

A word is stored as its canonical index: the little-endian base-q number whose
least-significant digit is coordinate 1.  For q = 2 the index is the bit
pattern itself, so addition is XOR and weight is a popcount.

Word strings are written with coordinate 1 first, so ``"0111"`` is the word
with x_1 = 0 and x_2 = x_3 = x_4 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

MAX_ALPHABET = 64


class ParamsError(ValueError):
    """Raised for invalid (q, n, d) triples or malformed words."""


class ExcludedParamsError(ParamsError):
    """Raised for the excluded case (q, d) = (2, n)."""


@dataclass(frozen=True, order=True)
class GraphParams:
    q: int
    n: int
    d: int

    def __post_init__(self):
        for name in ("q", "n", "d"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParamsError(f"{name} must be an integer")
        if self.q < 2 or self.q > MAX_ALPHABET:
            raise ParamsError(f"alphabet size q={self.q} outside [2, {MAX_ALPHABET}]")
        if self.n < 2:
            raise ParamsError(f"word length n={self.n} must be at least 2")
        if not 0 < self.d <= self.n:
            raise ParamsError(f"distance d={self.d} must satisfy 0 < d <= n={self.n}")
        if self.q == 2 and self.d == self.n:
            raise ExcludedParamsError(
                f"H_2({self.n},{self.n}) is a perfect matching and is excluded"
            )

    @property
    def vertex_count(self) -> int:
        return self.q ** self.n

    def __str__(self):
        return f"H_{self.q}({self.n},{self.d})"


def is_valid(q: int, n: int, d: int) -> bool:
    try:
        GraphParams(q, n, d)
    except ParamsError:
        return False
    return True


def valid_params(max_vertices: int, q_values: Iterable[int] | None = None):
    """All valid triples with q^n <= max_vertices, sorted by (q, n, d)."""
    out = []
    qs = q_values if q_values is not None else range(2, MAX_ALPHABET + 1)
    for q in qs:
        n = 2
        while q ** n <= max_vertices:
            for d in range(1, n + 1):
                if is_valid(q, n, d):
                    out.append(GraphParams(q, n, d))
            n += 1
    return sorted(out)


# ---------------------------------------------------------------- int kernels


class WordSpace:
    """Integer-level arithmetic on Z_q^n with cached lookup tables.

    Obtain instances through :func:`word_space` so tables are shared.
    """

    def __init__(self, q: int, n: int):
        if q < 2 or n < 1:
            raise ParamsError("need q >= 2 and n >= 1")
        self.q = q
        self.n = n
        self.size = q ** n
        self.powers = tuple(q ** i for i in range(n))
        self._weights = None

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.size:
            raise ParamsError(f"index {x!r} outside [0, {self.size})")
        return x

    def digits(self, x: int) -> tuple:
        q = self.q
        out = []
        for _ in range(self.n):
            x, r = divmod(x, q)
            out.append(r)
        return tuple(out)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != self.n:
            raise ParamsError(f"expected {self.n} digits, got {len(coords)}")
        x = 0
        for c, p in zip(coords, self.powers):
            if not isinstance(c, int) or not 0 <= c < self.q:
                raise ParamsError(f"digit {c!r} outside [0, {self.q})")
            x += c * p
        return x

    @property
    def weights(self):
        """Weight of every index, as a tuple (built on first use)."""
        if self._weights is None:
            if self.q == 2:
                self._weights = tuple(x.bit_count() for x in range(self.size))
            else:
                w = [0]
                for p in self.powers:
                    # extend the table one digit at a time
                    w = [a + (c > 0) for c in range(self.q) for a in w]
                self._weights = tuple(w)
        return self._weights

    def weight(self, x: int) -> int:
        if self.q == 2:
            return x.bit_count()
        w = 0
        q = self.q
        while x:
            x, r = divmod(x, q)
            w += r != 0
        return w

    def add(self, x: int, y: int) -> int:
        if self.q == 2:
            return x ^ y
        q = self.q
        out = 0
        for p in self.powers:
            out += ((x % q + y % q) % q) * p
            x //= q
            y //= q
        return out

    def neg(self, x: int) -> int:
        if self.q == 2:
            return x
        q = self.q
        out = 0
        for p in self.powers:
            out += ((-x) % q) * p
            x //= q
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def scale(self, a: int, x: int) -> int:
        q = self.q
        out = 0
        for p in self.powers:
            out += ((a * (x % q)) % q) * p
            x //= q
        return out

    def distance(self, x: int, y: int) -> int:
        if self.q == 2:
            return (x ^ y).bit_count()
        q = self.q
        dist = 0
        for _ in range(self.n):
            dist += (x % q) != (y % q)
            x //= q
            y //= q
        return dist

    def parse(self, word: str) -> int:
        word = word.strip()
        if len(word) != self.n:
            raise ParamsError(f"word {word!r} does not have length {self.n}")
        try:
            digs = [int(ch, 36) for ch in word]
        except ValueError:
            raise ParamsError(f"word {word!r} contains a non-digit") from None
        return self.encode(digs)

    def format(self, x: int) -> str:
        return "".join(_DIGITS[c] for c in self.digits(x))

    def all_ones(self) -> int:
        return sum(self.powers)

    def unit(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ParamsError(f"coordinate {i} outside [1, {self.n}]")
        return self.powers[i - 1]


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@lru_cache(maxsize=None)
def word_space(q: int, n: int) -> WordSpace:
    return WordSpace(q, n)


# ---------------------------------------------------------------- Vertex API


@dataclass(frozen=True)
class Vertex:
    """A word of Z_q^n, identified by its canonical index."""

    q: int
    n: int
    index: int

    def __post_init__(self):
        word_space(self.q, self.n).check(self.index)

    @classmethod
    def from_coords(cls, coords: Sequence[int], q: int) -> "Vertex":
        return cls(q, len(coords), word_space(q, len(coords)).encode(coords))

    @classmethod
    def parse(cls, word: str, q: int) -> "Vertex":
        word = word.strip()
        return cls(q, len(word), word_space(q, len(word)).parse(word))

    @property
    def coords(self) -> tuple:
        return word_space(self.q, self.n).digits(self.index)

    def __str__(self):
        return word_space(self.q, self.n).format(self.index)

    def __add__(self, other: "Vertex") -> "Vertex":
        return add(self, other)

    def __sub__(self, other: "Vertex") -> "Vertex":
        _same_space(self, other)
        return Vertex(self.q, self.n, word_space(self.q, self.n).sub(self.index, other.index))


def _same_space(x: Vertex, y: Vertex) -> WordSpace:
    if x.q != y.q or x.n != y.n:
        raise ParamsError(
            f"words over different spaces: Z_{x.q}^{x.n} and Z_{y.q}^{y.n}"
        )
    return word_space(x.q, x.n)


def weight(x: Vertex) -> int:
    return word_space(x.q, x.n).weight(x.index)


def distance(x: Vertex, y: Vertex) -> int:
    return _same_space(x, y).distance(x.index, y.index)


def add(x: Vertex, y: Vertex) -> Vertex:
    ws = _same_space(x, y)
    return Vertex(x.q, x.n, ws.add(x.index, y.index))


def weight_parity(x: Vertex) -> int:
    if x.q != 2:
        raise ParamsError("weight parity is defined for binary words only")
    return x.index.bit_count() & 1


def encode(coords: Sequence[int], q: int) -> int:
    return word_space(q, len(coords)).encode(coords)


def decode(index: int, params: Union[GraphParams, tuple]) -> Vertex:
    q, n = (params.q, params.n) if isinstance(params, GraphParams) else params[:2]
    return Vertex(q, n, index)


def all_ones(q: int, n: int) -> Vertex:
    return Vertex(q, n, word_space(q, n).all_ones())


def unit(i: int, q: int, n: int) -> Vertex:
    return Vertex(q, n, word_space(q, n).unit(i))


def punctured_ones(i: int, n: int) -> Vertex:
    """f_i = e_i + 1: the binary all-ones word with coordinate i cleared."""
    ws = word_space(2, n)
    return Vertex(2, n, ws.all_ones() ^ ws.unit(i))
