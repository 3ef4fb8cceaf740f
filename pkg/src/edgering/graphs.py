"""Labeled simple graphs on 0..n-1 with bitset adjacency rows.

Vertices are 0-indexed.  Adjacency is stored as one int per vertex whose bit u
is set iff {v, u} is an edge, so edge membership and neighbor sets are O(1)
bit operations.  Graphs are immutable and safe to share between workers.

Supported interchange formats:
  * graph6 (short form only, n <= 62): leading byte n+63, then the upper
    triangle in column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per
    byte big-endian, each byte offset by 63, zero-padded.
  * edge list text: first token n, then pairs "u v".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MalformedInputError, UndefinedInputError, UnsupportedSizeError

MAX_VERTICES = 62  # graph6 short form

GRAPH6_HEADER = b">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph; `rows[v]` is the neighbor bitmask of v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise MalformedInputError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise MalformedInputError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise MalformedInputError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.rows[v]):
                if not self.rows[u] >> v & 1:
                    raise MalformedInputError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise MalformedInputError(f"loop edge at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edges are the set bits of `mask` in graph6 column order."""
        return cls(n, tuple(rows_from_edge_mask(n, mask)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.rows[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    return _bits(mask)


def rows_from_edge_mask(n: int, mask: int) -> list[int]:
    """Adjacency rows for an edge bitmask in column order (0,1),(0,2),(1,2),..."""
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return rows


def edge_mask_from_rows(n: int, rows: tuple[int, ...] | list[int]) -> int:
    mask = 0
    i = 0
    for v in range(1, n):
        row = rows[v]
        for u in range(v):
            if row >> u & 1:
                mask |= 1 << i
            i += 1
    return mask


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one short-form graph6 graph (optional '>>graph6<<' header)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise MalformedInputError("empty graph6 input")
    if data[0] == 126:
        raise UnsupportedSizeError("long-form graph6 (n > 62) is not supported")
    for b in data:
        if not 63 <= b <= 126:
            raise MalformedInputError(f"byte {b} outside graph6 range 63..126")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise MalformedInputError(
            f"bit section has {len(data) - 1} bytes, expected {nbytes} for n={n}"
        )
    rows = [0] * n
    acc = 0
    accbits = 0
    pos = 1
    for v in range(1, n):
        for u in range(v):
            if accbits == 0:
                acc = data[pos] - 63
                accbits = 6
                pos += 1
            accbits -= 1
            if acc >> accbits & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Canonical short-form graph6 encoding of this labeled graph."""
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"n={g.n} exceeds graph6 short form")
    out = [g.n + 63]
    acc = 0
    accbits = 0
    for v in range(1, g.n):
        row = g.rows[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            accbits += 1
            if accbits == 6:
                out.append(acc + 63)
                acc = 0
                accbits = 0
    if accbits:
        out.append((acc << (6 - accbits)) + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse "n u1 v1 u2 v2 ..." into a graph; duplicate edges collapse."""
    tokens = text.split()
    if not tokens:
        raise MalformedInputError("empty edge list")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedInputError(f"non-integer token in edge list: {exc}") from None
    n = values[0]
    if n < 0:
        raise MalformedInputError(f"negative vertex count {n}")
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"vertex count {n} exceeds {MAX_VERTICES}")
    rest = values[1:]
    if len(rest) % 2:
        raise MalformedInputError("odd number of endpoints; edges must come in pairs")
    return Graph.from_edges(n, list(zip(rest[::2], rest[1::2])))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise UndefinedInputError("max degree of the empty graph is undefined")
    return max(row.bit_count() for row in g.rows)


ENUMERATION_CAP = 7


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask counter order."""
    if not 0 <= n <= ENUMERATION_CAP:
        raise UnsupportedSizeError(f"labeled enumeration supports 0 <= n <= {ENUMERATION_CAP}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph(n, tuple(rows_from_edge_mask(n, mask)))
