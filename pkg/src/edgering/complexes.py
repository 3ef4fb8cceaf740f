"""Simplicial complexes as facet lists, flag complexes, and exact homology.

Ground sets are explicit sorted label tuples (usually 0..n-1; restrictions
keep original labels).  Every ground-set vertex must lie in some facet: an
isolated vertex is represented by a 0-dimensional facet.  The complex with
empty ground set is the complex whose only face is the empty face.

Reduced homology is computed over the rationals from exact integer boundary
ranks; no floating point is used anywhere in this module.  Ranks in positive
characteristic may differ in general and are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import chordal, intlinalg
from .errors import (
    ContractViolationError,
    InternalInvariantError,
    MalformedInputError,
    UnsupportedSizeError,
)
from .graphs import Graph, bits

FACE_GUARD_VERTICES = 25


def _canonical_facets(facets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Dedupe, drop non-maximal sets, and sort by sorted vertex tuple."""
    sets = {frozenset(f) for f in facets}
    for f in sets:
        if not f:
            raise MalformedInputError("empty facet; the empty complex has no facet lines")
    maximal = [f for f in sets if not any(f < g for g in sets)]
    return tuple(sorted(maximal, key=sorted))


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet-list complex; facets are canonically ordered and inclusion-free."""

    vertices: tuple[int, ...]
    facets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        verts = tuple(sorted(set(self.vertices)))
        facets = _canonical_facets(self.facets)
        covered: set[int] = set()
        for f in facets:
            covered |= f
        if not covered <= set(verts):
            raise MalformedInputError(f"facet vertices {sorted(covered - set(verts))} outside ground set")
        if covered != set(verts):
            raise MalformedInputError(
                f"vertices {sorted(set(verts) - covered)} lie in no facet; "
                "list isolated vertices as singleton facets"
            )
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", facets)

    @classmethod
    def of(cls, vertices: int | Iterable[int], facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        verts = range(vertices) if isinstance(vertices, int) else vertices
        return cls(tuple(verts), tuple(frozenset(f) for f in facets))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def facet_lists(self) -> list[list[int]]:
        return [sorted(f) for f in self.facets]


@dataclass(frozen=True)
class FVector:
    """Face counts by size: counts[k] = number of faces with k vertices (dim k-1)."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise InternalInvariantError("f-vector must start with the empty face count 1")

    def by_dim(self, d: int) -> int:
        k = d + 1
        return self.counts[k] if 0 <= k < len(self.counts) else 0


def flag_complex(g: Graph) -> SimplicialComplex:
    """Largest complex with 1-skeleton g: facets are the maximal cliques of g."""
    facets = [frozenset(bits(m)) for m in _maximal_clique_masks(g.n, g.rows)]
    return SimplicialComplex(tuple(range(g.n)), tuple(facets))


def _maximal_clique_masks(n: int, rows: Sequence[int]) -> list[int]:
    """Bron-Kerbosch with pivoting on bitmask rows; deterministic output order."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pux = p | x
        best_u = -1
        best = -1
        m = pux
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            c = (p & rows[u]).bit_count()
            if c > best:
                best = c
                best_u = u
        cand = p & ~rows[best_u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            bk(r | low, p & rows[v], x & rows[v])
            p ^= low
            x |= low

    if n:
        bk(0, (1 << n) - 1, 0)
    return sorted(out, key=lambda m: sorted(bits(m)))


def one_skeleton(c: SimplicialComplex) -> Graph:
    """Graph with an edge wherever two vertices share a facet.

    Vertex i of the graph corresponds to c.vertices[i]; for complexes on
    0..n-1 this is the identity.
    """
    pos = {v: i for i, v in enumerate(c.vertices)}
    rows = [0] * c.n
    for f in c.facets:
        idxs = [pos[v] for v in f]
        m = 0
        for i in idxs:
            m |= 1 << i
        for i in idxs:
            rows[i] |= m & ~(1 << i)
    return Graph(c.n, tuple(rows))


def restrict(c: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Induced subcomplex on w: the faces of c contained in w (labels kept)."""
    wset = frozenset(w)
    if not wset <= set(c.vertices):
        raise ContractViolationError(f"restriction set {sorted(wset - set(c.vertices))} outside ground set")
    pieces = [f & wset for f in c.facets if f & wset]
    return SimplicialComplex(tuple(sorted(wset)), tuple(pieces))


def _faces_by_size(c: SimplicialComplex) -> list[list[int]]:
    """All faces as position bitmasks, grouped by vertex count; index 0 is the empty face."""
    if c.n > FACE_GUARD_VERTICES:
        raise UnsupportedSizeError(f"face enumeration capped at {FACE_GUARD_VERTICES} vertices, got {c.n}")
    pos = {v: i for i, v in enumerate(c.vertices)}
    seen = {0}
    for f in c.facets:
        fm = 0
        for v in f:
            fm |= 1 << pos[v]
        sub = fm
        while sub:
            seen.add(sub)
            sub = (sub - 1) & fm
    top = max((len(f) for f in c.facets), default=0)
    grouped: list[list[int]] = [[] for _ in range(top + 1)]
    for m in seen:
        grouped[m.bit_count()].append(m)
    for g in grouped:
        g.sort()
    return grouped


def f_vector(c: SimplicialComplex) -> FVector:
    """Exact face counts; counts[0] = 1 for the empty face."""
    grouped = _faces_by_size(c)
    counts = tuple(len(g) for g in grouped)
    for k, ct in enumerate(counts):
        if ct > comb(c.n, k):
            raise InternalInvariantError("face count exceeds binomial bound")
    return FVector(counts)


def _boundary_matrix(smaller: list[int], larger: list[int]) -> list[list[int]]:
    """Rows indexed by `larger` faces, columns by `smaller`; entries are +-1."""
    index = {m: i for i, m in enumerate(smaller)}
    ncols = len(smaller)
    matrix = []
    for face in larger:
        row = [0] * ncols
        sign = 1
        m = face
        while m:
            low = m & -m
            m ^= low
            row[index[face ^ low]] = sign
            sign = -sign
        matrix.append(row)
    return matrix


def reduced_homology_ranks(c: SimplicialComplex) -> dict[int, int]:
    """Ranks of reduced homology over Q, keyed by dimension -1..dim.

    rank H~_d = (#d-faces) - rank del_d - rank del_(d+1), with the empty face
    as the single (-1)-dimensional chain generator.  The Euler-Poincare
    identity is asserted on every call.
    """
    grouped = _faces_by_size(c)
    top = len(grouped) - 1
    # boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces
    boundary_rank = [0] * (top + 2)
    for s in range(1, top + 1):
        boundary_rank[s] = intlinalg.rank(_boundary_matrix(grouped[s - 1], grouped[s]))
    ranks: dict[int, int] = {}
    for s in range(top + 1):
        h = len(grouped[s]) - boundary_rank[s] - boundary_rank[s + 1]
        if h < 0:
            raise InternalInvariantError("negative homology rank")
        ranks[s - 1] = h
    euler_faces = sum((-1) ** (s - 1) * len(grouped[s]) for s in range(top + 1))
    euler_ranks = sum((-1) ** d * h for d, h in ranks.items())
    if euler_faces != euler_ranks:
        raise InternalInvariantError("Euler-Poincare identity violated")
    return ranks


def free_vertices(c: SimplicialComplex) -> frozenset[int]:
    """Vertices lying in exactly one facet."""
    count: dict[int, int] = {}
    for f in c.facets:
        for v in f:
            count[v] = count.get(v, 0) + 1
    return frozenset(v for v, k in count.items() if k == 1)


SKELETON_NOT_CHORDAL = "skeleton-not-chordal"
NOT_FLAG = "not-flag"


@dataclass(frozen=True)
class QuasiForestResult:
    """Outcome of quasi-forest recognition; `reason` is set iff decomposition is None."""

    decomposition: chordal.QuasiForestDecomposition | None
    reason: str | None = None
    chordless_cycle: tuple[int, ...] | None = None


def as_quasi_forest(c: SimplicialComplex) -> QuasiForestResult:
    """Recognize c as a quasi-forest and return an ordered decomposition.

    Criterion: the 1-skeleton is chordal and c is the flag complex of it.
    """
    skel = one_skeleton(c)
    labels = c.vertices
    res = chordal.is_chordal(skel)
    if isinstance(res, chordal.NotChordal):
        cycle = tuple(labels[i] for i in res.cycle)
        return QuasiForestResult(None, SKELETON_NOT_CHORDAL, cycle)
    cliques = chordal.maximal_cliques_chordal(skel, res.peo)
    facet_positions = {frozenset(labels[i] for i in cl) for cl in cliques}
    if facet_positions != set(c.facets):
        return QuasiForestResult(None, NOT_FLAG)
    tree = chordal.clique_tree(cliques, skel)
    qfd = chordal.quasi_forest_order(tree)
    if labels != tuple(range(c.n)):
        qfd = chordal.QuasiForestDecomposition(
            facets=tuple(frozenset(labels[i] for i in f) for f in qfd.facets),
            dims=qfd.dims,
            attach_dims=qfd.attach_dims,
            n=qfd.n,
        )
    return QuasiForestResult(qfd)


def parse_complex(text: str) -> SimplicialComplex:
    """Fixture format: first line n, then one facet per line as vertex indices."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedInputError("empty complex fixture")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedInputError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 0:
        raise MalformedInputError(f"negative vertex count {n}")
    facets = []
    for ln in lines[1:]:
        try:
            facet = [int(t) for t in ln.split()]
        except ValueError:
            raise MalformedInputError(f"non-integer vertex in facet line {ln!r}") from None
        for v in facet:
            if not 0 <= v < n:
                raise MalformedInputError(f"vertex {v} outside 0..{n - 1}")
        facets.append(facet)
    return SimplicialComplex.of(n, facets)


def format_complex(c: SimplicialComplex) -> str:
    if c.vertices != tuple(range(c.n)):
        raise ContractViolationError("fixture format requires ground set 0..n-1")
    lines = [str(c.n)]
    lines += [" ".join(map(str, f)) for f in c.facet_lists()]
    return "\n".join(lines) + "\n"
