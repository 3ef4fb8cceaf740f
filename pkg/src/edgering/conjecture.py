"""Classify a graph G against "pd(k[G]) equals the maximum vertex degree".

The hypothesis of the statement is that the edge ring k[G] has a 2-linear
resolution, which holds exactly when the complement of G is chordal; the
edge ring is then the Stanley-Reisner ring of the quasi-forest built from
the complement's maximal cliques, and pd comes from the closed formula.

The verdict is always the direct comparison pd == max_deg.  The structural
witness (a free vertex in a facet of size r_min + 2 attached to the rest
along all of its other vertices) is computed independently; witness implies
holds is asserted on every call, and the converse is exercised exhaustively
by the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chordal, invariants
from .chordal import QuasiForestDecomposition
from .complexes import SimplicialComplex
from .errors import ContractViolationError, InternalInvariantError, UndefinedInputError
from .graphs import Graph, complement, max_degree, to_graph6

KRR_GAP_NOTE = (
    "complete-bipartite family: the gap for K_(r,r) is sometimes quoted as r, but the "
    "computed value is r - 1 (pd = 2r - 1 while the maximum degree is r); this library "
    "asserts r - 1, which the brute-force oracle confirms at small r"
)


@dataclass(frozen=True)
class ConjectureReport:
    """Per-graph verdict; formula fields are None when there is no 2-linear resolution."""

    graph6: str
    has_2linear: bool
    single_facet: bool | None = None
    r_min: int | None = None
    pd: int | None = None
    max_deg: int | None = None
    holds: bool | None = None
    gap: int | None = None
    witness: tuple[frozenset[int], int] | None = None

    def __post_init__(self) -> None:
        if self.has_2linear:
            if self.gap != self.pd - self.max_deg:
                raise InternalInvariantError("gap != pd - max_deg")
            if self.holds != (self.pd == self.max_deg):
                raise InternalInvariantError("holds flag inconsistent with pd and max_deg")


def free_vertex_witness(
    c: SimplicialComplex, r_min: int
) -> tuple[frozenset[int], int] | None:
    """Find a facet F with |F| = r_min + 2 and a vertex v in no other facet
    such that F meets the union of all other facets in exactly F - {v}.

    Searches facets in canonical order and vertices ascending; the complex
    must have at least two facets (a simplex holds trivially and is handled
    by the caller).
    """
    if len(c.facets) < 2:
        raise ContractViolationError("witness search requires at least two facets")
    count: dict[int, int] = {}
    for f in c.facets:
        for v in f:
            count[v] = count.get(v, 0) + 1
    for f in c.facets:
        if len(f) != r_min + 2:
            continue
        for v in sorted(f):
            if count[v] == 1 and all(count[u] >= 2 for u in f if u != v):
                return (f, v)
    return None


def classify(g: Graph) -> ConjectureReport:
    """Full pipeline: complement, chordality, decomposition, formula pd, verdict."""
    if g.n < 1:
        raise UndefinedInputError("classification needs at least one vertex")
    g6 = to_graph6(g)
    gbar = complement(g)
    res = chordal.is_chordal(gbar)
    if isinstance(res, chordal.NotChordal):
        return ConjectureReport(graph6=g6, has_2linear=False)
    cliques = chordal.maximal_cliques_chordal(gbar, res.peo)
    tree = chordal.clique_tree(cliques, gbar)
    qfd = chordal.quasi_forest_order(tree)
    return report_from_decomposition(g, qfd)


def report_from_decomposition(g: Graph, qfd: QuasiForestDecomposition) -> ConjectureReport:
    """Verdict for a graph whose complement's quasi-forest decomposition is already built."""
    g6 = to_graph6(g)
    pd = invariants.projective_dimension(qfd)
    md = max_degree(g)
    holds = pd == md
    single = qfd.k == 1
    witness = None
    if not single:
        cx = SimplicialComplex(tuple(range(qfd.n)), qfd.facets)
        witness = free_vertex_witness(cx, qfd.r_min)
        if witness is not None and not holds:
            raise InternalInvariantError(
                f"witness exists but pd {pd} != max degree {md} for {g6}"
            )
    return ConjectureReport(
        graph6=g6,
        has_2linear=True,
        single_facet=single,
        r_min=qfd.r_min,
        pd=pd,
        max_deg=md,
        holds=holds,
        gap=pd - md,
        witness=witness,
    )


FAMILIES = ("complete-bipartite", "barbell")


def build_family(family: str, r: int) -> Graph:
    """Construct K_{r,r}, or the complement of two K_r joined by a bridge."""
    if r < 2:
        raise UndefinedInputError(f"family parameter r must be >= 2, got {r}")
    if family == "complete-bipartite":
        return Graph.from_edges(2 * r, [(u, v) for u in range(r) for v in range(r, 2 * r)])
    if family == "barbell":
        edges = [(u, v) for u in range(r) for v in range(u + 1, r)]
        edges += [(u, v) for u in range(r, 2 * r) for v in range(u + 1, 2 * r)]
        edges.append((r - 1, r))
        return complement(Graph.from_edges(2 * r, edges))
    raise UndefinedInputError(f"unknown family {family!r}; expected one of {FAMILIES}")


def gap_series(family: str, r: int) -> int:
    """pd - max_deg for the family member; r - 1 for K_{r,r}, r - 2 for the barbell complement."""
    report = classify(build_family(family, r))
    if not report.has_2linear:
        raise InternalInvariantError(f"family {family} member r={r} lost 2-linearity")
    return report.gap


def family_report(family: str, r: int) -> dict:
    """Classification of a family member plus any applicable discrepancy notes."""
    g = build_family(family, r)
    report = classify(g)
    notes = [KRR_GAP_NOTE] if family == "complete-bipartite" else []
    return {
        "family": family,
        "r": r,
        "graph6": report.graph6,
        "pd": report.pd,
        "max_deg": report.max_deg,
        "gap": report.gap,
        "holds": report.holds,
        "notes": notes,
    }
