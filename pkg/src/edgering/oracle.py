"""Brute-force graded Betti numbers from induced-subcomplex homology.

beta_(i,j) = sum over vertex subsets W of size j of rank H~_(j-i-1) of the
restriction to W, over the rationals.  The empty restriction contributes
rank 1 in dimension -1, which is what makes beta_(0,0) = 1 come out of the
sum instead of being special-cased.

Ground truth for everything the closed formulas claim; no quasi-forest
assumptions are made here.  Restrictions repeat heavily across calls, so
homology is memoized on the label-normalized facet masks; results are
bit-identical with the memo disabled.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, reduced_homology_ranks, restrict
from .errors import InternalInvariantError, UnsupportedSizeError
from .invariants import BettiTable

ORACLE_VERTEX_CAP = 12

_HOMOLOGY_MEMO: dict[tuple[int, ...], dict[int, int]] = {}


def _normalized_key(c: SimplicialComplex) -> tuple[int, ...]:
    """Facet bitmasks after order-preserving relabeling of the ground set."""
    pos = {v: i for i, v in enumerate(c.vertices)}
    masks = []
    for f in c.facets:
        m = 0
        for v in f:
            m |= 1 << pos[v]
        masks.append(m)
    return tuple(sorted(masks))


def _restriction_ranks(c: SimplicialComplex, memo: bool) -> dict[int, int]:
    if not memo:
        return reduced_homology_ranks(c)
    key = _normalized_key(c)
    ranks = _HOMOLOGY_MEMO.get(key)
    if ranks is None:
        ranks = reduced_homology_ranks(c)
        _HOMOLOGY_MEMO[key] = ranks
    return ranks


class OracleBettiTable(BettiTable):
    """Betti table plus the ground-set size and the number of subsets examined."""

    def __init__(self, entries: dict[tuple[int, int], int], n: int, subsets_examined: int):
        super().__init__(entries)
        self.n = n
        self.subsets_examined = subsets_examined
        for (i, j), v in self.entries.items():
            if j < i or j > n:
                raise InternalInvariantError(f"impossible Betti position {(i, j)}")


def hochster_betti(c: SimplicialComplex, *, memo: bool = True) -> OracleBettiTable:
    """Exact Betti table of the Stanley-Reisner ring of c, by subset summation."""
    n = c.n
    if n > ORACLE_VERTEX_CAP:
        raise UnsupportedSizeError(f"oracle capped at {ORACLE_VERTEX_CAP} vertices, got {n}")
    labels = c.vertices
    entries: dict[tuple[int, int], int] = {}
    for mask in range(1 << n):
        w = [labels[i] for i in range(n) if mask >> i & 1]
        sub = restrict(c, w)
        ranks = _restriction_ranks(sub, memo)
        j = len(w)
        for dim, h in ranks.items():
            if h:
                i = j - 1 - dim
                entries[(i, j)] = entries.get((i, j), 0) + h
    if entries.get((0, 0)) != 1:
        raise InternalInvariantError("Hochster sum did not produce beta_(0,0) = 1")
    return OracleBettiTable(entries, n, 1 << n)


def oracle_pd(table: OracleBettiTable) -> int:
    """Largest homological index with a nonzero entry; 0 for the polynomial ring."""
    return max((i for i, _ in table.entries), default=0)


def oracle_is_2linear(table: OracleBettiTable) -> bool:
    """True iff every nonzero beta_(i,j) with i >= 1 sits at j = i + 1."""
    return all(j == i + 1 for i, j in table.entries if i >= 1)


def clear_memo() -> None:
    _HOMOLOGY_MEMO.clear()
