"""Closed-form ring invariants of a quasi-forest decomposition.

For an ordered quasi-forest with facet dimensions d_1..d_k and attachment
dimensions r_2..r_k (r = min r_i):

    Hilbert series  = sum_i 1/(1-t)^(d_i+1) - sum_(i>=2) 1/(1-t)^(r_i+1)
    proj. dimension = n - r - 2          depth = r + 2
    Krull dimension = 1 + max d_i        CM  iff  all d_i = d and all r_i = d-1

The single-facet case is the polynomial ring by convention: pd = 0,
depth = n, Hilbert series 1/(1-t)^n.

Series are kept un-reduced over (1-t)^n (n = vertex count); this canonical
form is what Betti extraction reads: the numerator of a 2-linear resolution
is 1 - b_(1,2) t^2 + b_(2,3) t^3 - ... All arithmetic is exact (Python ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING

from .chordal import QuasiForestDecomposition
from .errors import (
    ContractViolationError,
    InternalInvariantError,
    NotTwoLinearError,
    UnsupportedSizeError,
)

if TYPE_CHECKING:
    from .complexes import FVector


@lru_cache(maxsize=None)
def one_minus_t_pow(k: int) -> tuple[int, ...]:
    """Coefficients of (1-t)^k."""
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1-t)^denom_power with integer coefficients."""

    numerator: tuple[int, ...]
    denom_power: int

    def __post_init__(self) -> None:
        if self.denom_power < 0:
            raise ContractViolationError("negative denominator power")
        object.__setattr__(self, "numerator", _trim(list(self.numerator)))

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    def coefficient(self, i: int) -> int:
        return self.numerator[i] if 0 <= i <= self.degree else 0

    def reduced(self) -> tuple[tuple[int, ...], int]:
        """Cancel (1-t) factors for display; equality stays on the canonical form."""
        num = list(self.numerator)
        power = self.denom_power
        while power > 0 and sum(num) == 0 and any(num):
            quotient = []
            carry = 0
            for c in num[:-1]:
                carry += c
                quotient.append(carry)
            num = quotient or [0]
            power -= 1
        return _trim(num), power

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c:+d}" if i == 0 else f"{c:+d}*t^{i}")
        body = " ".join(terms) if terms else "0"
        return f"({body}) / (1-t)^{self.denom_power}"


class BettiTable:
    """Graded Betti numbers as a map (i, j) -> positive value; (0,0) is implicit 1."""

    def __init__(self, entries: dict[tuple[int, int], int]):
        clean = {}
        for (i, j), v in entries.items():
            if v < 0:
                raise ContractViolationError(f"negative Betti number at {(i, j)}")
            if v:
                if (i, j) == (0, 0):
                    if v != 1:
                        raise ContractViolationError("beta_(0,0) must be 1")
                    continue
                clean[(i, j)] = v
        self.entries = dict(sorted(clean.items()))

    def beta(self, i: int, j: int) -> int:
        if (i, j) == (0, 0):
            return 1
        return self.entries.get((i, j), 0)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def items(self):
        return self.entries.items()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BettiTable({self.entries})"


def hilbert_from_decomposition(qfd: QuasiForestDecomposition) -> HilbertSeries:
    """Expand the facet/attachment series over (1-t)^n with exact binomials."""
    n = qfd.n
    coeffs = [0] * (n + 1)
    for d in qfd.dims:
        for i, c in enumerate(one_minus_t_pow(n - d - 1)):
            coeffs[i] += c
    for r in qfd.attach_dims:
        for i, c in enumerate(one_minus_t_pow(n - r - 1)):
            coeffs[i] -= c
    series = HilbertSeries(tuple(coeffs), n)
    if series.coefficient(0) != 1:
        raise InternalInvariantError("Hilbert numerator must start at 1")
    if qfd.k >= 2:
        expected_degree = n - min(qfd.attach_dims) - 1
        if series.degree != expected_degree:
            raise InternalInvariantError(
                f"numerator degree {series.degree} != n - r_min - 1 = {expected_degree}"
            )
    elif series.numerator != (1,):
        raise InternalInvariantError("single facet must give numerator 1")
    return series


def hilbert_from_fvector(fv: "FVector", n: int) -> HilbertSeries:
    """Standard Stanley-Reisner Hilbert series sum_s f_(s-1) t^s/(1-t)^s over (1-t)^n."""
    if len(fv.counts) - 1 > n:
        raise ContractViolationError("f-vector has faces larger than the ground set")
    coeffs = [0] * (n + 1)
    for s, count in enumerate(fv.counts):
        if count == 0:
            continue
        for i, c in enumerate(one_minus_t_pow(n - s)):
            coeffs[s + i] += count * c
    return HilbertSeries(tuple(coeffs), n)


def betti_from_numerator(h: HilbertSeries) -> BettiTable:
    """Read b_(i,i+1) = (-1)^i * p_(i+1) off a 2-linear Hilbert numerator."""
    p = h.numerator
    if p[0] != 1:
        raise NotTwoLinearError(f"numerator constant term {p[0]} != 1")
    if len(p) > 1 and p[1] != 0:
        raise NotTwoLinearError("numerator has a t^1 term; input is not 2-linear")
    entries = {}
    for i in range(1, len(p) - 1):
        value = (-1) ** i * p[i + 1]
        if value < 0:
            raise NotTwoLinearError(f"sign violation at degree {i + 1}; input is not 2-linear")
        if value:
            entries[(i, i + 1)] = value
    return BettiTable(entries)


def projective_dimension(qfd: QuasiForestDecomposition) -> int:
    if qfd.k == 1:
        return 0
    return qfd.n - min(qfd.attach_dims) - 2


def depth(qfd: QuasiForestDecomposition) -> int:
    if qfd.k == 1:
        return qfd.n
    return min(qfd.attach_dims) + 2


def krull_dim(qfd: QuasiForestDecomposition) -> int:
    return 1 + max(qfd.dims)


def is_cm(qfd: QuasiForestDecomposition) -> bool:
    """Cohen-Macaulay test; cross-checked against depth = Krull dimension."""
    if qfd.k == 1:
        structural = True
    else:
        d = qfd.dims[0]
        structural = all(di == d for di in qfd.dims) and all(r == d - 1 for r in qfd.attach_dims)
    if structural != (depth(qfd) == krull_dim(qfd)):
        raise InternalInvariantError("CM structural test disagrees with depth = dim")
    return structural


D_TREE_EXHAUSTIVE_CAP = 8


def d_tree_signature(qfd: QuasiForestDecomposition) -> tuple[int, ...] | None:
    """Nonincreasing facet dimensions iff some ordering attaches every facet
    along a face of codimension one (each step adds exactly one vertex).

    Searches rootings of a clique tree of the facets; below the exhaustive
    cap a subset-DP over all valid orderings is the fallback authority for a
    negative answer, above it a failed root search raises UnsupportedSizeError
    rather than guessing.
    """
    signature = tuple(sorted(qfd.dims, reverse=True))
    if qfd.k == 1:
        return signature
    if _root_search(qfd):
        return signature
    if qfd.k <= D_TREE_EXHAUSTIVE_CAP:
        return signature if _ordering_dp(qfd) else None
    raise UnsupportedSizeError(
        f"d-tree recognition above {D_TREE_EXHAUSTIVE_CAP} facets is inconclusive "
        "when the clique-tree root search fails"
    )


def _parent_forest(qfd: QuasiForestDecomposition) -> list[int]:
    """parent[i] = index of the first earlier facet containing attachment i, else -1."""
    parents = [-1] * qfd.k
    union: frozenset[int] = frozenset()
    for i, f in enumerate(qfd.facets):
        if i:
            inter = f & union
            if inter:
                parents[i] = next(j for j in range(i) if inter <= qfd.facets[j])
        union |= f
    return parents


def _root_search(qfd: QuasiForestDecomposition) -> bool:
    """Try every root of every tree; non-first components must be isolated vertices."""
    parents = _parent_forest(qfd)
    adj: dict[int, list[int]] = {i: [] for i in range(qfd.k)}
    for i, p in enumerate(parents):
        if p >= 0:
            adj[i].append(p)
            adj[p].append(i)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for i in range(qfd.k):
        if i in seen:
            continue
        comp = [i]
        seen.add(i)
        stack = [i]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    comp.append(b)
                    stack.append(b)
        comps.append(comp)
    big = [comp for comp in comps if not (len(comp) == 1 and len(qfd.facets[comp[0]]) == 1)]
    if len(big) > 1:
        return False
    if not big:
        return True
    comp = big[0]
    for root in comp:
        if _root_works(qfd, adj, comp, root):
            return True
    return False


def _root_works(qfd, adj, comp, root) -> bool:
    seen = {root}
    stack = [root]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in seen:
                if len(qfd.facets[b] & qfd.facets[a]) != len(qfd.facets[b]) - 1:
                    return False
                seen.add(b)
                stack.append(b)
    return True


def _ordering_dp(qfd: QuasiForestDecomposition) -> bool:
    """Exhaustive check over all quasi-forest orderings with one-new-vertex steps."""
    k = qfd.k
    facets = qfd.facets
    memo: dict[int, bool] = {}
    full = (1 << k) - 1

    def feasible(used: int, union: frozenset[int]) -> bool:
        if used == full:
            return True
        if used in memo:
            return memo[used]
        ok = False
        for i in range(k):
            if used >> i & 1:
                continue
            f = facets[i]
            inter = f & union
            if len(inter) != len(f) - 1:
                continue
            if inter and not any(used >> j & 1 and inter <= facets[j] for j in range(k)):
                continue
            if feasible(used | 1 << i, union | f):
                ok = True
                break
        memo[used] = ok
        return ok

    return any(feasible(1 << i, facets[i]) for i in range(k))


@dataclass(frozen=True)
class InvariantReport:
    """All ring invariants of one decomposition, mutually cross-checked."""

    n: int
    k: int
    r_min: int | None
    pd: int
    depth: int
    krull_dim: int
    is_cm: bool
    d_tree: tuple[int, ...] | None

    def __post_init__(self) -> None:
        if self.pd + self.depth != self.n:
            raise InternalInvariantError("pd + depth != n (Auslander-Buchsbaum)")
        if self.depth > self.krull_dim:
            raise InternalInvariantError("depth exceeds Krull dimension")
        if self.is_cm != (self.depth == self.krull_dim):
            raise InternalInvariantError("CM flag inconsistent with depth/dimension")


def invariant_report(qfd: QuasiForestDecomposition) -> InvariantReport:
    return InvariantReport(
        n=qfd.n,
        k=qfd.k,
        r_min=qfd.r_min,
        pd=projective_dimension(qfd),
        depth=depth(qfd),
        krull_dim=krull_dim(qfd),
        is_cm=is_cm(qfd),
        d_tree=d_tree_signature(qfd),
    )
