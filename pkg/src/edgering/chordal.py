"""Chordality recognition with certificates and quasi-forest decompositions.

Recognition runs maximum cardinality search (ties broken toward the lowest
vertex index) and verifies the reversed visit order as a perfect elimination
ordering.  A failed verification yields a chordless-cycle certificate which
is re-verified before being returned; a guaranteed fallback search covers
any case the fast extraction misses.

Clique trees are maximum-weight spanning forests of the clique intersection
graph (weight = separator size) with deterministic tie-breaking; traversing
each tree root-first realizes a quasi-forest ordering of the facets, with
attachment dimension -1 whenever a new connected component starts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolationError, InternalInvariantError
from .graphs import Graph, bits


@dataclass(frozen=True)
class Chordal:
    """Positive certificate: a verified perfect elimination ordering."""

    peo: tuple[int, ...]


@dataclass(frozen=True)
class NotChordal:
    """Negative certificate: an induced cycle of length >= 4 without a chord."""

    cycle: tuple[int, ...]


ChordalityResult = Chordal | NotChordal


def _mcs_order(n: int, rows: Sequence[int]) -> list[int]:
    order = []
    weights = [0] * n
    unvisited = (1 << n) - 1
    for _ in range(n):
        best = -1
        best_w = -1
        m = unvisited
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if weights[u] > best_w:
                best_w = weights[u]
                best = u
        order.append(best)
        unvisited ^= 1 << best
        m = rows[best] & unvisited
        while m:
            low = m & -m
            weights[low.bit_length() - 1] += 1
            m ^= low
    return order


def _first_peo_violation(
    n: int, rows: Sequence[int], elim: Sequence[int]
) -> tuple[int, int, int, int] | None:
    """First v (in elimination order) whose later neighbors are not a clique.

    Returns (v, x, y, later_mask) with x < y a non-adjacent later pair, or
    None when `elim` is a perfect elimination ordering.
    """
    remaining = (1 << n) - 1
    for v in elim:
        remaining ^= 1 << v
        lm = rows[v] & remaining
        m = lm
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            missing = lm & ~rows[u] & ~low
            missing &= ~(low - 1)  # only pairs (u, w) with w > u; w < u was checked at w
            if missing:
                w = (missing & -missing).bit_length() - 1
                return (v, u, w, remaining)
    return None


def _bfs_path(rows: Sequence[int], allowed: int, s: int, t: int) -> list[int] | None:
    """Shortest s-t path inside the induced subgraph on `allowed`, or None."""
    if not (allowed >> s & 1 and allowed >> t & 1):
        return None
    prev = {s: -1}
    frontier = [s]
    seen = 1 << s
    while frontier:
        nxt = []
        for a in frontier:
            m = rows[a] & allowed & ~seen
            while m:
                low = m & -m
                b = low.bit_length() - 1
                m ^= low
                seen |= low
                prev[b] = a
                if b == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                nxt.append(b)
        frontier = nxt
    return None


def _is_chordless_cycle(rows: Sequence[int], cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, v in enumerate(cycle):
        nxt = cycle[(i + 1) % k]
        if not rows[v] >> nxt & 1:
            return False
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if rows[cycle[i]] >> cycle[j] & 1:
                return False
    return True


def _normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, then pick the smaller direction."""
    k = len(cycle)
    start = min(range(k), key=lambda i: cycle[i])
    rotated = [cycle[(start + i) % k] for i in range(k)]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _cycle_fallback(n: int, rows: Sequence[int]) -> list[int]:
    """Guaranteed chordless-cycle search over all (v, x, y) anchor triples."""
    full = (1 << n) - 1
    for v in range(n):
        nb = rows[v]
        xs = list(bits(nb))
        for i, x in enumerate(xs):
            for y in xs[i + 1:]:
                if rows[x] >> y & 1:
                    continue
                allowed = (full & ~(rows[v] | 1 << v)) | 1 << x | 1 << y
                path = _bfs_path(rows, allowed, x, y)
                if path is not None:
                    return [v] + path
    raise InternalInvariantError("no chordless cycle found in a non-chordal graph")


def is_chordal(g: Graph) -> ChordalityResult:
    """Chordality with a verified certificate either way."""
    n, rows = g.n, g.rows
    elim = _mcs_order(n, rows)[::-1]
    viol = _first_peo_violation(n, rows, elim)
    if viol is None:
        return Chordal(tuple(elim))
    v, x, y, later = viol
    # shortest x-y path among later vertices avoiding v's closed later neighborhood
    allowed = (later & ~rows[v]) | 1 << x | 1 << y
    path = _bfs_path(rows, allowed, x, y)
    cycle = [v] + path if path is not None else None
    if cycle is None or not _is_chordless_cycle(rows, cycle):
        cycle = _cycle_fallback(n, rows)
        if not _is_chordless_cycle(rows, cycle):
            raise InternalInvariantError("fallback produced an invalid cycle certificate")
    return NotChordal(_normalize_cycle(cycle))


def _clique_masks_from_peo(n: int, rows: Sequence[int], elim: Sequence[int]) -> list[int]:
    """Candidate cliques {v} + later neighbors, filtered down to the maximal ones."""
    remaining = (1 << n) - 1
    cands = []
    for v in elim:
        remaining ^= 1 << v
        cands.append(1 << v | (rows[v] & remaining))
    out = []
    for i, c in enumerate(cands):
        if not any(c != d and c & d == c for d in cands):
            out.append(c)
    return out


def maximal_cliques_chordal(g: Graph, peo: Sequence[int]) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph, from a perfect elimination ordering."""
    n, rows = g.n, g.rows
    if sorted(peo) != list(range(n)):
        raise ContractViolationError("peo is not a permutation of the vertices")
    if _first_peo_violation(n, rows, peo) is not None:
        raise ContractViolationError("ordering is not a perfect elimination ordering")
    masks = _clique_masks_from_peo(n, rows, peo)
    return sorted((frozenset(bits(m)) for m in masks), key=sorted)


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques plus spanning-forest edges on clique indices."""

    cliques: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    def neighbors(self, i: int) -> list[int]:
        out = [b for a, b in self.edges if a == i] + [a for a, b in self.edges if b == i]
        return sorted(out)


class _DSU:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def clique_tree(cliques: Sequence[frozenset[int]], g: Graph) -> CliqueTree:
    """Maximum-weight spanning forest of the clique intersection graph.

    Weight is separator size; ties break lexicographically on index pairs, so
    the output is deterministic.  The running intersection property of the
    result is verified.
    """
    if isinstance(is_chordal(g), NotChordal):
        raise ContractViolationError("clique trees exist only for chordal graphs")
    cl = sorted((frozenset(c) for c in cliques), key=sorted)
    covered: set[int] = set()
    for i, c in enumerate(cl):
        if not c:
            raise ContractViolationError("empty clique")
        for u in c:
            for v in c:
                if u != v and not g.has_edge(u, v):
                    raise ContractViolationError(f"{sorted(c)} is not a clique")
        ext = set(range(g.n)) - c
        if any(all(g.has_edge(w, u) for u in c) for w in ext):
            raise ContractViolationError(f"{sorted(c)} is not maximal")
        covered |= c
    if covered != set(range(g.n)):
        raise ContractViolationError("cliques do not cover every vertex")
    k = len(cl)
    weighted = []
    for i in range(k):
        for j in range(i + 1, k):
            w = len(cl[i] & cl[j])
            if w:
                weighted.append((-w, i, j))
    weighted.sort()
    dsu = _DSU(k)
    edges = tuple((i, j) for negw, i, j in weighted if dsu.union(i, j))
    tree = CliqueTree(tuple(cl), edges)
    _verify_running_intersection(tree)
    return tree


def _verify_running_intersection(tree: CliqueTree) -> None:
    adj: dict[int, list[int]] = {i: [] for i in range(len(tree.cliques))}
    for a, b in tree.edges:
        adj[a].append(b)
        adj[b].append(a)
    verts = set().union(*tree.cliques) if tree.cliques else set()
    for v in verts:
        holders = [i for i, c in enumerate(tree.cliques) if v in c]
        seen = {holders[0]}
        stack = [holders[0]]
        hold = set(holders)
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in hold and b not in seen:
                    seen.add(b)
                    stack.append(b)
        if seen != hold:
            raise ContractViolationError(
                f"running intersection fails for vertex {v}; clique list is not the "
                "full set of maximal cliques of a chordal graph"
            )


@dataclass(frozen=True)
class QuasiForestDecomposition:
    """Ordered facets F_1..F_k with facet and attachment dimensions.

    dims[i] = |F_i| - 1; attach_dims[i-1] = |F_i intersect (F_1 u ... u F_(i-1))| - 1
    for i >= 2, where each such intersection is a face of a single earlier
    facet (-1 when a new component starts).  All invariants are re-derived
    and checked at construction time.
    """

    facets: tuple[frozenset[int], ...]
    dims: tuple[int, ...]
    attach_dims: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        k = len(self.facets)
        if k == 0:
            raise ContractViolationError("a quasi-forest has at least one facet")
        if len(self.dims) != k or len(self.attach_dims) != k - 1:
            raise InternalInvariantError("dimension lists inconsistent with facet count")
        union: frozenset[int] = frozenset()
        for i, f in enumerate(self.facets):
            if not f:
                raise ContractViolationError("empty facet")
            if len(f) - 1 != self.dims[i]:
                raise InternalInvariantError("facet dimension mismatch")
            if any(f <= g for j, g in enumerate(self.facets) if j != i):
                raise ContractViolationError("facets must be inclusion-free")
            if i:
                inter = f & union
                if len(inter) - 1 != self.attach_dims[i - 1]:
                    raise InternalInvariantError("attachment dimension mismatch")
                if self.attach_dims[i - 1] >= self.dims[i]:
                    raise InternalInvariantError("facet adds no new vertex")
                if inter and not any(inter <= g for g in self.facets[:i]):
                    raise ContractViolationError(
                        "attachment is not a face of a single earlier facet"
                    )
            union |= f
        if len(union) != self.n:
            raise InternalInvariantError("vertex count does not match facet union")
        total = sum(d + 1 for d in self.dims) - sum(r + 1 for r in self.attach_dims)
        if total != self.n:
            raise InternalInvariantError("inclusion-exclusion vertex count identity fails")

    @property
    def k(self) -> int:
        return len(self.facets)

    @property
    def r_min(self) -> int | None:
        """Smallest attachment dimension; None for a single facet."""
        return min(self.attach_dims) if self.attach_dims else None


def _forest_components(tree: CliqueTree) -> list[list[int]]:
    k = len(tree.cliques)
    dsu = _DSU(k)
    for a, b in tree.edges:
        dsu.union(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(dsu.find(i), []).append(i)
    comps = list(groups.values())
    comps.sort(key=lambda idxs: min(min(tree.cliques[i]) for i in idxs))
    return comps


def _preorder(tree: CliqueTree, root: int) -> list[int]:
    order = []
    seen = {root}
    stack = [root]
    while stack:
        a = stack.pop()
        order.append(a)
        for b in reversed(tree.neighbors(a)):
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return order


def quasi_forest_order(tree: CliqueTree, roots: dict[int, int] | None = None) -> QuasiForestDecomposition:
    """Order the facets root-first so every attachment is a face of its parent.

    Components are sorted by their smallest vertex; the default root of each
    component is its clique with the smallest minimum vertex.  `roots` may
    override the root per component index (used by root-invariance checks).
    """
    comps = _forest_components(tree)
    order: list[int] = []
    for ci, comp in enumerate(comps):
        if roots is not None and ci in roots:
            root = roots[ci]
            if root not in comp:
                raise ContractViolationError(f"root {root} is not in component {ci}")
        else:
            root = min(comp, key=lambda i: (min(tree.cliques[i]), i))
        order.extend(_preorder(tree, root))
    facets = tuple(tree.cliques[i] for i in order)
    dims = tuple(len(f) - 1 for f in facets)
    union: frozenset[int] = frozenset()
    attach = []
    for i, f in enumerate(facets):
        if i:
            attach.append(len(f & union) - 1)
        union |= f
    return QuasiForestDecomposition(facets, dims, tuple(attach), len(union))
