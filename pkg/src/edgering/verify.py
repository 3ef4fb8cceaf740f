"""Exhaustive formula-vs-oracle sweeps over all labeled graphs of a given size.

For every graph G the sweep computes the complement, recognizes chordality
(and re-derives it by brute-force induced-cycle search), and on the 2-linear
side runs the whole closed-formula pipeline, recording any graph that
violates a claimed identity.  The oracle variant additionally computes the
Hochster Betti table of the flag complex of the complement and compares it
entry by entry.

The per-graph worker operates on bitmask rows throughout; a test pins its
agreement with the public object-level API.  Chunks of the edge-mask range
can be processed by a worker pool; results merge deterministically in mask
order, so the outcome is identical for every worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from itertools import combinations

from .chordal import _clique_masks_from_peo, _first_peo_violation, _mcs_order
from .complexes import SimplicialComplex, _maximal_clique_masks
from .graphs import Graph, bits, rows_from_edge_mask, to_graph6
from .invariants import one_minus_t_pow
from .oracle import hochster_betti, oracle_is_2linear, oracle_pd

VIOLATION_KINDS = (
    "chordal_vs_bruteforce",
    "hilbert_mismatch",
    "numerator_degree",
    "witness_equivalence",
    "dtree_not_holds",
    "isolated_not_holds",
    "cm_inconsistent",
    "cm_not_holds",
    "clique_paths_disagree",
    "twolinear_vs_chordal",
    "betti_mismatch",
    "ab_identity",
    "knum_mismatch",
)

COUNT_KINDS = (
    "total",
    "twolinear",
    "holds",
    "fails",
    "single_facet",
    "witness",
    "cm",
    "dtree",
    "isolated",
)


@dataclass
class SweepResult:
    n: int
    counts: dict[str, int] = field(default_factory=lambda: {k: 0 for k in COUNT_KINDS})
    violations: dict[str, list[str]] = field(
        default_factory=lambda: {k: [] for k in VIOLATION_KINDS}
    )

    def merge(self, other: "SweepResult") -> None:
        for k, v in other.counts.items():
            self.counts[k] += v
        for k, lst in other.violations.items():
            self.violations[k].extend(lst)

    def all_clean(self) -> bool:
        return all(not lst for lst in self.violations.values())


def _long_cycle_subsets(n: int) -> list[int]:
    out = []
    for size in range(4, n + 1):
        for combo in combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
    return out


def has_long_induced_cycle(n: int, rows: list[int] | tuple[int, ...], subsets=None) -> bool:
    """Brute force: does some vertex subset of size >= 4 induce a chordless cycle?

    Independent of the elimination-ordering recognizer; an induced cycle is
    exactly a connected 2-regular induced subgraph.
    """
    if subsets is None:
        subsets = _long_cycle_subsets(n)
    for s in subsets:
        m = s
        while m:
            low = m & -m
            m ^= low
            if (rows[low.bit_length() - 1] & s).bit_count() != 2:
                break
        else:
            low = s & -s
            reached = low
            while True:
                grow = reached
                mm = reached
                while mm:
                    lb = mm & -mm
                    mm ^= lb
                    grow |= rows[lb.bit_length() - 1] & s
                if grow == reached:
                    break
                reached = grow
            if reached == s:
                return True
    return False


def _fast_decomposition(cliques: list[int]) -> tuple[list[int], list[int]]:
    """Quasi-forest order of clique masks: (ordered facet masks, attachment sizes).

    Mirrors clique_tree + quasi_forest_order: maximum-weight spanning forest
    with (-weight, i, j) tie-breaking, components by smallest vertex, root =
    clique with the smallest minimum vertex, preorder with ascending children.
    """
    cl = sorted(cliques, key=lambda m: sorted(bits(m)))
    k = len(cl)
    weighted = []
    for i in range(k):
        ci = cl[i]
        for j in range(i + 1, k):
            w = (ci & cl[j]).bit_count()
            if w:
                weighted.append((-w, i, j))
    weighted.sort()
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adj: list[list[int]] = [[] for _ in range(k)]
    for _, i, j in weighted:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
            adj[i].append(j)
            adj[j].append(i)
    comps: list[list[int]] = []
    seen = [False] * k
    for i in range(k):
        if seen[i]:
            continue
        comp = [i]
        seen[i] = True
        stack = [i]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    comp.append(b)
                    stack.append(b)
        comps.append(comp)
    comps.sort(key=lambda idxs: min((cl[i] & -cl[i]).bit_length() for i in idxs))
    order: list[int] = []
    for comp in comps:
        root = min(comp, key=lambda i: ((cl[i] & -cl[i]).bit_length(), i))
        visited = {root}
        stack = [root]
        while stack:
            a = stack.pop()
            order.append(a)
            for b in sorted(adj[a], reverse=True):
                if b not in visited:
                    visited.add(b)
                    stack.append(b)
    facets = [cl[i] for i in order]
    attach = []
    union = 0
    for i, f in enumerate(facets):
        if i:
            attach.append((f & union).bit_count())
        union |= f
    return facets, attach


def _fast_fvector(facets: list[int]) -> list[int]:
    seen = {0}
    for fm in facets:
        sub = fm
        while sub:
            seen.add(sub)
            sub = (sub - 1) & fm
    top = max((m.bit_count() for m in facets), default=0)
    counts = [0] * (top + 1)
    for m in seen:
        counts[m.bit_count()] += 1
    return counts


def _fast_dtree_exists(facets: list[int], attach: list[int]) -> bool:
    """Mask-level twin of invariants.d_tree_signature's search (k <= 8 per sweep)."""
    k = len(facets)
    if k == 1:
        return True
    par = [-1] * k
    union = 0
    for i, f in enumerate(facets):
        if i:
            inter = f & union
            if inter:
                par[i] = next(j for j in range(i) if inter & ~facets[j] == 0)
        union |= f
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, p in enumerate(par):
        if p >= 0:
            adj[i].append(p)
            adj[p].append(i)
    comps: list[list[int]] = []
    seen = [False] * k
    for i in range(k):
        if seen[i]:
            continue
        comp = [i]
        seen[i] = True
        stack = [i]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if not seen[b]:
                    seen[b] = True
                    comp.append(b)
                    stack.append(b)
        comps.append(comp)
    big = [c for c in comps if not (len(c) == 1 and facets[c[0]].bit_count() == 1)]
    if not big:
        return True
    if len(big) == 1:
        comp = big[0]
        for root in comp:
            ok = True
            seen2 = {root}
            stack = [root]
            while stack and ok:
                a = stack.pop()
                for b in adj[a]:
                    if b not in seen2:
                        fb = facets[b]
                        if (fb & facets[a]).bit_count() != fb.bit_count() - 1:
                            ok = False
                            break
                        seen2.add(b)
                        stack.append(b)
            if ok:
                return True
    # exhaustive fallback over one-new-vertex orderings
    full = (1 << k) - 1
    memo: dict[int, bool] = {}

    def feasible(used: int, union_mask: int) -> bool:
        if used == full:
            return True
        if used in memo:
            return memo[used]
        ok = False
        for i in range(k):
            if used >> i & 1:
                continue
            f = facets[i]
            inter = f & union_mask
            if inter.bit_count() != f.bit_count() - 1:
                continue
            if inter and not any(used >> j & 1 and inter & ~facets[j] == 0 for j in range(k)):
                continue
            if feasible(used | 1 << i, union_mask | f):
                ok = True
                break
        memo[used] = ok
        return ok

    return any(feasible(1 << i, facets[i]) for i in range(k))


def _to_g6(n: int, mask: int) -> str:
    return to_graph6(Graph.from_edge_mask(n, mask))


def sweep_chunk(n: int, start: int, stop: int, with_oracle: bool) -> SweepResult:
    """Process edge masks start..stop-1; pure function of its arguments."""
    res = SweepResult(n)
    counts = res.counts
    vio = res.violations
    subsets = _long_cycle_subsets(n)
    full = (1 << n) - 1
    pow_cache = [one_minus_t_pow(j) for j in range(n + 1)]
    for mask in range(start, stop):
        counts["total"] += 1
        rows = rows_from_edge_mask(n, mask)
        crow = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
        elim = _mcs_order(n, crow)[::-1]
        chordal_flag = _first_peo_violation(n, crow, elim) is None
        if chordal_flag == has_long_induced_cycle(n, crow, subsets):
            vio["chordal_vs_bruteforce"].append(_to_g6(n, mask))
        if with_oracle:
            complex_facets = _bk_masks(n, crow)
            cx = SimplicialComplex.of(n, [list(bits(m)) for m in complex_facets])
            table = hochster_betti(cx)
            if oracle_is_2linear(table) != chordal_flag:
                vio["twolinear_vs_chordal"].append(_to_g6(n, mask))
        if not chordal_flag:
            if with_oracle:
                _check_knum(n, table, _fast_fvector(complex_facets), pow_cache, vio, mask)
            continue
        counts["twolinear"] += 1
        cliques = _clique_masks_from_peo(n, crow, elim)
        if with_oracle and set(cliques) != set(complex_facets):
            vio["clique_paths_disagree"].append(_to_g6(n, mask))
        facets, attach = _fast_decomposition(cliques)
        k = len(facets)
        dims = [f.bit_count() - 1 for f in facets]
        # Hilbert numerator from the decomposition
        num = [0] * (n + 1)
        for d in dims:
            for i, c in enumerate(pow_cache[n - d - 1]):
                num[i] += c
        for r in attach:
            # attach entries are sizes; dimension = size - 1, exponent n - dim - 1 = n - size
            for i, c in enumerate(pow_cache[n - r]):
                num[i] -= c
        fcounts = _fast_fvector(facets)
        num2 = [0] * (n + 1)
        for s, count in enumerate(fcounts):
            if count:
                row = pow_cache[n - s]
                for i, c in enumerate(row):
                    num2[s + i] += count * c
        if num != num2:
            vio["hilbert_mismatch"].append(_to_g6(n, mask))
        r_min = min(attach) - 1 if attach else None
        deg = n
        while deg > 0 and num[deg] == 0:
            deg -= 1
        if k >= 2 and deg != n - r_min - 1:
            vio["numerator_degree"].append(_to_g6(n, mask))
        pd = 0 if k == 1 else n - r_min - 2
        depth_val = n if k == 1 else r_min + 2
        dim_val = 1 + max(dims)
        max_deg = max(r.bit_count() for r in rows)
        holds = pd == max_deg
        counts["holds"] += holds
        counts["fails"] += not holds
        if k == 1:
            counts["single_facet"] += 1
        # attach holds intersection SIZES, so r_dim = size - 1 and the CM
        # condition r_dim = d - 1 reads size == d
        cm_structural = k == 1 or (
            all(d == dims[0] for d in dims) and all(r == dims[0] for r in attach)
        )
        if cm_structural != (depth_val == dim_val):
            vio["cm_inconsistent"].append(_to_g6(n, mask))
        if cm_structural:
            counts["cm"] += 1
            if not holds:
                vio["cm_not_holds"].append(_to_g6(n, mask))
        if k >= 2:
            vcount = [0] * n
            for f in facets:
                m = f
                while m:
                    low = m & -m
                    m ^= low
                    vcount[low.bit_length() - 1] += 1
            target = r_min + 2
            witness = any(
                f.bit_count() == target
                and sum(1 for v in bits(f) if vcount[v] == 1) == 1
                for f in facets
            )
            counts["witness"] += witness
            if witness != holds:
                vio["witness_equivalence"].append(_to_g6(n, mask))
        if any(f.bit_count() == 1 for f in facets):
            counts["isolated"] += 1
            if not holds:
                vio["isolated_not_holds"].append(_to_g6(n, mask))
        if _fast_dtree_exists(facets, attach):
            counts["dtree"] += 1
            if not holds:
                vio["dtree_not_holds"].append(_to_g6(n, mask))
        if with_oracle:
            formula_entries = {}
            for i in range(1, deg):
                value = (-1) ** i * num[i + 1]
                if value:
                    formula_entries[(i, i + 1)] = value
            if formula_entries != table.entries:
                vio["betti_mismatch"].append(_to_g6(n, mask))
            if depth_val + oracle_pd(table) != n:
                vio["ab_identity"].append(_to_g6(n, mask))
            _check_knum(n, table, fcounts, pow_cache, vio, mask)
    return res


def _bk_masks(n: int, rows: list[int]) -> list[int]:
    return _maximal_clique_masks(n, rows)


def _check_knum(n, table, fcounts, pow_cache, vio, mask) -> None:
    """Numerator coefficients must equal alternating Betti sums per degree."""
    num = [0] * (n + 1)
    for s, count in enumerate(fcounts):
        if count:
            row = pow_cache[n - s]
            for i, c in enumerate(row):
                num[s + i] += count * c
    sums = [0] * (n + 1)
    sums[0] = 1
    for (i, j), v in table.entries.items():
        sums[j] += (-1) ** i * v
    if sums != num:
        vio["knum_mismatch"].append(_to_g6(n, mask))


def _chunk_worker(args: tuple[int, int, int, bool]) -> SweepResult:
    return sweep_chunk(*args)


def run_sweep(n: int, *, jobs: int = 1, with_oracle: bool = False, chunk: int = 1 << 15) -> SweepResult:
    """Sweep all 2^(n(n-1)/2) labeled graphs; deterministic for every job count."""
    total = 1 << (n * (n - 1) // 2)
    result = SweepResult(n)
    if jobs <= 1:
        result.merge(sweep_chunk(n, 0, total, with_oracle))
        return result
    ranges = [(n, lo, min(lo + chunk, total), with_oracle) for lo in range(0, total, chunk)]
    with multiprocessing.Pool(jobs) as pool:
        for part in pool.imap(_chunk_worker, ranges):
            result.merge(part)
    return result
