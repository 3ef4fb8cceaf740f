"""Independent reference checkers shared by the test modules.

Everything here is deliberately written set-based and naively, without
reusing the package's bitmask machinery, so that library results are checked
against genuinely independent code paths.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from edgering.graphs import Graph


def check_peo(g: Graph, peo) -> bool:
    """Set-based perfect elimination ordering verifier."""
    if sorted(peo) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(peo)}
    for idx, v in enumerate(peo):
        later = [u for u in g.neighbors(v) if pos[u] > idx]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def check_chordless_cycle(g: Graph, cycle) -> bool:
    """Verify an induced cycle certificate: length >= 4, no chord."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        if not g.has_edge(cycle[i], cycle[(i + 1) % k]):
            return False
    for i, j in combinations(range(k), 2):
        if (j - i) % k in (1, k - 1):
            continue
        if g.has_edge(cycle[i], cycle[j]):
            return False
    return True


def brute_is_chordal(g: Graph) -> bool:
    """Chordality by enumerating all induced cycles of length >= 4."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            degs = [sum(1 for u in sub if g.has_edge(v, u)) for v in sub]
            if any(d != 2 for d in degs):
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                a = stack.pop()
                for b in sub:
                    if b not in seen and g.has_edge(a, b):
                        seen.add(b)
                        stack.append(b)
            if len(seen) == size:
                return False
    return True


def brute_is_quasi_forest(facets) -> bool:
    """Try every facet ordering against the recursive attachment condition."""
    sets = [frozenset(f) for f in facets]
    for perm in permutations(sets):
        union: frozenset = frozenset()
        ok = True
        for i, f in enumerate(perm):
            if i:
                inter = f & union
                if inter and not any(inter <= e for e in perm[:i]):
                    ok = False
                    break
            union |= f
        if ok:
            return True
    return False


def random_graph(rng: random.Random, n: int) -> Graph:
    mask = rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0
    return Graph.from_edge_mask(n, mask)


def random_quasi_forest_facets(rng: random.Random, max_n: int = 10) -> list[frozenset[int]]:
    """Build a quasi-forest facet list by attaching simplices one at a time."""
    first = rng.randint(1, min(4, max_n))
    facets = [frozenset(range(first))]
    fresh = first
    while True:
        grow = rng.randint(1, 3)
        if fresh + grow > max_n or rng.random() < 0.25:
            break
        base = facets[rng.randrange(len(facets))]
        attach_size = rng.randint(0, len(base) - 1)
        attach = frozenset(rng.sample(sorted(base), attach_size))
        facets.append(attach | frozenset(range(fresh, fresh + grow)))
        fresh += grow
    return facets


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240831)
