"""Complexes shared by the test modules."""
from __future__ import annotations

from itertools import combinations

from srcore.complex import SimplicialComplex, complete_skeleton, cycle, disjoint_union, simplex

TRIANGLE_WITH_TAIL = SimplicialComplex.from_facets(4, [[0, 1, 2], [2, 3]], ["x1", "x2", "x3", "x4"])
EDGE = simplex(2)
TRIANGLE_GRAPH = cycle(3)
FILLED_TRIANGLE = simplex(3)



def family() -> list[tuple[str, SimplicialComplex]]:
    """Cycles, every Delta_{d,n}, a triangle with a tail and small unions, all on n <= 6."""
    out = [(f"cycle{n}", cycle(n)) for n in range(3, 7)]
    out += [(f"skeleton{d},{n}", complete_skeleton(d, n)) for n in range(2, 7) for d in range(1, n)]
    out.append(("triangle+tail", TRIANGLE_WITH_TAIL))
    parts = [("edge", EDGE), ("trigraph", TRIANGLE_GRAPH), ("filledtri", FILLED_TRIANGLE)]
    for (la, a), (lb, b) in _pairs(parts):
        if a.n_vertices + b.n_vertices <= 6:
            out.append((f"{la}+{lb}", disjoint_union(a, b)))
    return out


def _pairs(parts):
    for i in range(len(parts)):
        for j in range(i, len(parts)):
            yield parts[i], parts[j]


def graphs_upto(n_max: int) -> list[SimplicialComplex]:
    """Complexes of dimension <= 1 with at least one edge, up to vertex relabeling."""
    seen = set()
    out = []
    for n in range(2, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for k in range(1, len(pairs) + 1):
            for edges in combinations(pairs, k):
                covered = {v for e in edges for v in e}
                facets = [list(e) for e in edges] + [[v] for v in range(n) if v not in covered]
                key = _canonical(n, edges)
                if key in seen:
                    continue
                seen.add(key)
                out.append(SimplicialComplex.from_facets(n, facets))
    return out


def _canonical(n, edges):
    from itertools import permutations

    return min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in permutations(range(n))), n
