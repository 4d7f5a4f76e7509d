"""Simplicial complexes stored as facet bitmasks."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

MAX_VERTICES = 64

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class ComplexError(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _facet_key(mask: int):
    return vertices_of(mask)


def _variable_name(name: str, index: int) -> str:
    if _IDENT.match(name):
        return name
    return f"x{name}" if re.match(r"^[0-9]+$", name) else f"x{index + 1}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex count plus inclusion-maximal facets (bitmasks), canonically ordered.

    Facets are sorted lexicographically by vertex tuple.  ``names`` holds
    the variable name of each vertex.
    """

    n_vertices: int
    facet_masks: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n_vertices)))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]], names: Sequence[str] | None = None) -> "SimplicialComplex":
        if n < 1 or n > MAX_VERTICES:
            raise ComplexError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        masks = []
        for f in facets:
            f = list(f)
            for v in f:
                if not 0 <= v < n:
                    raise ComplexError(f"vertex index {v} out of range for n={n}")
            if f:
                masks.append(mask_of(f))
        if not masks:
            raise ComplexError("empty facet list")
        masks = sorted(set(masks))
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        covered = 0
        for m in maximal:
            covered |= m
        missing = [v for v in range(n) if not covered >> v & 1]
        if missing:
            raise ComplexError(f"vertices {missing} lie in no facet")
        if names is not None:
            names = [str(x) for x in names]
            if len(names) != n:
                raise ComplexError(f"expected {n} vertex names, got {len(names)}")
            var_names = tuple(_variable_name(s, i) for i, s in enumerate(names))
            if len(set(var_names)) != n:
                raise ComplexError("vertex names are not distinct")
        else:
            var_names = ()
        return cls(n, tuple(sorted(maximal, key=_facet_key)), var_names)

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self.facet_masks)

    @property
    def all_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_simplex(self) -> bool:
        return len(self.facet_masks) == 1 and self.facet_masks[0] == self.all_mask

    @property
    def is_proper(self) -> bool:
        return not self.is_simplex

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facet_masks)

    def faces_of_dim(self, q: int) -> list[tuple[int, ...]]:
        """All ``q``-dimensional faces, sorted lexicographically."""
        size = q + 1
        if size < 0:
            return []
        if size == 0:
            return [()]
        seen = set()
        for f in self.facets:
            if len(f) >= size:
                seen.update(itertools.combinations(f, size))
        return sorted(seen)

    def with_names(self, names: Sequence[str]) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(self.n_vertices, self.facets, names)

    def __repr__(self):
        body = ", ".join("{" + ",".join(self.names[v] for v in f) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n_vertices}, facets=[{body}])"


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, facets)


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [range(n)])


def points(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, [[i] for i in range(n)])


def complete_skeleton(d: int, n: int) -> SimplicialComplex:
    """All ``d``-subsets of ``n`` vertices as facets (the complex Delta_{d,n})."""
    if not 1 <= d < n:
        raise ComplexError(f"complete skeleton needs 1 <= d < n, got d={d}, n={n}")
    if comb(n, d) > 100_000:
        raise ComplexError(f"C({n},{d}) facets is too many")
    return SimplicialComplex.from_facets(n, itertools.combinations(range(n), d))


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ComplexError(f"cycle needs n >= 3, got {n}")
    return SimplicialComplex.from_facets(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    off = a.n_vertices
    n = off + b.n_vertices
    if n > MAX_VERTICES:
        raise ComplexError(f"union has {n} vertices, limit is {MAX_VERTICES}")
    facets = list(a.facets) + [tuple(v + off for v in f) for f in b.facets]
    names = list(a.names) + list(b.names)
    if len(set(names)) != len(names):
        names = None
    return SimplicialComplex.from_facets(n, facets, names)


@dataclass(frozen=True)
class Component:
    complex: SimplicialComplex
    vertex_map: tuple[int, ...]  # local index -> index in the parent complex


def connected_components(c: SimplicialComplex) -> list[Component]:
    """Split ``c`` by vertex connectivity, ordered by smallest parent vertex."""
    remaining = list(c.facet_masks)
    groups: list[int] = []
    while remaining:
        g = remaining.pop(0)
        changed = True
        while changed:
            changed = False
            keep = []
            for f in remaining:
                if f & g:
                    g |= f
                    changed = True
                else:
                    keep.append(f)
            remaining = keep
        groups.append(g)
    groups.sort(key=lambda g: (g & -g))
    out = []
    for g in groups:
        verts = vertices_of(g)
        local = {v: i for i, v in enumerate(verts)}
        facets = [[local[v] for v in vertices_of(f)] for f in c.facet_masks if f & g]
        names = [c.names[v] for v in verts]
        out.append(Component(SimplicialComplex.from_facets(len(verts), facets, names), verts))
    return out


def is_connected(c: SimplicialComplex) -> bool:
    return len(connected_components(c)) == 1


def is_cycle_graph(c: SimplicialComplex) -> bool:
    """Connected graph with every vertex of degree two (up to relabeling)."""
    n = c.n_vertices
    if n < 3 or any(len(f) != 2 for f in c.facets) or len(c.facet_masks) != n:
        return False
    degree = [0] * n
    for a, b in c.facets:
        degree[a] += 1
        degree[b] += 1
    return all(x == 2 for x in degree) and is_connected(c)
