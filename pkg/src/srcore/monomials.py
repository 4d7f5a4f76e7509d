"""Monomials and monomial ideals of a Stanley-Reisner ring k[Delta].

A :class:`MonomialIdeal` lives in ``k[ambient]``; monomials whose support is
not a face of the ambient complex vanish there and are dropped from every
generating set.  A simplex ambient is the plain polynomial ring.
"""
from __future__ import annotations

import re
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SimplicialComplex, simplex


class Monomial(tuple):
    """Exponent vector; a tuple of non-negative ints."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "Monomial":
        e = [0] * n
        e[i] = power
        return cls(e)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> int:
        m = 0
        for i, e in enumerate(self):
            if e:
                m |= 1 << i
        return m

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial(a + b for a, b in zip(self, other))
        return NotImplemented

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self, other))

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``, the generator of ``(self) : (other)``."""
        return Monomial(max(a - b, 0) for a, b in zip(self, other))

    def is_zero_in(self, c: SimplicialComplex) -> bool:
        return not c.is_face(self.support)

    def format(self, names: Sequence[str]) -> str:
        parts = []
        for name, e in zip(names, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({tuple(self)})"


def grlex_key(m: Monomial):
    """Graded-lex: lower degree first; within a degree larger x1 exponent first."""
    return (sum(m), tuple(-e for e in m))


_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse ``"x1^2*x3"`` (``"1"`` is the unit monomial)."""
    index = {s: i for i, s in enumerate(names)}
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return Monomial(exps)
    for tok in text.split("*"):
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in index:
            raise ValueError(f"cannot parse monomial factor {tok!r} in {text!r}")
        exps[index[m.group(1)]] += int(m.group(2) or 1)
    return Monomial(exps)


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generating set of the monomial ideal generated by ``gens``."""
    ordered = sorted(set(gens), key=grlex_key)
    kept: list[Monomial] = []
    for g in ordered:
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal of ``k[ambient]`` held by its unique minimal generators."""

    def __init__(self, ambient: SimplicialComplex, generators: Iterable[Iterable[int]] = ()):
        gens = []
        for g in generators:
            g = g if isinstance(g, Monomial) else Monomial(g)
            if len(g) != ambient.n_vertices:
                raise ValueError(f"monomial {tuple(g)} has wrong length for n={ambient.n_vertices}")
            if ambient.is_face(g.support):
                gens.append(g)
        self.ambient = ambient
        self.generators = minimalize(gens)

    @classmethod
    def maximal(cls, c: SimplicialComplex) -> "MonomialIdeal":
        n = c.n_vertices
        return cls(c, [Monomial.var(n, i) for i in range(n)])

    @classmethod
    def unit(cls, c: SimplicialComplex) -> "MonomialIdeal":
        return cls(c, [Monomial.one(c.n_vertices)])

    @classmethod
    def zero(cls, c: SimplicialComplex) -> "MonomialIdeal":
        return cls(c, [])

    @classmethod
    def parse(cls, c: SimplicialComplex, texts: Iterable[str]) -> "MonomialIdeal":
        return cls(c, [parse_monomial(t, c.names) for t in texts])

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.generators)

    @property
    def n(self) -> int:
        return self.ambient.n_vertices

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def contains(self, m: Iterable[int]) -> bool:
        """True iff ``m`` is a nonzero monomial of k[ambient] lying in the ideal.

        Monomials that vanish in k[ambient] return False.
        """
        m = m if isinstance(m, Monomial) else Monomial(m)
        if not self.ambient.is_face(m.support):
            return False
        return any(g.divides(m) for g in self.generators)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self._set == other._set

    def __hash__(self):
        return hash((self.ambient, self._set))

    def __le__(self, other: "MonomialIdeal") -> bool:
        _same_ambient(self, other)
        return all(other.contains(g) for g in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ambient(self, other)
        return MonomialIdeal(self.ambient, self.generators + other.generators)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def strings(self) -> list[str]:
        return [g.format(self.ambient.names) for g in self.generators]

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def with_ambient(self, ambient: SimplicialComplex) -> "MonomialIdeal":
        """Same generators read in another ring on the same variables."""
        if ambient.n_vertices != self.n:
            raise ValueError("ambient complexes have different vertex counts")
        return MonomialIdeal(ambient, self.generators)

    def extend(self, parent: SimplicialComplex, vertex_map: Sequence[int]) -> "MonomialIdeal":
        """Push generators into ``parent`` through a local -> parent vertex map."""
        gens = []
        for g in self.generators:
            e = [0] * parent.n_vertices
            for i, v in enumerate(vertex_map):
                e[v] = g[i]
            gens.append(Monomial(e))
        return MonomialIdeal(parent, gens)

    def __repr__(self):
        return "(" + ", ".join(self.strings()) + ")" if self.generators else "(0)"


def _same_ambient(a: MonomialIdeal, b: MonomialIdeal):
    if a.ambient != b.ambient:
        raise ValueError("ideals live in different rings")


def polynomial_ring(n: int) -> SimplicialComplex:
    """Ambient complex whose Stanley-Reisner ring is k[x1..xn]."""
    return simplex(n)


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Minimal nonfaces of ``c`` as squarefree monomials in k[x1..xn]."""
    n = c.n_vertices
    gens = []
    # a minimal nonface is a nonface all of whose codimension-one subsets are faces
    frontier = {1 << i for i in range(n)}
    while frontier:
        nxt = set()
        for f in frontier:
            for v in range(n):
                if f >> v & 1:
                    continue
                g = f | 1 << v
                if c.is_face(g):
                    nxt.add(g)
                elif all(c.is_face(g & ~(1 << u)) for u in range(n) if g >> u & 1):
                    gens.append(Monomial((g >> i) & 1 for i in range(n)))
        frontier = nxt
    return MonomialIdeal(_poly_ambient(c), gens)


def _poly_ambient(c: SimplicialComplex) -> SimplicialComplex:
    return simplex(c.n_vertices).with_names(c.names)


stanley_reisner_generators = stanley_reisner_ideal


def minimal_primes(c: SimplicialComplex) -> list[MonomialIdeal]:
    """Prime generated by the variables off each facet, in facet order."""
    n = c.n_vertices
    return [
        MonomialIdeal(c, [Monomial.var(n, i) for i in range(n) if not f >> i & 1])
        for f in c.facet_masks
    ]


def _colon_poly(i_gens: Sequence[Monomial], j_gens: Sequence[Monomial], n: int) -> list[Monomial]:
    # colon in k[x1..xn]; an empty j gives the unit ideal
    result = [Monomial.one(n)]
    for g in j_gens:
        part = minimalize(h.quotient(g) for h in i_gens)
        result = list(minimalize(a.lcm(b) for a in result for b in part))
    return result


def colon(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """``(i : j)`` in k[ambient], computed from the preimages in k[x1..xn]."""
    _same_ambient(i, j)
    c = i.ambient
    lifted = list(i.generators) + list(stanley_reisner_ideal(c).generators)
    return MonomialIdeal(c, _colon_poly(lifted, j.generators, c.n_vertices))


def annihilator(c: SimplicialComplex, p: MonomialIdeal) -> MonomialIdeal:
    """``ann(p) = (0 : p)`` in k[c] for a minimal prime ``p`` of ``c``."""
    primes = minimal_primes(c)
    if p.ambient != c:
        p = p.with_ambient(c)
    if p not in primes:
        raise ValueError(f"{p} is not a minimal prime of {c}")
    return colon(MonomialIdeal.zero(c), p)


def test_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Sum of the annihilators of the minimal primes."""
    gens = []
    for p in minimal_primes(c):
        gens.extend(annihilator(c, p).generators)
    return MonomialIdeal(c, gens)


test_ideal.__test__ = False  # keep pytest from collecting the import


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(i, j)
    return MonomialIdeal(i.ambient, [a.lcm(b) for a in i.generators for b in j.generators])


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(i, j)
    return MonomialIdeal(i.ambient, [a * b for a in i.generators for b in j.generators])


def power(i: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    result = MonomialIdeal.unit(i.ambient)
    for _ in range(k):
        result = product(result, i)
    return result


def contains(i: MonomialIdeal, m) -> bool:
    return i.contains(m)


def equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    return i <= j and j <= i


def ideal_sum(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty sum")
    gens = [g for i in ideals for g in i.generators]
    return MonomialIdeal(ideals[0].ambient, gens)


def nonzero_monomials(c: SimplicialComplex, degree: int) -> list[Monomial]:
    """All monomials of the given degree whose support is a face, in grlex order."""
    n = c.n_vertices
    out = []
    for size in range(1, min(degree, c.dim + 1) + 1):
        for face in c.faces_of_dim(size - 1):
            for cuts in combinations(range(1, degree), size - 1):
                parts = [b - a for a, b in zip((0,) + cuts, cuts + (degree,))]
                e = [0] * n
                for v, k in zip(face, parts):
                    e[v] = k
                out.append(Monomial(e))
    if degree == 0:
        out.append(Monomial.one(n))
    return sorted(out, key=grlex_key)
