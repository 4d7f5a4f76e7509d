"""The graded ring k[Delta]: monomial bases of graded pieces and linear products."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .complex import SimplicialComplex
from .field import FieldConfig
from .monomials import Monomial, MonomialIdeal, nonzero_monomials, power, test_ideal


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    basis: tuple[Monomial, ...]
    exponents: np.ndarray = field(repr=False, compare=False)

    @property
    def index(self) -> dict[Monomial, int]:
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {m: i for i, m in enumerate(self.basis)}
            object.__setattr__(self, "_index", idx)
        return idx

    def __len__(self):
        return len(self.basis)


class StanleyReisnerRing:
    """k[Delta] over a chosen field, with memoized graded data."""

    def __init__(self, complex: SimplicialComplex, field: FieldConfig | None = None):
        self.complex = complex
        self.field = field or FieldConfig()
        self._pieces: dict[int, GradedPiece] = {}
        self._tables: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self.complex.n_vertices

    @property
    def dim(self) -> int:
        return self.complex.dim + 1

    @property
    def names(self) -> tuple[str, ...]:
        return self.complex.names

    def __eq__(self, other):
        if not isinstance(other, StanleyReisnerRing):
            return NotImplemented
        return self.complex == other.complex and self.field == other.field

    def __hash__(self):
        return hash((self.complex, self.field))

    def __repr__(self):
        return f"StanleyReisnerRing({self.complex!r}, {self.field})"

    def graded_basis(self, q: int) -> GradedPiece:
        if q < 0:
            raise ValueError("degree must be non-negative")
        piece = self._pieces.get(q)
        if piece is None:
            basis = tuple(nonzero_monomials(self.complex, q))
            exps = np.array(basis, dtype=np.int64).reshape(len(basis), self.n)
            piece = GradedPiece(q, basis, exps)
            with self._lock:
                piece = self._pieces.setdefault(q, piece)
        return piece

    def multiplication_table(self, q: int) -> np.ndarray:
        """``T[b, j]`` = index of ``basis(q)[b] * x_j`` in ``basis(q+1)``, or -1 if it vanishes."""
        table = self._tables.get(q)
        if table is None:
            src = self.graded_basis(q)
            dst = self.graded_basis(q + 1).index
            table = np.full((len(src), self.n), -1, dtype=np.int64)
            for b, m in enumerate(src.basis):
                for j in range(self.n):
                    e = list(m)
                    e[j] += 1
                    k = dst.get(Monomial(e))
                    if k is not None:
                        table[b, j] = k
            with self._lock:
                table = self._tables.setdefault(q, table)
        return table

    def maximal_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.maximal(self.complex)

    def maximal_power(self, k: int) -> MonomialIdeal:
        return power(self.maximal_ideal(), k)

    def test_ideal(self) -> MonomialIdeal:
        return test_ideal(self.complex)


def graded_basis(r: StanleyReisnerRing, q: int) -> GradedPiece:
    return r.graded_basis(q)


def multiply_into_basis(r: StanleyReisnerRing, m: Sequence[int], linear_coeffs: Sequence) -> np.ndarray:
    """Coordinates of ``m * sum(c_j x_j)`` in the degree ``deg(m) + 1`` basis."""
    m = m if isinstance(m, Monomial) else Monomial(m)
    if len(linear_coeffs) != r.n:
        raise ValueError(f"expected {r.n} coefficients, got {len(linear_coeffs)}")
    if m.is_zero_in(r.complex):
        raise ValueError(f"{m.format(r.names)} vanishes in k[Delta]")
    q = m.degree
    row = r.graded_basis(q).index[m]
    targets = r.multiplication_table(q)[row]
    out = r.field.zeros(len(r.graded_basis(q + 1)))
    for j, c in enumerate(r.field.array([list(linear_coeffs)])[0]):
        if targets[j] >= 0:
            out[targets[j]] = c
    return out


def product_span(r: StanleyReisnerRing, coeffs: np.ndarray, q: int) -> np.ndarray:
    """Rows ``b * f_i`` for ``b`` in basis(q-1) and each linear form ``f_i``, in basis(q).

    Row ``b * s + i`` holds ``basis(q-1)[b] * f_i``; equivalent to stacking
    :func:`multiply_into_basis` over all pairs.
    """
    if q < 1:
        raise ValueError("product span needs degree >= 1")
    table = r.multiplication_table(q - 1)
    nb, n = table.shape
    s = coeffs.shape[0]
    ncols = len(r.graded_basis(q))
    out = r.field.zeros((nb * s, ncols))
    bb, jj = np.nonzero(table >= 0)
    cols = table[bb, jj]
    for i in range(s):
        out[bb * s + i, cols] = coeffs[i, jj]
    return out
