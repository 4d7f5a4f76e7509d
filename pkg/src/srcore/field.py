"""Exact fields and dense matrices: prime fields F_p and the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels

DEFAULT_MODULUS = 2147483647


class DimensionError(ValueError):
    pass


@lru_cache(maxsize=64)
def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


@dataclass(frozen=True)
class FieldConfig:
    """The coefficient field: ``kind`` is ``"prime"`` or ``"rational"``."""

    kind: str = "prime"
    modulus: int | None = DEFAULT_MODULUS

    def __post_init__(self):
        if self.kind == "prime":
            if self.modulus is None or self.modulus < 2 or not _is_prime(int(self.modulus)):
                raise ValueError(f"modulus must be a prime >= 2, got {self.modulus!r}")
            if self.modulus > _kernels.MAX_KERNEL_MODULUS:
                raise ValueError(f"modulus {self.modulus} too large for 64-bit kernels")
            object.__setattr__(self, "modulus", int(self.modulus))
        elif self.kind == "rational":
            if self.modulus is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int = DEFAULT_MODULUS) -> "FieldConfig":
        return cls("prime", p)

    @classmethod
    def rationals(cls) -> "FieldConfig":
        return cls("rational", None)

    @classmethod
    def parse(cls, text: str | int) -> "FieldConfig":
        if isinstance(text, int):
            return cls.prime(text)
        t = str(text).strip().lower()
        if t in {"rational", "rationals", "q", "qq"}:
            return cls.rationals()
        try:
            return cls.prime(int(t))
        except ValueError as exc:
            raise ValueError(f"bad field spec {text!r}: {exc}") from None

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def dtype(self):
        return np.int64 if self.is_prime else object

    def element(self, x):
        if self.is_prime:
            if isinstance(x, Fraction):
                num = x.numerator % self.modulus
                den = x.denominator % self.modulus
                if den == 0:
                    raise ZeroDivisionError(f"{x} has no image in F_{self.modulus}")
                return num * pow(den, -1, self.modulus) % self.modulus
            return int(x) % self.modulus
        return Fraction(x)

    def array(self, rows) -> np.ndarray:
        """Canonical 2-d array for this field (int64 residues or Fraction objects)."""
        if isinstance(rows, np.ndarray) and rows.ndim == 2 and self.is_prime and rows.dtype.kind in "iu":
            return np.mod(rows.astype(np.int64), self.modulus)
        if isinstance(rows, np.ndarray) and rows.ndim == 2 and rows.dtype == object and not self.is_prime:
            return np.vectorize(Fraction, otypes=[object])(rows) if rows.size else rows.copy()
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged matrix rows")
        out = np.empty((len(rows), ncols), dtype=self.dtype)
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                out[i, j] = self.element(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.is_prime:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def inverse(self, a):
        if self.is_prime:
            return pow(int(a), -1, self.modulus)
        return 1 / Fraction(a)

    def to_json(self):
        return self.modulus if self.is_prime else "rational"

    def __str__(self):
        return f"GF({self.modulus})" if self.is_prime else "QQ"


def _rref_fraction(A: np.ndarray):
    R = A.copy()
    m, n = R.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] / R[r, c]
        for i in range(m):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


def rref_array(A: np.ndarray, field: FieldConfig):
    """RREF of a raw canonical array; returns ``(R, pivots)``."""
    if field.is_prime:
        return _kernels.rref_modp(A, field.modulus)
    return _rref_fraction(A)


def rank_array(A: np.ndarray, field: FieldConfig) -> int:
    if field.is_prime:
        return _kernels.rank_modp(A, field.modulus)
    return len(_rref_fraction(A)[1])


class Matrix:
    """Immutable dense matrix over a :class:`FieldConfig`."""

    __slots__ = ("field", "_data")

    def __init__(self, rows, field: FieldConfig | None = None):
        field = field or FieldConfig()
        data = rows._data if isinstance(rows, Matrix) else rows
        if isinstance(data, np.ndarray) and data.ndim == 2 and data.shape[0] == 0:
            data = field.zeros((0, data.shape[1]))
        else:
            data = field.array(data)
        data.flags.writeable = False
        self.field = field
        self._data = data

    @classmethod
    def identity(cls, n: int, field: FieldConfig | None = None) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self):
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    def tolist(self):
        return [[_plain(x) for x in row] for row in self._data]

    def transpose(self) -> "Matrix":
        return Matrix(self._data.T.copy(), self.field)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self._data[:, list(idx)].copy(), self.field)

    def vstack(self, other) -> "Matrix":
        other = other if isinstance(other, Matrix) else Matrix(other, self.field)
        return Matrix(np.vstack([self._data, other._data]), self.field)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self):
        return hash((self.field, self.shape, tuple(map(tuple, self.tolist()))))

    def __repr__(self):
        return f"Matrix({self.tolist()}, {self.field})"


def _plain(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return int(x)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns (ascending)."""
    R, piv = rref_array(m.data, m.field)
    return Matrix(R, m.field), [int(c) for c in piv]


def rank(m: Matrix) -> int:
    return rank_array(m.data, m.field)


def in_span(v, basis: Matrix) -> bool:
    """True iff ``v`` is a linear combination of the rows of ``basis``."""
    vec = basis.field.array([list(v)])
    if vec.shape[1] != basis.cols:
        raise DimensionError(f"vector has length {vec.shape[1]}, basis has {basis.cols} columns")
    if basis.rows == 0:
        return not np.any(vec != 0)
    stacked = np.vstack([basis.data, vec])
    return rank_array(stacked, basis.field) == rank_array(basis.data, basis.field)


def reduce_against(R: np.ndarray, pivots: Sequence[int], v: np.ndarray, field: FieldConfig) -> np.ndarray:
    """Residue of row vector ``v`` after clearing the pivot columns of RREF rows ``R``."""
    v = v.copy()
    if field.is_prime:
        p = field.modulus
        for i, c in enumerate(pivots):
            f = int(v[c])
            if f:
                v = (v + (p - f) * R[i]) % p
        return v
    for i, c in enumerate(pivots):
        f = v[c]
        if f != 0:
            v = v - f * R[i]
    return v
