"""Linearly generated *-reductions of the graded maximal ideal of k[Delta].

A linear ideal ``J = (f_1, ..., f_s)`` tightly closes to the maximal ideal
exactly when, for every facet ``F``, the coefficient columns of the variables
in ``F`` have full column rank ``|F|``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .field import FieldConfig, Matrix, rank_array, rref_array
from .monomials import Monomial
from .ring import StanleyReisnerRing, product_span

DEFAULT_ATTEMPTS = 64


class ReductionSearchError(RuntimeError):
    """Random search hit its attempt cap (field likely too small)."""


class BudgetExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class FacetRank:
    facet: tuple[int, ...]
    required_rank: int
    achieved_rank: int

    @property
    def ok(self) -> bool:
        return self.achieved_rank == self.required_rank


@dataclass(frozen=True)
class ReductionCertificate:
    verdict: bool
    per_facet: tuple[FacetRank, ...]

    def __bool__(self):
        return self.verdict


class GradedSpan:
    """RREF of the degree-``q`` piece ``J_q`` of a linear ideal."""

    __slots__ = ("degree", "rref", "pivots", "unit_columns", "ncols")

    def __init__(self, degree: int, R: np.ndarray, pivots: np.ndarray, ncols: int):
        self.degree = degree
        self.rref = R[: len(pivots)]
        self.pivots = [int(c) for c in pivots]
        self.ncols = ncols
        # e_c lies in the row space iff c is a pivot whose row has no other entries
        units = set()
        for i, c in enumerate(self.pivots):
            if np.count_nonzero(self.rref[i] != 0) == 1:
                units.add(c)
        self.unit_columns = frozenset(units)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains_basis_vector(self, col: int) -> bool:
        return col in self.unit_columns


class LinearIdeal:
    """Ideal of k[Delta] generated by the linear forms given as coefficient rows."""

    def __init__(self, ring: StanleyReisnerRing, coeffs, attempts: int = 1):
        coeffs = coeffs if isinstance(coeffs, Matrix) else Matrix(coeffs, ring.field)
        if coeffs.field != ring.field:
            coeffs = Matrix(coeffs.tolist(), ring.field)
        if coeffs.cols != ring.n:
            raise ValueError(f"coefficient matrix has {coeffs.cols} columns, ring has {ring.n} variables")
        if coeffs.rows < 1:
            raise ValueError("a linear ideal needs at least one generator")
        if np.any(np.all(coeffs.data == 0, axis=1)):
            raise ValueError("zero generator row")
        self.ring = ring
        self.coeffs = coeffs
        self.attempts = attempts
        self._spans: dict[int, GradedSpan] = {}

    @property
    def s(self) -> int:
        return self.coeffs.rows

    def __eq__(self, other):
        if not isinstance(other, LinearIdeal):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"LinearIdeal({self.generator_strings()})"

    def generator_strings(self) -> list[str]:
        return [format_linear_form(row, self.ring.names) for row in self.coeffs.tolist()]

    def span(self, q: int) -> GradedSpan:
        sp = self._spans.get(q)
        if sp is None:
            A = product_span(self.ring, self.coeffs.data, q)
            R, piv = rref_array(A, self.ring.field)
            sp = GradedSpan(q, R, piv, A.shape[1])
            self._spans[q] = sp
        return sp

    def fills_degree(self, q: int) -> bool:
        """True iff ``J_q`` is all of ``k[Delta]_q`` (rank test, no back-substitution)."""
        sp = self._spans.get(q)
        if sp is not None:
            return sp.dim == sp.ncols
        A = product_span(self.ring, self.coeffs.data, q)
        return rank_array(A, self.ring.field) == A.shape[1]

    def to_json(self) -> dict:
        return {"modulus": self.ring.field.to_json(), "rows": [[str(x) if isinstance(x, Fraction) else x for x in r] for r in self.coeffs.tolist()]}


def format_linear_form(row: Sequence, names: Sequence[str]) -> str:
    terms = []
    for c, name in zip(row, names):
        if c == 0:
            continue
        if c == 1:
            t = name
        elif c == -1:
            t = f"-{name}"
        else:
            t = f"{c}*{name}"
        terms.append(t)
    out = "+".join(terms).replace("+-", "-")
    return out or "0"


def is_star_reduction(j: LinearIdeal) -> ReductionCertificate:
    """Facet-rank criterion: each facet's coefficient columns need full column rank."""
    per = []
    data = j.coeffs.data
    for f in j.ring.complex.facets:
        achieved = rank_array(data[:, list(f)], j.ring.field)
        per.append(FacetRank(f, len(f), achieved))
    per = tuple(per)
    return ReductionCertificate(all(x.ok for x in per), per)


def diagonalize(j: LinearIdeal, prime_index: int) -> Matrix:
    """Row-reduce so the variables off the chosen minimal prime carry identity pivots.

    ``prime_index`` indexes the facets (equivalently ``minimal_primes``).  For
    each vertex ``i`` of the facet one row is ``x_i + g_i`` with ``g_i``
    supported on the prime; any further rows are supported on the prime
    alone.  Rows are ordered by their pivot variable; zero rows are dropped.
    """
    facets = j.ring.complex.facets
    if not 0 <= prime_index < len(facets):
        raise IndexError(f"prime index {prime_index} out of range (have {len(facets)})")
    f = list(facets[prime_index])
    rest = [i for i in range(j.ring.n) if i not in f]
    order = f + rest
    R, piv = rref_array(j.coeffs.data[:, order], j.ring.field)
    if len(piv) < len(f) or list(piv[: len(f)]) != list(range(len(f))):
        raise ValueError(f"generators do not span the facet {tuple(f)} modulo its prime")
    R = R[: len(piv)]
    out = np.empty_like(R)
    out[:, order] = R
    by_pivot = np.argsort([order[c] for c in piv], kind="stable")
    return Matrix(out[by_pivot], j.ring.field)


def _seeded_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _sample_matrix(rng: np.random.Generator, field: FieldConfig, shape) -> np.ndarray:
    if field.is_prime:
        return rng.integers(0, field.modulus, size=shape, dtype=np.int64)
    ints = rng.integers(-(2**31), 2**31, size=shape, dtype=np.int64)
    return field.array(ints.tolist())


def random_reduction(r: StanleyReisnerRing, s: int, seed=0, max_attempts: int = DEFAULT_ATTEMPTS) -> LinearIdeal:
    """Uniform random ``s x n`` coefficients, resampled until the certificate passes."""
    if not r.field.is_prime:
        raise ValueError("random reductions need a prime field")
    if s < r.dim:
        raise ValueError(f"need at least dim k[Delta] = {r.dim} generators, got {s}")
    rng = _seeded_rng(seed)
    for attempt in range(1, max_attempts + 1):
        A = _sample_matrix(rng, r.field, (s, r.n))
        if np.any(np.all(A == 0, axis=1)):
            continue
        j = LinearIdeal(r, Matrix(A, r.field), attempts=attempt)
        if is_star_reduction(j):
            return j
    raise ReductionSearchError(
        f"no *-reduction found in {max_attempts} attempts over {r.field}; the field may be too small"
    )


@dataclass(frozen=True)
class PolyGenerator:
    """A generator split into its linear coefficient vector and a nonlinear tail."""

    linear: tuple
    tail: str | None = None


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_polynomial(text: str, names: Sequence[str], field: FieldConfig) -> PolyGenerator:
    """Parse ``"x+y+x*z"`` or ``"2*x1 - 1/3*x2 + x1^2*x3"`` into linear part + tail."""
    index = {s: i for i, s in enumerate(names)}
    linear = [0] * len(names)
    tail = []
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty polynomial")
    pos = 0
    for m in _TERM.finditer(src):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        sign, body = m.group(1), m.group(2)
        coef = Fraction(-1 if sign == "-" else 1)
        factors = []
        for tok in body.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coef *= Fraction(tok)
            else:
                factors.append(tok)
        exps = [0] * len(names)
        for tok in factors:
            mm = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", tok)
            if not mm or mm.group(1) not in index:
                raise ValueError(f"unknown factor {tok!r} in {text!r}")
            exps[index[mm.group(1)]] += int(mm.group(2) or 1)
        deg = sum(exps)
        if deg == 0:
            raise ValueError(f"constant term in {text!r}: generators must lie in the maximal ideal")
        if deg == 1:
            linear[exps.index(1)] += coef
        else:
            tail.append((sign or "+") + body)
    if pos != len(src):
        raise ValueError(f"cannot parse {text!r}")
    lin = tuple(field.element(c) for c in linear)
    return PolyGenerator(lin, "".join(tail).lstrip("+") or None)


def linearize(r: StanleyReisnerRing, generators: Iterable) -> LinearIdeal:
    """Keep only the linear parts of the generators, dropping zero rows."""
    rows = []
    for g in generators:
        if isinstance(g, str):
            g = parse_polynomial(g, r.names, r.field)
        elif not isinstance(g, PolyGenerator):
            g = PolyGenerator(tuple(g))
        if len(g.linear) != r.n:
            raise ValueError(f"linear part has {len(g.linear)} entries, ring has {r.n} variables")
        row = [r.field.element(c) for c in g.linear]
        if any(c != 0 for c in row):
            rows.append(row)
    if not rows:
        raise ValueError("every generator has zero linear part")
    return LinearIdeal(r, Matrix(rows, r.field))


def shrink(j: LinearIdeal, seed=0, max_attempts: int = DEFAULT_ATTEMPTS) -> LinearIdeal:
    """Random combinations of ``j``'s rows down to ``dim k[Delta]`` generators."""
    r = j.ring
    d = r.dim
    if j.s < d:
        raise ValueError(f"{j.s} generators is below dim k[Delta] = {d}")
    if not is_star_reduction(j):
        raise ValueError("input is not a *-reduction")
    if j.s == d:
        return j
    rng = _seeded_rng(seed)
    for attempt in range(1, max_attempts + 1):
        C = _sample_matrix(rng, r.field, (d, j.s))
        if r.field.is_prime:
            p = r.field.modulus
            # int64-safe product: accumulate one column at a time
            A = np.zeros((d, r.n), dtype=np.int64)
            for k in range(j.s):
                A = (A + C[:, k : k + 1] * j.coeffs.data[k][None, :] % p) % p
        else:
            A = C.dot(j.coeffs.data)
        if np.any(np.all(A == 0, axis=1)):
            continue
        out = LinearIdeal(r, Matrix(A, r.field), attempts=attempt)
        if is_star_reduction(out):
            return out
    raise ReductionSearchError(f"shrink failed after {max_attempts} attempts over {r.field}")


def contains_monomial(j: LinearIdeal, m: Sequence[int]) -> bool:
    """Graded membership of a nonzero monomial in the linear ideal ``j``."""
    m = m if isinstance(m, Monomial) else Monomial(m)
    r = j.ring
    if m.is_zero_in(r.complex):
        raise ValueError(f"{m.format(r.names)} vanishes in k[Delta]")
    q = m.degree
    if q == 0:
        return False
    col = r.graded_basis(q).index[m]
    return j.span(q).contains_basis_vector(col)


def scale_columns(j: LinearIdeal, scales: Sequence[int]) -> LinearIdeal:
    """Apply the torus action ``x_i -> lambda_i x_i`` to the generators."""
    f = j.ring.field
    lam = f.array([list(scales)])[0]
    if any(x == 0 for x in lam):
        raise ValueError("scales must be nonzero")
    data = j.coeffs.data
    if f.is_prime:
        out = data * lam[None, :] % f.modulus
    else:
        out = data * lam[None, :]
    return LinearIdeal(j.ring, Matrix(out, f))


def enumerate_matrices(p: int, shape: tuple[int, int], chunk: int = 1 << 15):
    """Yield every ``shape`` matrix over F_p in stacks of at most ``chunk``, base-p counting order."""
    rows, cols = shape
    k = rows * cols
    total = p**k
    place = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // place[None, :]) % p
        yield digits.reshape(-1, rows, cols)


def count_passing(r: StanleyReisnerRing, rows: int, columns: Sequence[int] | None = None,
                  budget: int = 10**7) -> tuple[int, int]:
    """Exhaustively count matrices over the (small prime) field passing the facet-rank test.

    With ``columns`` given, only the facets contained in those columns are
    checked and only those columns are enumerated; returns ``(passing, total)``.
    """
    if not r.field.is_prime:
        raise ValueError("exhaustive search needs a prime field")
    p = r.field.modulus
    cols = list(range(r.n)) if columns is None else list(columns)
    total = p ** (rows * len(cols))
    if total > budget:
        raise BudgetExceededError(f"{p}^{rows * len(cols)} = {total} matrices exceeds budget {budget}")
    col_pos = {c: i for i, c in enumerate(cols)}
    facets = [f for f in r.complex.facets if all(v in col_pos for v in f)]
    passing = 0
    for stack in enumerate_matrices(p, (rows, len(cols))):
        ok = np.ones(stack.shape[0], dtype=bool)
        for f in facets:
            sub = stack[:, :, [col_pos[v] for v in f]]
            ok &= _kernels.batch_rank_modp(sub, p) == len(f)
        passing += int(ok.sum())
    return passing, total


def no_smaller_reduction(r: StanleyReisnerRing, budget: int = 10**7) -> dict:
    """Exhaustive check that no ``(d-1)``-row matrix passes the certificate.

    Enumerates every ``(d-1) x n`` matrix over the ring's (small) field when
    that fits in ``budget``. Otherwise enumerates ``(d-1) x |F|`` matrices on
    the columns of a largest facet ``F``: that facet's rank test depends on
    those columns alone, so zero survivors still rules out every full matrix.
    """
    d = r.dim
    facet = max(r.complex.facets, key=len)
    if d == 1:
        # zero generators: the empty ideal cannot reach a nonempty facet
        return {"rows": 0, "columns": [], "passing": 0, "total": 1}
    columns = list(range(r.n))
    if r.field.modulus ** ((d - 1) * r.n) > budget:
        columns = list(facet)
    passing, total = count_passing(r, d - 1, columns=columns, budget=budget)
    return {"rows": d - 1, "columns": columns, "passing": passing, "total": total}
