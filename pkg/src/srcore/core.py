"""*core of the graded maximal ideal: closed forms, sampling, and exhaustive search.

Every report splits the candidate monomials (nonzero, degree 2..d) into
certified-in, certified-out (with a witness reduction when sampled) and
probable-in.  Linear reductions only; for dim k[Delta] <= 2 their
intersection is the full *core, above that it is the linear *core.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .complex import SimplicialComplex, connected_components, is_cycle_graph
from .field import rref_array
from .monomials import Monomial, MonomialIdeal, ideal_sum, power, test_ideal
from .reductions import (
    BudgetExceededError,
    LinearIdeal,
    ReductionSearchError,
    contains_monomial,
    enumerate_matrices,
    random_reduction,
)
from .ring import StanleyReisnerRing

DEFAULT_SAMPLES = 50
DEFAULT_BUDGET = 10**7

MODES = ("special", "monte-carlo", "brute-force")


@dataclass
class CoreReport:
    ring: StanleyReisnerRing
    mode: str
    certified_in: MonomialIdeal
    certified_out: list[tuple[Monomial, LinearIdeal | None]]
    probable_in: list[Monomial]
    samples: int = 0
    seed: int | None = None
    exact: bool = False
    notes: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ideal(self) -> MonomialIdeal:
        """certified_in + probable_in as one monomial ideal."""
        return MonomialIdeal(self.ring.complex, list(self.certified_in.generators) + list(self.probable_in))

    @property
    def out_monomials(self) -> list[Monomial]:
        return [m for m, _ in self.certified_out]

    def buckets(self) -> dict[str, list[Monomial]]:
        """Candidate monomials by bucket; every candidate lands in exactly one."""
        out = set(self.out_monomials)
        prob = set(self.probable_in)
        cands = candidate_monomials(self.ring)
        return {
            "certified_in": [m for m in cands if m not in out and m not in prob and self.certified_in.contains(m)],
            "certified_out": [m for m in cands if m in out],
            "probable_in": [m for m in cands if m in prob],
        }

    def reference_ideals(self) -> dict[str, MonomialIdeal]:
        return reference_ideals(self.ring)

    def to_json(self) -> dict:
        names = self.ring.names
        fmt = lambda ms: [m.format(names) for m in ms]  # noqa: E731
        b = self.buckets()
        return {
            "ring": ring_json(self.ring),
            "mode": self.mode,
            "exact": self.exact,
            "samples": self.samples,
            "seed": self.seed,
            "ideal": self.ideal.strings(),
            "buckets": {
                "certified_in": self.certified_in.strings(),
                "certified_in_candidates": fmt(b["certified_in"]),
                "certified_out": fmt(b["certified_out"]),
                "probable_in": fmt(b["probable_in"]),
            },
            "witnesses": [
                {"monomial": m.format(names), "reduction": None if w is None else w.to_json()}
                for m, w in self.certified_out
            ],
            "reference": {k: v.strings() for k, v in self.reference_ideals().items()},
            "notes": list(self.notes),
            "extra": self.extra,
        }


def ring_json(r: StanleyReisnerRing) -> dict:
    return {
        "n": r.n,
        "variables": list(r.names),
        "facets": [[r.names[v] for v in f] for f in r.complex.facets],
        "field": r.field.to_json(),
        "dim": r.dim,
    }


def reference_ideals(r: StanleyReisnerRing) -> dict[str, MonomialIdeal]:
    m = r.maximal_ideal()
    return {
        "m^2": power(m, 2),
        "tau*m": test_ideal(r.complex) * m,
        "m^(d+1)": power(m, r.dim + 1),
    }


def lower_bound(r: StanleyReisnerRing) -> MonomialIdeal:
    ref = reference_ideals(r)
    return ref["m^(d+1)"] + ref["tau*m"]


def candidate_monomials(r: StanleyReisnerRing) -> list[Monomial]:
    """Nonzero monomials of degree 2..dim k[Delta], grlex ordered."""
    out = []
    for q in range(2, r.dim + 1):
        out.extend(r.graded_basis(q).basis)
    return out


# -- closed forms -------------------------------------------------------------

def special_core_ideal(c: SimplicialComplex) -> tuple[MonomialIdeal, str] | None:
    """Closed-form *core of the maximal ideal when one is known, with the rule used."""
    m = MonomialIdeal.maximal(c)
    if c.is_simplex:
        return m, "simplex"
    if c.dim == 0:
        return power(m, 2), "dimension-one"
    if len(c.facet_masks) == 2:
        return power(m, 2), "two-facets"
    if is_cycle_graph(c):
        return power(m, 3), "cycle"
    comps = connected_components(c)
    if len(comps) == 1:
        return None
    parts = []
    rules = []
    for comp in comps:
        if comp.complex.is_simplex:
            local = power(MonomialIdeal.maximal(comp.complex), 2)
            rules.append("simplex-squared")
        else:
            sub = special_core_ideal(comp.complex)
            if sub is None:
                return None
            local, rule = sub
            rules.append(rule)
        parts.append(local.extend(c, comp.vertex_map))
    return ideal_sum(parts), "disjoint-union[" + ",".join(rules) + "]"


def combine_components(c: SimplicialComplex, component_ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Assemble the *core of a disjoint union from its components' *cores.

    Proper components contribute their *core extended to k[c]; simplex
    components contribute the square of their variables.
    """
    comps = connected_components(c)
    if len(comps) != len(component_ideals):
        raise ValueError(f"{len(comps)} components but {len(component_ideals)} ideals")
    parts = []
    for comp, ideal in zip(comps, component_ideals):
        if comp.complex.is_simplex:
            ideal = power(MonomialIdeal.maximal(comp.complex), 2)
        elif ideal.ambient != comp.complex:
            ideal = ideal.with_ambient(comp.complex)
        parts.append(ideal.extend(c, comp.vertex_map))
    return ideal_sum(parts)


def core_special(r: StanleyReisnerRing) -> CoreReport | None:
    """Closed-form report, or None when no special case applies."""
    found = special_core_ideal(r.complex)
    if found is None:
        return None
    ideal, rule = found
    out = [(m, None) for m in candidate_monomials(r) if not ideal.contains(m)]
    return CoreReport(r, "special", ideal, out, [], exact=True, notes=[f"closed form: {rule}"], extra={"rule": rule})


# -- sampling -----------------------------------------------------------------

def _sample_streams(seed: int, samples: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(samples)]


def core_monte_carlo(r: StanleyReisnerRing, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> CoreReport:
    """Intersect ``samples`` random minimal linear reductions over the ring's prime field.

    One failing sample certifies a candidate out (and is kept as witness);
    candidates surviving every sample are only probable.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not r.field.is_prime:
        raise ValueError("Monte-Carlo sampling needs a prime field")
    d = r.dim
    lower = lower_bound(r)
    undecided = [m for m in candidate_monomials(r) if not lower.contains(m)]
    witnesses: dict[Monomial, LinearIdeal] = {}
    drawn = 0
    for rng in _sample_streams(seed, samples):
        remaining = [m for m in undecided if m not in witnesses]
        if not remaining:
            break
        j = random_reduction(r, d, rng)
        drawn += 1
        for m in remaining:
            if not contains_monomial(j, m):
                witnesses[m] = j
    out = [(m, witnesses[m]) for m in undecided if m in witnesses]
    probable = [m for m in undecided if m not in witnesses]
    report = CoreReport(r, "monte-carlo", lower, out, probable, samples=samples, seed=seed, extra={"drawn": drawn})
    if d <= 2:
        report.notes.append("dim k[Delta] <= 2: the linear *core equals the *core")
    else:
        report.notes.append("dim k[Delta] >= 3: sampled linear reductions bound the linear *core only")
    if not probable:
        report.exact = True
    elif d <= 2:
        special = special_core_ideal(r.complex)
        if special is not None and special[0] == report.ideal:
            report.exact = True
            report.notes.append(f"probable monomials confirmed by closed form ({special[1]})")
    return report


# -- exhaustive oracle --------------------------------------------------------

def _null_rows(R: np.ndarray, pivots: Sequence[int], ncols: int, p: int) -> np.ndarray:
    """Basis of {w : R w = 0} as rows (the annihilator of the row space)."""
    piv = list(pivots)
    free = [c for c in range(ncols) if c not in set(piv)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, c in enumerate(piv):
            out[k, c] = (-R[i, f]) % p
    return out


def core_bruteforce(r: StanleyReisnerRing, restrict_linear: bool = True, budget: int = DEFAULT_BUDGET) -> CoreReport:
    """Intersect every linear minimal *-reduction over a small prime field.

    Enumerates all ``d x n`` matrices over F_p, keeps the certified ones,
    dedupes them by row space and intersects the graded pieces in degrees
    ``1..d+1``.  Exact for the linear *core over F_p.
    """
    if not restrict_linear:
        raise ValueError("only linearly generated reductions can be enumerated")
    if not r.field.is_prime:
        raise ValueError("brute force needs a prime field")
    p = r.field.modulus
    d, n = r.dim, r.n
    total = p ** (d * n)
    if total > budget:
        raise BudgetExceededError(f"{p}^{d * n} = {total} matrices exceeds budget {budget}")

    facets = r.complex.facets
    seen: dict[bytes, np.ndarray] = {}
    passing = 0
    for stack in enumerate_matrices(p, (d, n)):
        ok = np.ones(stack.shape[0], dtype=bool)
        for f in facets:
            ok &= _kernels.batch_rank_modp(stack[:, :, list(f)], p) == len(f)
        if not ok.any():
            continue
        good = stack[ok]
        passing += good.shape[0]
        R, _ = _kernels.batch_rref_modp(good, p)
        for k in range(R.shape[0]):
            key = R[k].tobytes()
            if key not in seen:
                seen[key] = R[k]
    if not seen:
        raise ReductionSearchError(f"no linear *-reduction with {d} generators exists over F_{p}")

    reductions = [LinearIdeal(r, M) for M in seen.values()]
    cands = candidate_monomials(r)
    witnesses: dict[Monomial, LinearIdeal] = {}
    graded = []
    in_all: list[Monomial] = []
    for q in range(1, d + 2):
        basis = r.graded_basis(q)
        N = len(basis)
        W = np.zeros((0, N), dtype=np.int64)
        for j in reductions:
            sp = j.span(q)
            null = _null_rows(sp.rref, sp.pivots, N, p)
            if null.shape[0]:
                W, piv = rref_array(np.vstack([W, null]), r.field)
                W = W[: len(piv)]
        zero_cols = [c for c in range(N) if not np.any(W[:, c] != 0)]
        dim_cap = N - W.shape[0]
        entry = {"degree": q, "basis_size": N, "dim": dim_cap, "monomial_dim": len(zero_cols),
                 "monomial": dim_cap == len(zero_cols)}
        if dim_cap != len(zero_cols):
            entry["basis"] = _intersection_basis(W, N, p, r.names, basis.basis)
        graded.append(entry)
        in_all.extend(basis.basis[c] for c in zero_cols)
    for m in cands:
        for j in reductions:
            if not contains_monomial(j, m):
                witnesses[m] = j
                break
    certified_in = MonomialIdeal(r.complex, [m for m in in_all if m.degree >= 1])
    out = [(m, witnesses[m]) for m in cands if m in witnesses]
    monomial = all(g["monomial"] for g in graded)
    report = CoreReport(
        r, "brute-force", certified_in, out, [], samples=len(reductions), exact=True,
        extra={
            "modulus": p,
            "matrices": total,
            "passing_matrices": passing,
            "distinct_reductions": len(reductions),
            "reductions": [j.generator_strings() for j in reductions] if len(reductions) <= 64 else None,
            "graded_intersection": graded,
            "monomial_intersection": monomial,
        },
    )
    report.notes.append(f"exact for the linear *core over F_{p}")
    if not monomial:
        report.notes.append("the intersection of all reductions is not a monomial ideal over this field")
    return report


def _intersection_basis(W: np.ndarray, N: int, p: int, names, basis) -> list[str]:
    if W.shape[0] == 0:
        rows = np.eye(N, dtype=np.int64)
    else:
        R, piv = _kernels.rref_modp(W, p)
        rows = _null_rows(R, piv, N, p)
    out = []
    for row in rows:
        terms = []
        for c in np.nonzero(row)[0]:
            coef = int(row[c])
            mono = basis[c].format(names)
            terms.append(mono if coef == 1 else f"{coef}*{mono}")
        out.append("+".join(terms))
    return out


# -- verification -------------------------------------------------------------

@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    ring: StanleyReisnerRing
    samples: int
    seed: int
    assertions: list[Assertion]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def violations(self) -> list[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def to_json(self) -> dict:
        return {
            "ring": ring_json(self.ring),
            "samples": self.samples,
            "seed": self.seed,
            "passed": self.passed,
            "assertions": [{"name": a.name, "passed": a.passed, "detail": a.detail} for a in self.assertions],
        }


def verify_bounds(r: StanleyReisnerRing, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> VerificationReport:
    """Check m^(d+1) and tau*m inside, and no variable in, sampled minimal reductions."""
    if not r.field.is_prime:
        raise ValueError("verification samples need a prime field")
    d = r.dim
    ref = reference_ideals(r)
    top = ref["m^(d+1)"].generators
    tau_m = ref["tau*m"].generators
    names = r.names
    n = r.n
    excluded = [False] * n
    assertions = []
    for k, rng in enumerate(_sample_streams(seed, samples)):
        j = random_reduction(r, d, rng)
        full = j.fills_degree(d + 1)
        missing_top = [] if full else [g for g in top if not contains_monomial(j, g)]
        assertions.append(Assertion(f"sample {k}: m^{d + 1} in J", not missing_top,
                                    ", ".join(g.format(names) for g in missing_top)))
        # a full degree-(d+1) piece already holds every generator of degree >= d+1
        missing_tau = [g for g in tau_m if not (full and g.degree >= d + 1) and not contains_monomial(j, g)]
        assertions.append(Assertion(f"sample {k}: tau*m in J", not missing_tau,
                                    ", ".join(g.format(names) for g in missing_tau)))
        for i in range(n):
            if not excluded[i] and not contains_monomial(j, Monomial.var(n, i)):
                excluded[i] = True
    for i in range(n):
        assertions.append(Assertion(f"{names[i]} not in the sampled intersection", excluded[i]))
    return VerificationReport(r, samples, seed, assertions)


# -- partition propagation ----------------------------------------------------

def _partitions(total: int, max_parts: int, largest: int | None = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _shape_monomials(n: int, shape: Sequence[int]):
    for idx in itertools.permutations(range(n), len(shape)):
        e = [0] * n
        for v, a in zip(idx, shape):
            e[v] = a
        yield Monomial(e)


def partition_violations(r: StanleyReisnerRing, report: CoreReport) -> list[tuple[tuple[int, ...], Monomial]]:
    """Partitions of d+1 (at most d parts) whose propagation the report breaks.

    If every monomial of shape ``(a1-1, a2, ..., as, 1)`` is in the report's
    ideal then every monomial of shape ``(a1, ..., as)`` must be too.
    Monomials that vanish in k[Delta] count as members.
    """
    d = r.dim
    n = r.n
    ideal = report.ideal
    c = r.complex

    def member(m: Monomial) -> bool:
        return m.is_zero_in(c) or ideal.contains(m)

    bad = []
    for shape in _partitions(d + 1, d):
        if len(shape) + 1 > n:
            continue
        premise = (shape[0] - 1,) + shape[1:] + (1,)
        if all(member(m) for m in _shape_monomials(n, premise)):
            for m in _shape_monomials(n, shape):
                if not member(m):
                    bad.append((shape, m))
    return bad


def check_partition_propagation(r: StanleyReisnerRing, report: CoreReport) -> bool:
    return not partition_violations(r, report)


def core(r: StanleyReisnerRing, mode: str = "auto", samples: int = DEFAULT_SAMPLES, seed: int = 0,
         budget: int = DEFAULT_BUDGET) -> CoreReport | None:
    """Dispatch on ``mode``: auto, special, monte-carlo or brute-force."""
    mode = {"mc": "monte-carlo", "bruteforce": "brute-force", "oracle": "brute-force"}.get(mode, mode)
    if mode == "auto":
        rep = core_special(r)
        return rep if rep is not None else core_monte_carlo(r, samples, seed)
    if mode == "special":
        return core_special(r)
    if mode == "monte-carlo":
        return core_monte_carlo(r, samples, seed)
    if mode == "brute-force":
        return core_bruteforce(r, budget=budget)
    raise ValueError(f"unknown mode {mode!r}")
