"""Command-line front end: ``srcore <command> [complex] [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .complex import connected_components, disjoint_union
from .core import (
    DEFAULT_BUDGET,
    DEFAULT_SAMPLES,
    core,
    core_bruteforce,
    reference_ideals,
    ring_json,
    verify_bounds,
)
from .field import DEFAULT_MODULUS, FieldConfig, Matrix
from .io import ParseError, load_complex, parse_inline, parse_matrix
from .monomials import minimal_primes, stanley_reisner_ideal, test_ideal
from .reductions import (
    BudgetExceededError,
    LinearIdeal,
    ReductionSearchError,
    diagonalize,
    format_linear_form,
    is_star_reduction,
    random_reduction,
)
from .ring import StanleyReisnerRing

SCHEMA_VERSION = "1"
ORACLE_DEFAULT_MODULUS = 3


class _ComplexPart(argparse.Action):
    """Collects complex sources in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        parts = list(getattr(namespace, "parts", None) or [])
        parts.append((self.const, values))
        namespace.parts = parts


def _common(p: argparse.ArgumentParser):
    g = p.add_argument_group("complex (several sources are joined by disjoint union)")
    g.add_argument("--facets", action=_ComplexPart, const="file", metavar="FILE", dest="parts",
                   help="facet file: one facet per line, or JSON with vertices/facets")
    g.add_argument("--cycle", action=_ComplexPart, const="cycle", metavar="N", dest="parts")
    g.add_argument("--skeleton", action=_ComplexPart, const="skeleton", metavar="D,N", dest="parts",
                   help="all D-subsets of N vertices")
    g.add_argument("--complex", action=_ComplexPart, const="inline", metavar="SPEC", dest="parts",
                   help="inline spec, e.g. 'cycle:4+skeleton:2,3' or 'facets:a b c;c d'")
    p.add_argument("--field", default=None, help=f"prime modulus or 'rational' (default {DEFAULT_MODULUS})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--json", action="store_true", help="emit one structured JSON document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srcore", description="*core of the maximal ideal in Stanley-Reisner rings")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("info", "ring data: Stanley-Reisner ideal, minimal primes, test ideal"),
        ("spread", "*-spread and a sampled witness reduction"),
        ("check", "facet-rank certificate for a coefficient matrix"),
        ("diagonalize", "diagonalize a reduction with respect to a minimal prime"),
        ("core", "compute *core(m)"),
        ("oracle", "exhaustive linear *core over a small prime field"),
        ("verify", "check the bound sandwich on sampled reductions"),
    ]:
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name in {"check", "diagonalize"}:
            p.add_argument("--matrix", required=True, help="rows separated by ';', e.g. '1,1,2;1,2,1'")
        if name == "diagonalize":
            p.add_argument("--prime", type=int, required=True, help="minimal prime index (facet order, from 0)")
        if name == "core":
            p.add_argument("--mode", default="auto",
                           choices=["auto", "special", "mc", "monte-carlo", "bruteforce", "brute-force"])
        if name in {"core", "oracle"}:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _complex(args):
    parts = getattr(args, "parts", None)
    if not parts:
        raise ParseError("no complex given (use --facets, --cycle, --skeleton or --complex)")
    specs = []
    for kind, value in parts:
        if kind == "file":
            c = load_complex(value)
        elif kind == "cycle":
            c = parse_inline(f"cycle:{value}")
        elif kind == "skeleton":
            c = parse_inline(f"skeleton:{value}")
        else:
            c = parse_inline(value)
        specs.append(c)
    out = specs[0]
    for c in specs[1:]:
        out = disjoint_union(out, c)
    return out


def _field(args, default=DEFAULT_MODULUS) -> FieldConfig:
    return FieldConfig.parse(args.field if args.field is not None else default)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def cmd_info(args, out):
    c = _complex(args)
    r = StanleyReisnerRing(c, _field(args))
    ref = reference_ideals(r)
    comps = connected_components(c)
    doc = {
        "ring": ring_json(r),
        "dim_complex": c.dim,
        "dim_ring": r.dim,
        "stanley_reisner_ideal": stanley_reisner_ideal(c).strings(),
        "minimal_primes": [p.strings() for p in minimal_primes(c)],
        "test_ideal": test_ideal(c).strings(),
        "m^2": ref["m^2"].strings(),
        "tau*m": ref["tau*m"].strings(),
        "m^(d+1)": ref["m^(d+1)"].strings(),
        "connected": len(comps) == 1,
        "components": [[c.names[v] for v in comp.vertex_map] for comp in comps],
        "is_simplex": c.is_simplex,
    }
    human = [
        f"complex: {len(c.facets)} facets on {c.n_vertices} vertices; dim = {c.dim}",
        "facets: " + " ".join("{" + ",".join(c.names[v] for v in f) + "}" for f in c.facets),
        f"dim k[Delta] = {r.dim}",
        f"I_Delta = {_fmt(doc['stanley_reisner_ideal'])}",
        "minimal primes: " + ", ".join(_fmt(p) for p in doc["minimal_primes"]),
        f"test ideal tau = {_fmt(doc['test_ideal'])}",
        f"m^2 = {_fmt(doc['m^2'])}",
        f"tau*m = {_fmt(doc['tau*m'])}",
        f"m^{r.dim + 1} = {_fmt(doc['m^(d+1)'])}",
        f"connected: {'yes' if doc['connected'] else 'no'} ({len(comps)} component{'s' if len(comps) != 1 else ''})",
    ]
    return doc, human, 0


def _fmt(gens) -> str:
    return "(" + ", ".join(gens) + ")" if gens else "(0)"


def _certificate_json(cert):
    return {
        "verdict": cert.verdict,
        "per_facet": [
            {"facet": list(x.facet), "required_rank": x.required_rank, "achieved_rank": x.achieved_rank}
            for x in cert.per_facet
        ],
    }


def _certificate_lines(cert, names):
    lines = [f"*-reduction of m: {'yes' if cert.verdict else 'no'}"]
    for x in cert.per_facet:
        facet = "{" + ",".join(names[v] for v in x.facet) + "}"
        lines.append(f"  facet {facet}: rank {x.achieved_rank}/{x.required_rank}{'' if x.ok else '  FAIL'}")
    return lines


def cmd_spread(args, out):
    c = _complex(args)
    r = StanleyReisnerRing(c, _field(args))
    doc = {"ring": ring_json(r), "spread": r.dim}
    human = [f"*-spread of m = dim k[Delta] = {r.dim}"]
    if r.field.is_prime:
        j = random_reduction(r, r.dim, args.seed)
        cert = is_star_reduction(j)
        doc["witness"] = {**j.to_json(), "generators": j.generator_strings(), "attempts": j.attempts,
                          "certificate": _certificate_json(cert)}
        human.append("witness: (" + ", ".join(j.generator_strings()) + f")  [attempts: {j.attempts}]")
        human.extend(_certificate_lines(cert, r.names))
    return doc, human, 0


def _linear_ideal(args):
    c = _complex(args)
    r = StanleyReisnerRing(c, _field(args))
    rows = parse_matrix(args.matrix)
    if len(rows[0]) != r.n:
        raise ParseError(f"matrix has {len(rows[0])} columns, complex has {r.n} vertices")
    return r, LinearIdeal(r, Matrix(rows, r.field))


def cmd_check(args, out):
    r, j = _linear_ideal(args)
    cert = is_star_reduction(j)
    doc = {"ring": ring_json(r), "generators": j.generator_strings(), "certificate": _certificate_json(cert)}
    human = ["J = (" + ", ".join(j.generator_strings()) + ")"] + _certificate_lines(cert, r.names)
    return doc, human, 0


def cmd_diagonalize(args, out):
    r, j = _linear_ideal(args)
    primes = minimal_primes(r.complex)
    if not 0 <= args.prime < len(primes):
        raise ParseError(f"prime index {args.prime} out of range 0..{len(primes) - 1}")
    D = diagonalize(j, args.prime)
    rows = D.tolist()
    gens = [format_linear_form(row, r.names) for row in rows]
    doc = {
        "ring": ring_json(r),
        "prime": primes[args.prime].strings(),
        "matrix": _jsonable(rows),
        "generators": gens,
    }
    human = [f"diagonalized with respect to {_fmt(doc['prime'])}:"]
    human += ["  [" + ", ".join(str(x) for x in row) + "]" for row in rows]
    human.append("J = (" + ", ".join(gens) + ")")
    return doc, human, 0


def _report_lines(rep) -> list[str]:
    names = rep.ring.names
    b = rep.buckets()
    lines = [
        f"mode: {rep.mode}; exact: {'yes' if rep.exact else 'no'}"
        + (f"; samples: {rep.samples}; seed: {rep.seed}" if rep.mode == "monte-carlo" else ""),
        f"*core(m) = {_fmt(rep.ideal.strings())}",
        f"certified in: {_fmt(rep.certified_in.strings())}",
        "certified out: " + (", ".join(m.format(names) for m in b["certified_out"]) or "-"),
        "probable in: " + (", ".join(m.format(names) for m in b["probable_in"]) or "-"),
    ]
    for m, w in rep.certified_out:
        if w is not None:
            lines.append(f"  witness for {m.format(names)}: (" + ", ".join(w.generator_strings()) + ")")
    for k, v in rep.reference_ideals().items():
        lines.append(f"{k} = {_fmt(v.strings())}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return lines


def cmd_core(args, out):
    c = _complex(args)
    mode = {"mc": "monte-carlo", "bruteforce": "brute-force"}.get(args.mode, args.mode)
    field = _field(args, ORACLE_DEFAULT_MODULUS if mode == "brute-force" else DEFAULT_MODULUS)
    r = StanleyReisnerRing(c, field)
    rep = core(r, mode, samples=args.samples, seed=args.seed, budget=args.budget)
    if rep is None:
        doc = {"ring": ring_json(r), "mode": "special", "applicable": False}
        return doc, ["special: not applicable (no closed form for this complex)"], 0
    doc = {**rep.to_json(), "applicable": True}
    return doc, _report_lines(rep), 0


def cmd_oracle(args, out):
    c = _complex(args)
    r = StanleyReisnerRing(c, _field(args, ORACLE_DEFAULT_MODULUS))
    rep = core_bruteforce(r, budget=args.budget)
    lines = _report_lines(rep)
    ex = rep.extra
    lines.insert(1, f"matrices: {ex['matrices']}; passing: {ex['passing_matrices']}; "
                    f"distinct reductions: {ex['distinct_reductions']}")
    for g in ex["graded_intersection"]:
        s = f"degree {g['degree']}: intersection dim {g['dim']} of {g['basis_size']}, monomial part {g['monomial_dim']}"
        if not g["monomial"]:
            s += "  NOT MONOMIAL: spanned by " + ", ".join(g["basis"])
        lines.append(s)
    return rep.to_json(), lines, 0


def cmd_verify(args, out):
    c = _complex(args)
    r = StanleyReisnerRing(c, _field(args))
    v = verify_bounds(r, args.samples, args.seed)
    lines = [f"{'PASS' if a.passed else 'FAIL'}  {a.name}" + (f"  [{a.detail}]" if a.detail else "") for a in v.assertions]
    lines.append(f"{len(v.assertions) - len(v.violations)}/{len(v.assertions)} assertions passed")
    return v.to_json(), lines, 0 if v.passed else 1


COMMANDS = {
    "info": cmd_info,
    "spread": cmd_spread,
    "check": cmd_check,
    "diagonalize": cmd_diagonalize,
    "core": cmd_core,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    try:
        doc, human, status = COMMANDS[args.command](args, out)
    except (ParseError, ValueError, ReductionSearchError, BudgetExceededError, OSError, IndexError) as exc:
        print(f"srcore {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, **_jsonable(doc)}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(human) + "\n")
    return status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
