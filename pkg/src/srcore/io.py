"""Reading complexes and matrices from text, JSON and inline specs."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .complex import (
    ComplexError,
    SimplicialComplex,
    complete_skeleton,
    cycle,
    disjoint_union,
    points,
    simplex,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _from_named_facets(names: list[str], facets: list[list[str]]) -> SimplicialComplex:
    index = {}
    for i, s in enumerate(names):
        if s in index:
            raise ParseError(f"duplicate vertex name {s!r}")
        index[s] = i
    out = []
    for f in facets:
        try:
            out.append([index[s] for s in f])
        except KeyError as exc:
            raise ParseError(f"facet uses unknown vertex {exc.args[0]!r}") from None
    try:
        return SimplicialComplex.from_facets(len(names), out, names)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def parse_facet_text(text: str) -> SimplicialComplex:
    """One facet per line, whitespace-separated vertex names; ``#`` starts a comment.

    Vertices are numbered in order of first appearance.
    """
    names: list[str] = []
    seen = set()
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = line.split()
        if not toks:
            continue
        for tok in toks:
            if not re.fullmatch(r"[A-Za-z0-9_]+", tok):
                raise ParseError(f"bad vertex name {tok!r}", lineno, raw.index(tok) + 1)
            if tok not in seen:
                seen.add(tok)
                names.append(tok)
        facets.append(toks)
    if not facets:
        raise ParseError("no facets found")
    return _from_named_facets(names, facets)


def parse_facet_json(data) -> SimplicialComplex:
    """``{"vertices": [...], "facets": [[...], ...]}`` with vertex names as strings."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "facets" not in data:
        raise ParseError('expected an object with "vertices" and "facets"')
    facets = [[str(v) for v in f] for f in data["facets"]]
    if "vertices" in data:
        names = [str(v) for v in data["vertices"]]
    else:
        names = []
        for f in facets:
            for v in f:
                if v not in names:
                    names.append(v)
    return _from_named_facets(names, facets)


def load_complex(path: str | Path) -> SimplicialComplex:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_facet_json(text)
    return parse_facet_text(text)


def parse_inline(spec: str) -> SimplicialComplex:
    """Inline family spec; ``+`` joins parts by disjoint union.

    Parts: ``cycle:N``, ``skeleton:D,N``, ``simplex:N``, ``points:N``,
    ``facets:0 1 2;2 3`` (vertex names, ``;`` between facets).
    """
    parts = [p.strip() for p in spec.split("+") if p.strip()]
    if not parts:
        raise ParseError(f"empty complex spec {spec!r}")
    out = None
    for part in parts:
        kind, _, arg = part.partition(":")
        kind = kind.strip().lower()
        try:
            if kind == "cycle":
                c = cycle(int(arg))
            elif kind in {"skeleton", "complete"}:
                d, n = (int(x) for x in arg.split(","))
                c = complete_skeleton(d, n)
            elif kind == "simplex":
                c = simplex(int(arg))
            elif kind == "points":
                c = points(int(arg))
            elif kind == "facets":
                c = parse_facet_text("\n".join(arg.split(";")))
            else:
                raise ParseError(f"unknown complex kind {kind!r} in {part!r}")
        except (ValueError, ComplexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad complex spec {part!r}: {exc}") from None
        out = c if out is None else disjoint_union(out, c)
    return out


def parse_matrix(text: str) -> list[list[Fraction]]:
    """Rows separated by ``;``, entries by ``,`` or spaces; entries may be ``a/b``."""
    rows = []
    for r in text.strip().strip("[]").split(";"):
        r = r.strip().strip("[]()")
        if not r:
            continue
        try:
            rows.append([Fraction(x) for x in re.split(r"[,\s]+", r.strip()) if x])
        except ValueError:
            raise ParseError(f"bad matrix row {r!r}") from None
    if not rows:
        raise ParseError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have different lengths")
    return rows
