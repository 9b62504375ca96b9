"""Reader and writer for the ``.cplx`` text format.

Grammar (one complex per file)::

    file     := header section
    header   := "n=" INT
    section  := ["facets"] row*        # each row is one facet
              | "ideal" row+           # each row is the support of a generator
    row      := INT ("," INT)*

Blank lines and lines starting with ``#`` are ignored.  Whitespace around
tokens is allowed; anything else is rejected with the offending line number.
"""
from __future__ import annotations

import re
from pathlib import Path

from .complexes import (
    MonomialIdeal,
    SimplicialComplex,
    bits_of,
    complex_from_facets,
    complex_from_ideal,
)
from .errors import MindistError, ParseError

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_ROW = re.compile(r"^\d+(\s*,\s*\d+)*$")


def parse_text(text: str, reindex: bool = False) -> SimplicialComplex:
    n = None
    mode = "facets"
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"expected header 'n=<int>', got {raw!r}", lineno)
            n = int(m.group(1))
            continue
        if line in ("facets", "ideal"):
            if rows:
                raise ParseError(f"section keyword {line!r} after data rows", lineno)
            mode = line
            continue
        if not _ROW.match(line):
            raise ParseError(f"malformed row {raw!r}", lineno)
        verts = [int(tok) for tok in line.split(",")]
        for v in verts:
            if v >= n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
        rows.append((lineno, verts))
    if n is None:
        raise ParseError("missing header 'n=<int>'")
    if not rows:
        raise ParseError(f"no {mode} rows")
    try:
        if mode == "ideal":
            ideal = MonomialIdeal.from_supports(n, [v for _, v in rows])
            return complex_from_ideal(ideal, reindex=reindex)
        return complex_from_facets(n, [v for _, v in rows], reindex=reindex)
    except MindistError as exc:
        raise ParseError(str(exc)) from exc


def read_complex(path: str | Path, reindex: bool = False) -> SimplicialComplex:
    return parse_text(Path(path).read_text(encoding="utf-8"), reindex=reindex)


def format_complex(cplx: SimplicialComplex) -> str:
    lines = [f"n={cplx.n}"]
    lines.extend(",".join(map(str, bits_of(f))) for f in cplx.facet_masks)
    return "\n".join(lines) + "\n"


def write_complex(cplx: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(format_complex(cplx), encoding="utf-8")
