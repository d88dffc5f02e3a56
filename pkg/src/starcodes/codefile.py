"""
Plain-text code files.

    # optional comments start with '#'
    q=4 n=5 k=2 poly=7
    1 0 2 3 1
    0 1 1 1 2

The header gives the field order, the length and the number of generator
rows that follow; ``poly`` is the field modulus in digit encoding and may be
omitted when a built-in default exists (it is always written for q != p).
Codes are re-canonicalized on load.
"""

from __future__ import annotations

from pathlib import Path

from .code import LinearCode, code_from_generator
from .errors import CodeFormatError, CodingError
from .gf import GF
from .matrix import GFMatrix

__all__ = ["dump_code", "load_code", "parse_code", "save_code"]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_code(text: str) -> LinearCode:
    lines = [s for s in (_strip(l) for l in text.splitlines()) if s]
    if not lines:
        raise CodeFormatError("empty code file")
    header = {}
    for token in lines[0].split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("q", "n", "k", "poly"):
            raise CodeFormatError(f"bad header token {token!r}")
        try:
            header[key] = int(value)
        except ValueError:
            raise CodeFormatError(f"header value {token!r} is not an integer") from None
    missing = {"q", "n", "k"} - header.keys()
    if missing:
        raise CodeFormatError(f"header lacks {sorted(missing)}")
    q, n, k = header["q"], header["n"], header["k"]
    try:
        field = GF(q, header.get("poly"))
    except CodingError as exc:
        raise CodeFormatError(f"bad field in header: {exc}") from exc
    body = lines[1:]
    if len(body) != k:
        raise CodeFormatError(f"header says k={k} but {len(body)} rows follow")
    rows = []
    for i, line in enumerate(body):
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise CodeFormatError(f"row {i + 1} has a non-integer entry") from None
        if len(row) != n:
            raise CodeFormatError(f"row {i + 1} has {len(row)} entries, expected {n}")
        if any(not 0 <= v < q for v in row):
            raise CodeFormatError(f"row {i + 1} has an entry outside [0, {q})")
        rows.append(row)
    return code_from_generator(field, GFMatrix(field, rows, n, check=False))


def dump_code(C: LinearCode) -> str:
    F = C.field
    header = f"q={F.q} n={C.n} k={C.k}"
    if F.m > 1:
        header += f" poly={F.poly}"
    lines = [header] + [" ".join(str(v) for v in row) for row in C.generator.rows]
    return "\n".join(lines) + "\n"


def load_code(path) -> LinearCode:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def save_code(C: LinearCode, path) -> None:
    Path(path).write_text(dump_code(C), encoding="utf-8")
