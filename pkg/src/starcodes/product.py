"""Componentwise (star) products of vectors and codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .code import LinearCode
from .errors import EmptyList, FieldMismatch, LengthMismatch
from .gf import Field
from .matrix import CodeVector, GFMatrix, _rref_lists

__all__ = ["SupportReport", "power_code", "product_code", "star", "support_condition"]


def _star_rows(field: Field, rows: Sequence[Sequence[int]]) -> list[int]:
    out = list(rows[0])
    if field._mul is not None:
        mul = field._mul
        for r in rows[1:]:
            out = [mul[a][b] for a, b in zip(out, r)]
    else:
        for r in rows[1:]:
            out = [field.mul(a, b) for a, b in zip(out, r)]
    return out


def star(xs: Sequence[Sequence[int]], field: Field | None = None) -> CodeVector:
    """Coordinatewise product of one or more vectors.

    Vectors that are :class:`CodeVector` carry their field; plain sequences
    need ``field``.
    """
    if not xs:
        raise EmptyList("star of an empty list")
    fields = {x.field for x in xs if isinstance(x, CodeVector)}
    if field is not None:
        fields.add(field)
    if len(fields) > 1:
        raise FieldMismatch(f"vectors over different fields: {fields}")
    if not fields:
        raise FieldMismatch("no field given for plain sequences")
    (F,) = fields
    n = len(xs[0])
    if any(len(x) != n for x in xs):
        raise LengthMismatch(f"vector lengths {[len(x) for x in xs]}")
    return CodeVector(F, _star_rows(F, xs))


def _check_codes(Cs: Sequence[LinearCode]) -> tuple[Field, int]:
    if not Cs:
        raise EmptyList("need at least one code")
    F, n = Cs[0].field, Cs[0].n
    for C in Cs[1:]:
        if C.field != F:
            raise FieldMismatch(f"{C.field} vs {F}")
        if C.n != n:
            raise LengthMismatch(f"lengths {[c.n for c in Cs]}")
    return F, n


def _span(field: Field, rows: list[list[int]], n: int) -> LinearCode:
    reduced, pivots = _rref_lists(field, rows, n)
    return LinearCode(field, GFMatrix(field, reduced[:len(pivots)], n, check=False))


def product_code(Cs: Sequence[LinearCode]) -> LinearCode:
    """The code spanned by all products c_1 * ... * c_t with c_i in C_i.

    By multilinearity the products of generator rows already span it.  The
    fold is done one factor at a time with a reduction after each step, so
    the intermediate basis never exceeds n rows.
    """
    F, n = _check_codes(Cs)
    acc = Cs[0]
    for C in Cs[1:]:
        if acc.k == 0 or C.k == 0:
            return LinearCode.zero(F, n)
        rows = [_star_rows(F, (a, b)) for a in acc.generator.rows for b in C.generator.rows]
        acc = _span(F, rows, n)
    return acc


def power_code(C: LinearCode, t: int) -> LinearCode:
    """C^(t), from the products over multisets of t generator rows."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t == 1 or C.k == 0:
        return C
    G = C.generator.rows
    rows = [_star_rows(C.field, [G[i] for i in combo])
            for combo in itertools.combinations_with_replacement(range(len(G)), t)]
    return _span(C.field, rows, C.n)


@dataclass(frozen=True)
class SupportReport:
    """Per-coordinate support counts for a list of t codes.

    ``verdict`` is True when every count is 0, 1 or t; for t <= 2 that holds
    trivially.
    """

    t: int
    counts: tuple[int, ...]
    offending: tuple[int, ...] = dc_field(default=())

    @property
    def verdict(self) -> bool:
        return not self.offending

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {"t": self.t, "counts": list(self.counts), "verdict": self.verdict,
                "offending": list(self.offending)}


def support_condition(Cs: Sequence[LinearCode]) -> SupportReport:
    F, n = _check_codes(Cs)
    t = len(Cs)
    counts = [0] * n
    for C in Cs:
        for j in C.support():
            counts[j] += 1
    offending = () if t <= 2 else tuple(j for j, c in enumerate(counts) if c not in (0, 1, t))
    return SupportReport(t, tuple(counts), offending)
