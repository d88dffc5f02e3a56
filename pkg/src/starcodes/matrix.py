"""
Dense linear algebra over GF(q).

Matrices here are small (tens of rows and columns at most), so the row
reduction is written with plain Python lists and the field's lookup tables;
numpy is reserved for the enumeration kernels in :mod:`starcodes.code`.

Column sets are sorted tuples of distinct indices.  All functions are pure
and break ties by smallest index.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DependentSeed, FieldMismatch, InvalidParams, LengthMismatch, PreconditionViolated
from .gf import Field

__all__ = [
    "CodeVector",
    "GFMatrix",
    "colset",
    "columns_independent",
    "dependency_vector",
    "exchange_into_basis",
    "extend_to_maximal_independent",
    "kernel_basis",
    "rank",
    "rref",
    "solve_left",
]

ColumnSet = tuple  # sorted tuple of distinct ints


def colset(indices: Iterable[int], ncols: int | None = None) -> tuple[int, ...]:
    """Normalize ``indices`` into a sorted duplicate-free tuple, range-checked."""
    out = tuple(sorted(set(int(i) for i in indices)))
    if ncols is not None and out and (out[0] < 0 or out[-1] >= ncols):
        raise InvalidParams(f"column set {out} out of range [0, {ncols})")
    return out


class CodeVector(tuple):
    """A vector of field elements that remembers its field."""

    def __new__(cls, field: Field, values: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in values))
        self.field = field
        return self

    @classmethod
    def checked(cls, field: Field, values: Iterable[int]) -> "CodeVector":
        return cls(field, (field.check(v) for v in values))

    @classmethod
    def zeros(cls, field: Field, n: int) -> "CodeVector":
        return cls(field, (0,) * n)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self) if v)

    @property
    def weight(self) -> int:
        return sum(1 for v in self if v)

    def __reduce__(self):
        return (CodeVector, (self.field, tuple(self)))

    def __repr__(self):
        return f"CodeVector({list(self)})"


def _axpy_rows(field: Field, a: list[int], f: int, b: Sequence[int]) -> list[int]:
    """Return a - f*b."""
    if field._mul is not None:
        add, mul, neg = field._add, field._mul[f], field._neg
        return [add[x][neg[mul[y]]] for x, y in zip(a, b)]
    return [field.sub(x, field.mul(f, y)) for x, y in zip(a, b)]


def _scale_row(field: Field, f: int, a: Sequence[int]) -> list[int]:
    if field._mul is not None:
        mul = field._mul[f]
        return [mul[x] for x in a]
    return [field.mul(f, x) for x in a]


class GFMatrix:
    """Immutable r x c matrix over a Field, stored row-major as tuples."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]] = (), ncols: int | None = None,
                 *, check: bool = True):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise InvalidParams("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if check:
            q = field.q
            for r in rows:
                if len(r) != ncols:
                    raise LengthMismatch(f"row of length {len(r)} in a matrix with {ncols} columns")
                for v in r:
                    if not 0 <= v < q:
                        raise InvalidParams(f"{v} is not an element of GF({q})")
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "GFMatrix":
        return cls(field, ([int(i == j) for j in range(n)] for i in range(n)), n, check=False)

    @classmethod
    def zeros(cls, field: Field, r: int, c: int) -> "GFMatrix":
        return cls(field, ([0] * c for _ in range(r)), c, check=False)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, i: int) -> CodeVector:
        return CodeVector(self.field, self.rows[i])

    def __iter__(self):
        return (CodeVector(self.field, r) for r in self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "GFMatrix":
        cols = [[r[j] for r in self.rows] for j in range(self.ncols)]
        return GFMatrix(self.field, cols, len(self.rows), check=False)

    def select_columns(self, cols: Sequence[int]) -> "GFMatrix":
        return GFMatrix(self.field, ([r[j] for j in cols] for r in self.rows), len(cols), check=False)

    def stack(self, other: "GFMatrix") -> "GFMatrix":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ncols != self.ncols:
            raise LengthMismatch(f"{self.ncols} vs {other.ncols} columns")
        return GFMatrix(self.field, self.rows + other.rows, self.ncols, check=False)

    def mul_vec(self, v: Sequence[int]) -> CodeVector:
        """M . v^T"""
        if len(v) != self.ncols:
            raise LengthMismatch(f"vector of length {len(v)} against {self.ncols} columns")
        F = self.field
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return CodeVector(F, out)

    def left_mul(self, x: Sequence[int]) -> CodeVector:
        """x . M, a combination of the rows."""
        if len(x) != len(self.rows):
            raise LengthMismatch(f"{len(x)} coefficients for {len(self.rows)} rows")
        F = self.field
        acc = [0] * self.ncols
        for c, r in zip(x, self.rows):
            if c:
                acc = _axpy_rows(F, acc, F.neg(c), r)
        return CodeVector(F, acc)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), self.ncols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, GFMatrix) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"GFMatrix({self.field!r}, {self.tolist()}, ncols={self.ncols})"


def _rref_lists(field: Field, rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = _scale_row(field, field.inv(lead), rows[r])
        pivot_row = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                rows[i] = _axpy_rows(field, rows[i], rows[i][c], pivot_row)
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: GFMatrix) -> tuple[GFMatrix, tuple[int, ...], int]:
    """Reduced row echelon form, pivot columns and rank.

    >>> from starcodes.gf import GF
    >>> R, piv, rk = rref(GFMatrix(GF(2), [[1, 1], [1, 1]]))
    >>> R.tolist(), piv, rk
    ([[1, 1], [0, 0]], (0,), 1)
    """
    rows, pivots = _rref_lists(M.field, M.rows, M.ncols)
    return GFMatrix(M.field, rows, M.ncols, check=False), tuple(pivots), len(pivots)


def rank(M: GFMatrix) -> int:
    return len(_rref_lists(M.field, M.rows, M.ncols)[1])


def kernel_basis(M: GFMatrix) -> GFMatrix:
    """Basis of ``{v : M v^T = 0}``, one row per free column in increasing order."""
    F = M.field
    c = M.ncols
    rows, pivots = _rref_lists(F, M.rows, c)
    pivot_set = set(pivots)
    basis = []
    for f in range(c):
        if f in pivot_set:
            continue
        v = [0] * c
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = F.neg(rows[r][f])
        basis.append(v)
    return GFMatrix(F, basis, c, check=False)


def solve_left(M: GFMatrix, v: Sequence[int]) -> CodeVector | None:
    """Coefficients ``x`` with ``x . M = v``, or None if v is not in the row space.

    Free variables are set to zero, so the answer is deterministic.
    """
    F = M.field
    if len(v) != M.ncols:
        raise LengthMismatch(f"vector of length {len(v)} against {M.ncols} columns")
    k = len(M.rows)
    # Solve M^T x^T = v^T through the augmented system.
    aug = [[M.rows[i][j] for i in range(k)] + [v[j]] for j in range(M.ncols)]
    rows, pivots = _rref_lists(F, aug, k + 1)
    if pivots and pivots[-1] == k:
        return None
    x = [0] * k
    for r, p in enumerate(pivots):
        x[p] = rows[r][k]
    return CodeVector(F, x)


class _Reducer:
    """Incrementally maintained echelon basis, for independence tests."""

    def __init__(self, field: Field):
        self.field = field
        self.basis: list[tuple[int, list[int]]] = []  # (pivot, normalized vector)

    def reduce(self, v: Sequence[int]) -> list[int]:
        F = self.field
        v = list(v)
        for p, b in self.basis:
            if v[p]:
                v = _axpy_rows(F, v, v[p], b)
        return v

    def insert(self, v: Sequence[int]) -> bool:
        """Add v if it is independent of the current span; report whether it was."""
        r = self.reduce(v)
        p = next((i for i, x in enumerate(r) if x), None)
        if p is None:
            return False
        F = self.field
        if r[p] != 1:
            r = _scale_row(F, F.inv(r[p]), r)
        self.basis.append((p, r))
        return True


def columns_independent(M: GFMatrix, A: Iterable[int]) -> bool:
    """True iff the columns of M indexed by A are linearly independent."""
    A = colset(A, M.ncols)
    red = _Reducer(M.field)
    return all(red.insert(M.column(j)) for j in A)


def extend_to_maximal_independent(M: GFMatrix, seed: Iterable[int] = ()) -> tuple[int, ...]:
    """Greedily grow ``seed`` (scanning columns left to right) to a column basis."""
    seed = colset(seed, M.ncols)
    red = _Reducer(M.field)
    for j in seed:
        if not red.insert(M.column(j)):
            raise DependentSeed(f"seed {seed} is dependent")
    chosen = set(seed)
    target = rank(M)
    for j in range(M.ncols):
        if len(chosen) == target:
            break
        if j not in chosen and red.insert(M.column(j)):
            chosen.add(j)
    return colset(chosen)


def exchange_into_basis(M: GFMatrix, B: Iterable[int], I: Iterable[int], j1: int
                        ) -> tuple[int, tuple[int, ...]]:
    """Swap ``j1`` into the column basis ``B`` in place of some element of ``I``.

    Preconditions: B maximal independent, I a subset of B, j1 outside B and
    (B \\ I) + {j1} independent.  The fundamental circuit of j1 with respect
    to B then meets I, so a valid exchange exists; the smallest one is
    returned as ``(j, B')``.
    """
    B = colset(B, M.ncols)
    I = colset(I, M.ncols)
    if not set(I) <= set(B):
        raise PreconditionViolated(f"I={I} is not contained in B={B}")
    if j1 in B or not 0 <= j1 < M.ncols:
        raise PreconditionViolated(f"j1={j1} must lie outside B={B}")
    if len(B) != rank(M) or not columns_independent(M, B):
        raise PreconditionViolated(f"B={B} is not maximal independent")
    if not columns_independent(M, set(B) - set(I) | {j1}):
        raise PreconditionViolated("(B \\ I) + {j1} is dependent")
    for j in I:
        candidate = colset(set(B) - {j} | {j1})
        if columns_independent(M, candidate):
            return j, candidate
    raise PreconditionViolated("no exchange found")  # unreachable when pre holds


def dependency_vector(H: GFMatrix, A: Iterable[int], j: int) -> CodeVector:
    """The unique ``v`` with ``H v^T = 0``, ``v_j = 1`` and support inside A + {j}.

    A must be independent in H, j outside A, and A + {j} dependent.
    """
    A = colset(A, H.ncols)
    if j in A or not 0 <= j < H.ncols:
        raise PreconditionViolated(f"j={j} must lie outside A={A}")
    if not columns_independent(H, A):
        raise PreconditionViolated(f"A={A} is dependent")
    cols = list(A) + [j]
    K = kernel_basis(H.select_columns(cols))
    if len(K) != 1:
        raise PreconditionViolated(f"A + {{{j}}} is independent")
    k = K.rows[0]
    F = H.field
    scale = F.inv(k[-1])
    v = [0] * H.ncols
    for idx, x in zip(cols, k):
        v[idx] = F.mul(scale, x)
    return CodeVector(F, v)
