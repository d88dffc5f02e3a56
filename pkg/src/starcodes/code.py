"""
Linear codes held as canonical generator matrices.

A :class:`LinearCode` stores its generator in reduced row echelon form with
zero rows dropped, so two equal subspaces always compare (and hash) equal.
The exhaustive minimum-distance routine here is the brute-force oracle the
rest of the package is checked against.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, FieldMismatch, LengthMismatch, ZeroCode
from .gf import Field
from .matrix import CodeVector, GFMatrix, _rref_lists, colset, kernel_basis, solve_left

__all__ = [
    "DEFAULT_BUDGET",
    "LinearCode",
    "code_from_generator",
    "count_subspaces",
    "gaussian_binomial",
    "iter_subspaces",
    "span_array",
]

DEFAULT_BUDGET = 1 << 24
# rows of the innermost vectorized block in min_distance
_BLOCK = 1 << 14


class LinearCode:
    """A subspace of GF(q)^n.

    Build one with :func:`code_from_generator` (any spanning rows) rather than
    the constructor, which trusts its input to be canonical already.
    """

    __slots__ = ("field", "n", "generator", "_cache")

    def __init__(self, field: Field, generator: GFMatrix):
        self.field = field
        self.n = generator.ncols
        self.generator = generator
        self._cache = {}

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable[int]], n: int | None = None) -> "LinearCode":
        return code_from_generator(field, GFMatrix(field, rows, n))

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, GFMatrix(field, (), n, check=False))

    @classmethod
    def full(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, GFMatrix.identity(field, n))

    @property
    def k(self) -> int:
        return len(self.generator.rows)

    dimension = k

    def _cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def dual(self) -> "LinearCode":
        return self._cached("dual", lambda: code_from_generator(self.field, kernel_basis(self.generator)))

    @property
    def parity_check(self) -> GFMatrix:
        return self.dual().generator

    def support(self) -> tuple[int, ...]:
        return self._cached("support", lambda: tuple(
            j for j in range(self.n) if any(r[j] for r in self.generator.rows)))

    @property
    def has_full_support(self) -> bool:
        return len(self.support()) == self.n

    def project(self, I: Iterable[int]) -> "LinearCode":
        """Puncture onto the coordinates in ``I`` (re-indexed from 0)."""
        I = colset(I, self.n)
        return code_from_generator(self.field, self.generator.select_columns(I))

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.n:
            return False
        return not any(self.parity_check.mul_vec(v))

    __contains__ = contains

    def encode(self, message: Sequence[int]) -> CodeVector:
        return self.generator.left_mul(message)

    def lift(self, I: Sequence[int], v: Sequence[int]) -> CodeVector | None:
        """A codeword whose restriction to ``I`` is ``v`` (None if there is none).

        The message is found by back-substitution with free variables zero,
        which makes the preimage deterministic.
        """
        I = colset(I, self.n)
        x = solve_left(self.generator.select_columns(I), v)
        if x is None:
            return None
        return self.encode(x)

    def codewords(self) -> np.ndarray:
        """All q^k codewords, message order lexicographic."""
        return span_array(self.field, self.generator.rows, self.n)

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        return self._min_weight(budget)[0]

    def min_weight_codeword(self, budget: int = DEFAULT_BUDGET) -> CodeVector:
        return self._min_weight(budget)[1]

    def _min_weight(self, budget: int) -> tuple[int, CodeVector]:
        cached = self._cache.get("min_weight")
        if cached is not None:
            return cached
        if self.k == 0:
            raise ZeroCode("minimum distance of the zero code is undefined")
        if self.field.q ** self.k > budget:
            raise BudgetExceeded(
                f"enumerating q^k = {self.field.q}^{self.k} codewords exceeds budget {budget}",
                bracket=(1, self.n - self.k + 1),
            )
        result = self._cache["min_weight"] = _min_weight_scan(self.field, self.generator.rows, self.n)
        return result

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field == other.field
                and self.n == other.n and self.generator.rows == other.generator.rows)

    def __hash__(self):
        return hash((self.field, self.n, self.generator.rows))

    def __reduce__(self):
        return (LinearCode, (self.field, self.generator))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.field.q}, {self.generator.tolist()})"


def code_from_generator(field: Field, rows: GFMatrix) -> LinearCode:
    """Canonical code spanned by the rows of ``rows``."""
    if rows.field != field:
        raise FieldMismatch(f"matrix over {rows.field}, expected {field}")
    reduced, pivots = _rref_lists(field, rows.rows, rows.ncols)
    return LinearCode(field, GFMatrix(field, reduced[:len(pivots)], rows.ncols, check=False))


def span_array(field: Field, rows: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """Every combination of ``rows`` as an array of shape (q^len(rows), n).

    Row ``idx`` is the combination whose coefficients are the base-q digits
    of ``idx``, with ``rows[0]`` the most significant.
    """
    out = np.zeros((1, n), dtype=np.int64)
    q = field.q
    for r in reversed(rows):
        r = np.asarray(r, dtype=np.int64)
        blocks = [out] + [field.vadd(field.vmul(a, r)[None, :], out) for a in range(1, q)]
        out = np.concatenate(blocks, axis=0)
    return out


def _min_weight_scan(field: Field, rows: Sequence[Sequence[int]], n: int) -> tuple[int, CodeVector]:
    """Lexicographically first minimum-weight codeword over projective messages."""
    q = field.q
    k = len(rows)
    inner_len = 0
    while inner_len < k - 1 and q ** (inner_len + 1) <= _BLOCK:
        inner_len += 1
    suffix_tables = {}
    best_w, best = n + 1, None
    g = np.asarray(rows, dtype=np.int64)
    # Messages whose first nonzero entry (equal to 1) sits at position i.
    # Lexicographic order visits i = k-1 first.
    for i in range(k - 1, -1, -1):
        rest = k - 1 - i
        nin = min(rest, inner_len)
        nout = rest - nin
        if nin not in suffix_tables:
            suffix_tables[nin] = span_array(field, rows[k - nin:], n)
        table = suffix_tables[nin]
        outer_rows = g[i + 1:i + 1 + nout]
        for prefix in itertools.product(range(q), repeat=nout):
            base = g[i].copy()
            for c, r in zip(prefix, outer_rows):
                if c:
                    base = field.vadd(base, field.vmul(c, r))
            block = field.vadd(base[None, :], table)
            weights = np.count_nonzero(block, axis=1)
            idx = int(np.argmin(weights))
            w = int(weights[idx])
            if w < best_w:
                best_w, best = w, block[idx]
                if w == 1:
                    return 1, CodeVector(field, best.tolist())
    return best_w, CodeVector(field, best.tolist())


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _free_positions(pivots: Sequence[int], n: int) -> list[tuple[int, int]]:
    pivot_set = set(pivots)
    return [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]


def iter_pivot_patterns(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(n), k)


def iter_subspaces(field: Field, n: int, k: int, pivots: Sequence[int] | None = None
                   ) -> Iterator[LinearCode]:
    """Every k-dimensional code of length n, once each, as canonical rref.

    Order: pivot patterns lexicographically, then free entries in
    lexicographic order (row-major over the free positions).  ``pivots``
    restricts the stream to one pattern.
    """
    patterns = [tuple(pivots)] if pivots is not None else iter_pivot_patterns(n, k)
    q = field.q
    for pattern in patterns:
        free = _free_positions(pattern, n)
        template = [[0] * n for _ in range(k)]
        for r, p in enumerate(pattern):
            template[r][p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [row[:] for row in template]
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield LinearCode(field, GFMatrix(field, rows, n, check=False))

