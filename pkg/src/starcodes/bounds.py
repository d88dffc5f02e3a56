"""
Bounds on products of codes, exact small values of a_q^(t)(n, d), the
extremal constructions, and verifiers for two auxiliary inequalities.

a_q^(t)(n, d) is the largest k such that some [n, k] code C over GF(q) has
d_min(C^(t)) >= d.  The closed forms implemented here:

* ``d <= t``:  a_q^(t)(n, d) = floor(n / d)  (exact)
* ``d > t``:   a_q^(t)(n, d) <= floor((n - d) / t) + 1
* alpha_q^(t)(delta) <= (1 - delta) / t for 0 < delta <= 1, and alpha_q^(t)(0) = 1.

Known lower bounds on alpha_q^(t) from algebraic-geometry codes, such as
(1 - delta)/t - 1/A(q) with A(q) the Ihara constant, are not computed here.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .code import (
    DEFAULT_BUDGET,
    LinearCode,
    code_from_generator,
    gaussian_binomial,
    iter_pivot_patterns,
    iter_subspaces,
)
from .errors import BudgetExceeded, DuplicatePoints, InvalidParams, PreconditionViolated, TooLong
from .gf import Field
from .matrix import GFMatrix
from .product import _check_codes, power_code, product_code

__all__ = [
    "AdjunctionCheck",
    "AlphaBound",
    "AqFormula",
    "BoundsRow",
    "DimDperpCheck",
    "alpha_upper_bound",
    "aq_exact",
    "aq_formula_bound",
    "check_adjunction",
    "check_dim_dperp",
    "format_table",
    "inner_product",
    "pairwise_bound",
    "partition_code",
    "product_singleton_bound",
    "reed_solomon",
]


def product_singleton_bound(n: int, t: int, ks: Sequence[int]) -> int:
    """max(t - 1, n + t - sum(ks))"""
    if t < 1 or len(ks) != t:
        raise InvalidParams(f"need t >= 1 dimensions, got t={t}, ks={list(ks)}")
    if any(not 1 <= k <= n for k in ks):
        raise InvalidParams(f"dimensions {list(ks)} must lie in [1, {n}]")
    return max(t - 1, n + t - sum(ks))


def pairwise_bound(n: int, k: int, k2: int) -> int:
    """max(1, n - k - k2 + 2), the t = 2 case."""
    return product_singleton_bound(n, 2, [k, k2])


class AqFormula(NamedTuple):
    value: int
    exact: bool


def aq_formula_bound(n: int, d: int, t: int) -> AqFormula:
    if t < 1 or not 1 <= d <= n:
        raise InvalidParams(f"need t >= 1 and 1 <= d <= n, got n={n}, d={d}, t={t}")
    if d <= t:
        return AqFormula(n // d, True)
    return AqFormula((n - d) // t + 1, False)


@dataclass(frozen=True)
class AlphaBound:
    delta: Fraction
    t: int
    upper: Fraction
    exact: bool = False


def alpha_upper_bound(delta, t: int) -> AlphaBound:
    """Upper bound (1 - delta)/t on alpha_q^(t)(delta); the exact value 1 at delta = 0."""
    delta = Fraction(delta)
    if t < 1 or not 0 <= delta <= 1:
        raise InvalidParams(f"need t >= 1 and 0 <= delta <= 1, got delta={delta}, t={t}")
    if delta == 0:
        return AlphaBound(delta, t, Fraction(1), exact=True)
    return AlphaBound(delta, t, (1 - delta) / t)


# -- exact a_q^(t)(n, d) ------------------------------------------------------

@dataclass
class BoundsRow:
    q: int
    n: int
    d: int
    t: int
    formula_bound: int
    formula_exact: bool
    exact_value: int | None = None
    extremal_code: LinearCode | None = None
    enumerated_subspaces: int = 0

    def to_dict(self) -> dict:
        return {
            "q": self.q, "n": self.n, "d": self.d, "t": self.t,
            "formula_bound": self.formula_bound, "formula_exact": self.formula_exact,
            "exact_value": self.exact_value,
            "extremal_code": None if self.extremal_code is None else self.extremal_code.generator.tolist(),
            "enumerated_subspaces": self.enumerated_subspaces,
        }

    def to_record(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


_TABLE_COLUMNS = ("q", "n", "d", "t", "formula", "kind", "exact", "enumerated")


def format_table(rows: Sequence[BoundsRow]) -> str:
    """Right-aligned text table, one line per row."""
    cells = [_TABLE_COLUMNS]
    for r in rows:
        cells.append((
            str(r.q), str(r.n), str(r.d), str(r.t), str(r.formula_bound),
            "exact" if r.formula_exact else "upper",
            "-" if r.exact_value is None else str(r.exact_value),
            str(r.enumerated_subspaces),
        ))
    widths = [max(len(c[i]) for c in cells) for i in range(len(_TABLE_COLUMNS))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in cells) + "\n"


def _power_distance_ok(C: LinearCode, t: int, d: int, memo: dict) -> bool:
    P = power_code(C, t)
    if P.k > P.n - d + 1:
        # Singleton: d_min(P) <= n - dim P + 1 < d
        return False
    try:
        return memo[P]
    except KeyError:
        ok = memo[P] = P.min_distance() >= d
        return ok


def _scan_pattern(field: Field, n: int, k: int, d: int, t: int, pattern: tuple[int, ...]):
    """First code (by position in the pattern's stream) meeting the target, and the count scanned."""
    memo: dict = {}
    count = 0
    for C in iter_subspaces(field, n, k, pivots=pattern):
        count += 1
        if _power_distance_ok(C, t, d, memo):
            return C, count
    return None, count


def _search_cost(n: int, k: int, t: int, q: int) -> int:
    return gaussian_binomial(n, k, q) * q ** min(n, math.comb(k + t - 1, t))


def aq_exact(field: Field, n: int, d: int, t: int, budget: int = DEFAULT_BUDGET,
             ceiling: int | None = None, workers: int = 1) -> BoundsRow:
    """Exhaustive a_q^(t)(n, d).

    Dimensions are tried from ``ceiling`` (default: the closed-form bound)
    downwards; the first k for which some k-dimensional code works is the
    answer, because codes with the property are closed under taking
    subcodes.  The extremal code is the first success in canonical
    enumeration order, also when ``workers > 1``.

    The budget caps the summed search cost over the dimensions visited,
    where one dimension costs (#subspaces) * q^(max power dimension).
    """
    formula = aq_formula_bound(n, d, t)
    top = formula.value if ceiling is None else min(ceiling, n)
    row = BoundsRow(field.q, n, d, t, formula.value, formula.exact)
    known_lower = formula.value if formula.exact else 1
    spent = 0
    memo: dict = {}
    for k in range(top, 0, -1):
        spent += _search_cost(n, k, t, field.q)
        if spent > budget:
            raise BudgetExceeded(
                f"a_{field.q}^({t})({n},{d}): search at k={k} exceeds budget {budget}",
                bracket=(min(known_lower, k), k),
            )
        found = None
        if workers > 1:
            patterns = list(iter_pivot_patterns(n, k))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_scan_pattern, *zip(*[(field, n, k, d, t, p) for p in patterns])))
            for C, count in results:
                row.enumerated_subspaces += count
            found = next((C for C, _ in results if C is not None), None)
        else:
            for C in iter_subspaces(field, n, k):
                row.enumerated_subspaces += 1
                if _power_distance_ok(C, t, d, memo):
                    found = C
                    break
        if found is not None:
            row.exact_value = k
            row.extremal_code = found
            return row
    # k = 0: the zero code vacuously qualifies
    row.exact_value = 0
    return row


# -- constructions ------------------------------------------------------------

def partition_code(field: Field, n: int, d: int) -> LinearCode:
    """Span of the indicator vectors of floor(n/d) consecutive coordinate blocks.

    Blocks have sizes n // b or n // b + 1 (b = floor(n/d)), the larger ones
    first.  When n mod d <= b this is r = n mod d blocks of size d + 1
    followed by blocks of size d.  Since the indicators are idempotent with
    disjoint supports, every power of the code is the code itself.
    """
    if not 1 <= d <= n:
        raise InvalidParams(f"need 1 <= d <= n, got n={n}, d={d}")
    b = n // d
    size, extra = divmod(n, b)
    rows, start = [], 0
    for i in range(b):
        width = size + (1 if i < extra else 0)
        rows.append([1 if start <= j < start + width else 0 for j in range(n)])
        start += width
    return LinearCode(field, GFMatrix(field, rows, n, check=False))


def reed_solomon(field: Field, n: int, k: int, points: Sequence[int] | None = None) -> LinearCode:
    """Evaluations of polynomials of degree < k at ``points`` (default 0..n-1)."""
    if n > field.q:
        raise TooLong(f"length {n} exceeds field size {field.q}")
    if not 1 <= k <= n:
        raise InvalidParams(f"need 1 <= k <= n, got n={n}, k={k}")
    if points is None:
        points = list(range(n))
    points = [field.check(x) for x in points]
    if len(points) != n:
        raise InvalidParams(f"{len(points)} points for length {n}")
    if len(set(points)) != n:
        raise DuplicatePoints(f"evaluation points {points} repeat")
    rows = [[field.pow(x, j) for x in points] for j in range(k)]
    return code_from_generator(field, GFMatrix(field, rows, n, check=False))


# -- verifiers ---------------------------------------------------------------

def inner_product(field: Field, x: Sequence[int], y: Sequence[int]) -> int:
    """<x|y>, i.e. the coordinate sum of x * y."""
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


@dataclass(frozen=True)
class DimDperpCheck:
    n: int
    dim_c1: int
    dim_product: int
    dual_distance: int | None  # None when C2 is the whole space (empty dual)
    rhs: int | None
    holds: bool | None
    skipped: bool = False


def check_dim_dperp(C1: LinearCode, C2: LinearCode, budget: int = DEFAULT_BUDGET) -> DimDperpCheck:
    """Check dim(C1 * C2) >= min(n, dim C1 + d_min(C2^perp) - 2) for full-support codes."""
    F, n = _check_codes([C1, C2])
    if not (C1.has_full_support and C2.has_full_support):
        raise PreconditionViolated("both codes must have full support")
    dim_product = product_code([C1, C2]).k
    dual = C2.dual()
    if dual.k == 0:
        dperp, rhs = None, n
    else:
        try:
            dperp = dual.min_distance(budget)
        except BudgetExceeded:
            return DimDperpCheck(n, C1.k, dim_product, None, None, None, skipped=True)
        rhs = min(n, C1.k + dperp - 2)
    return DimDperpCheck(n, C1.k, dim_product, dperp, rhs, dim_product >= rhs)


@dataclass(frozen=True)
class AdjunctionCheck:
    dim_c: int
    dim_d: int
    violations: int

    @property
    def holds(self) -> bool:
        return self.violations == 0


def check_adjunction(C: LinearCode, C2: LinearCode) -> AdjunctionCheck:
    """Check that C is orthogonal to D = C2 * (C * C2)^perp, generator by generator."""
    F, n = _check_codes([C, C2])
    D = product_code([C2, product_code([C, C2]).dual()])
    violations = sum(
        1 for g in C.generator.rows for h in D.generator.rows if inner_product(F, g, h)
    )
    return AdjunctionCheck(C.k, D.k, violations)
