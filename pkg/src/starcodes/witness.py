"""
Explicit codewords whose star product is light.

Given codes C_1, ..., C_t of length n with dimensions k_i, the routines here
return c_i in C_i with

    1 <= w(c_1 * ... * c_t) <= max(t - 1, n + t - (k_1 + ... + k_t)),

computed from parity-check matrices by column-basis exchange.  Every report
carries a trace of the choices made, so runs are reproducible step by step.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .bounds import product_singleton_bound
from .code import LinearCode
from .errors import PreconditionViolated, SupportConditionViolated, ZeroProduct
from .matrix import (
    CodeVector,
    columns_independent,
    dependency_vector,
    exchange_into_basis,
    extend_to_maximal_independent,
    kernel_basis,
)
from .product import _check_codes, star, support_condition

__all__ = [
    "Branch",
    "WitnessReport",
    "high_dim_witness",
    "product_singleton_witness",
    "unconditional_witness",
    "verify_report",
]


class Branch(str, enum.Enum):
    HIGH_DIM = "HighDim"
    PUNCTURED_HIGH_DIM = "PuncturedHighDim"
    KERNEL_SHORTCUT = "KernelShortcut"
    PROJECTED_UNCONDITIONAL = "ProjectedUnconditional"


@dataclass
class WitnessReport:
    """Codewords c_i (in input order), their product and its weight.

    For the unconditional variant ``weight`` is the weight of the product
    restricted to the common support ``support``; ``lift_exact`` says whether
    the full-length product has that same weight.
    """

    codewords: list[CodeVector]
    product: CodeVector
    weight: int
    bound: int
    branch: Branch
    trace: list[dict] = dc_field(default_factory=list)
    support: tuple[int, ...] = ()
    lift_exact: bool = True
    projected_codewords: list[CodeVector] | None = None
    projected_product: CodeVector | None = None

    @property
    def t(self) -> int:
        return len(self.codewords)

    def to_dict(self) -> dict:
        out = {
            "q": self.product.field.q,
            "n": len(self.product),
            "t": self.t,
            "branch": self.branch.value,
            "bound": self.bound,
            "weight": self.weight,
            "lift_exact": self.lift_exact,
            "support": list(self.support),
            "codewords": [list(c) for c in self.codewords],
            "product": list(self.product),
            "trace": self.trace,
        }
        if self.projected_codewords is not None:
            out["projected_codewords"] = [list(c) for c in self.projected_codewords]
            out["projected_product"] = list(self.projected_product)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _first_row_nonzero_at(C: LinearCode, j: int) -> CodeVector:
    for row in C.generator:
        if row[j]:
            return row
    raise PreconditionViolated(f"code has no codeword nonzero at coordinate {j}")


def _high_dim(codes: Sequence[LinearCode], trace: list[dict]) -> list[CodeVector]:
    """Full-support codes with dimension sum above n: weight at most t - 1."""
    t = len(codes)
    n = codes[0].n
    H = [C.parity_check for C in codes]
    B = [set(extend_to_maximal_independent(h)) for h in H]
    trace.append({"step": "bases", "B": [sorted(b) for b in B]})

    # Shrink the common part I of the bases until (B_a \ I) + {j1} is
    # dependent in H_a.  j1 is chosen afresh on every pass: after an exchange
    # the previous j1 has entered B_a and the stop test could never fire.
    while True:
        I = set.intersection(*B)
        counts = [sum(j in b for b in B) for j in range(n)]
        j1 = next(j for j in range(n) if counts[j] <= t - 2)
        a, b = [i for i in range(t) if j1 not in B[i]][:2]
        if not columns_independent(H[a], (B[a] - I) | {j1}):
            trace.append({"step": "stop", "I": sorted(I), "j1": j1, "pair": [a, b]})
            break
        j, new_basis = exchange_into_basis(H[a], B[a], I, j1)
        trace.append({"step": "exchange", "I": sorted(I), "j1": j1, "pair": [a, b],
                      "code": a, "out": j})
        B[a] = set(new_basis)

    A = [set(x) for x in B]
    A[a] = B[a] - I
    order = [a, b] + [i for i in range(t) if i not in (a, b)]
    trace.append({"step": "sets", "A": [sorted(x) for x in A], "order": list(order)})

    c: dict[int, CodeVector] = {
        a: dependency_vector(H[a], A[a], j1),
        b: dependency_vector(H[b], A[b], j1),
    }
    js = [j1]
    for s in range(2, t):
        p = star([c[order[i]] for i in range(s)])
        S = [j for j in p.support if j not in js]
        if not S:
            js.append(js[-1])
            nxt = order[s]
            c[nxt] = _first_row_nonzero_at(codes[nxt], js[-1])
            trace.append({"step": "induct", "s": s + 1, "case": "empty", "j": js[-1], "code": nxt})
            continue
        js.append(S[0])
        pos = next((i for i in range(s, t) if S[0] not in A[order[i]]), None)
        if pos is None:
            raise AssertionError("sets A_i have a common element")
        order[s], order[pos] = order[pos], order[s]
        nxt = order[s]
        c[nxt] = dependency_vector(H[nxt], A[nxt], S[0])
        trace.append({"step": "induct", "s": s + 1, "case": "exchange", "j": S[0], "code": nxt,
                      "order": list(order)})
    trace.append({"step": "j_sequence", "j": js})
    return [c[i] for i in range(t)]


def high_dim_witness(Cs: Sequence[LinearCode]) -> WitnessReport:
    """Witness of weight at most t - 1 for full-support codes with sum k_i > n."""
    F, n = _check_codes(Cs)
    t = len(Cs)
    if t < 2:
        raise PreconditionViolated("need at least two codes")
    if not all(C.has_full_support for C in Cs):
        raise PreconditionViolated("every code must have full support")
    if sum(C.k for C in Cs) <= n:
        raise PreconditionViolated(f"dimension sum {sum(C.k for C in Cs)} does not exceed n={n}")
    trace: list[dict] = []
    cw = _high_dim(Cs, trace)
    product = star(cw)
    return WitnessReport(cw, product, product.weight, t - 1, Branch.HIGH_DIM, trace,
                         support=tuple(range(n)))


def _full_support_core(codes: Sequence[LinearCode], trace: list[dict]) -> tuple[list[CodeVector], Branch]:
    n = codes[0].n
    ks = [C.k for C in codes]
    if sum(ks) > n:
        return _high_dim(codes, trace), Branch.HIGH_DIM

    m = sum(ks) - 1
    head = tuple(range(m))
    punctured = [C.project(head) for C in codes]
    trace.append({"step": "puncture", "m": m, "dims": [P.k for P in punctured]})
    if m > 0 and all(P.k == k for P, k in zip(punctured, ks)):
        short = _high_dim(punctured, trace)
        # projection onto the head is injective on every code
        return [C.lift(head, v) for C, v in zip(codes, short)], Branch.PUNCTURED_HIGH_DIM

    i0 = next(i for i, (P, k) in enumerate(zip(punctured, ks)) if P.k < k)
    G = codes[i0].generator
    x = kernel_basis(G.select_columns(head).transpose()).rows[0]
    c0 = G.left_mul(x)
    j = c0.support[0]
    cw = [c0 if i == i0 else _first_row_nonzero_at(C, j) for i, C in enumerate(codes)]
    trace.append({"step": "kernel", "code": i0, "j": j, "weight": c0.weight})
    return cw, Branch.KERNEL_SHORTCUT


def _common_support(Cs: Sequence[LinearCode]) -> tuple[int, ...]:
    common = set(Cs[0].support())
    for C in Cs[1:]:
        common &= set(C.support())
    return tuple(sorted(common))


def product_singleton_witness(Cs: Sequence[LinearCode]) -> WitnessReport:
    """Codewords with 1 <= w(c_1*...*c_t) <= max(t-1, n+t-sum k_i).

    Requires a nonzero product and, for t >= 3, the support condition.
    """
    F, n = _check_codes(Cs)
    t = len(Cs)
    if t >= 3:
        report = support_condition(Cs)
        if not report:
            raise SupportConditionViolated(
                f"coordinates {list(report.offending)} lie in the support of "
                f"{[report.counts[j] for j in report.offending]} of {t} codes")
    I = _common_support(Cs)
    if not I:
        raise ZeroProduct("the supports of the codes do not intersect")
    bound = product_singleton_bound(n, t, [C.k for C in Cs])
    projected = [C.project(I) for C in Cs]
    trace = [{"step": "project", "I": list(I), "k_bar": [P.k for P in projected]}]
    short, branch = _full_support_core(projected, trace)
    codewords = [C.lift(I, v) for C, v in zip(Cs, short)]
    product = star(codewords)
    return WitnessReport(codewords, product, product.weight, bound, branch, trace, support=I)


def unconditional_witness(Cs: Sequence[LinearCode]) -> WitnessReport:
    """Witness on the common support I, without the support condition.

    The bound is max(t-1, |I| + t - sum dim(pi_I(C_i))) and applies to the
    product restricted to I.  Each codeword is the zero extension of its
    restriction when that extension is a codeword, a back-substituted
    preimage otherwise; ``lift_exact`` records whether the full product
    still has the reported weight.
    """
    F, n = _check_codes(Cs)
    t = len(Cs)
    I = _common_support(Cs)
    if not I:
        raise ZeroProduct("the supports of the codes do not intersect")
    projected = [C.project(I) for C in Cs]
    k_bar = [P.k for P in projected]
    bound = product_singleton_bound(len(I), t, k_bar)
    trace = [{"step": "project", "I": list(I), "k_bar": k_bar}]
    short, inner = _full_support_core(projected, trace)
    trace.append({"step": "inner_branch", "branch": inner.value})

    codewords = []
    for C, v in zip(Cs, short):
        embedded = [0] * n
        for j, x in zip(I, v):
            embedded[j] = x
        if C.contains(embedded):
            codewords.append(CodeVector(F, embedded))
        else:
            codewords.append(C.lift(I, v))
    short_product = star(short)
    product = star(codewords)
    return WitnessReport(
        codewords, product, short_product.weight, bound, Branch.PROJECTED_UNCONDITIONAL, trace,
        support=I, lift_exact=product.weight == short_product.weight,
        projected_codewords=list(short), projected_product=short_product,
    )


def verify_report(Cs: Sequence[LinearCode], report: WitnessReport) -> list[str]:
    """Independent re-check of a report; returns the list of failed checks."""
    problems = []
    if len(report.codewords) != len(Cs):
        return [f"{len(report.codewords)} codewords for {len(Cs)} codes"]
    for i, (C, c) in enumerate(zip(Cs, report.codewords)):
        if not C.contains(c):
            problems.append(f"codeword {i} is not in its code")
    if tuple(star(report.codewords)) != tuple(report.product):
        problems.append("product is not the star of the codewords")
    if report.projected_codewords is None:
        if report.weight != report.product.weight:
            problems.append("reported weight differs from the product weight")
    else:
        for i, (c, v) in enumerate(zip(report.codewords, report.projected_codewords)):
            if tuple(c[j] for j in report.support) != tuple(v):
                problems.append(f"projected codeword {i} is not a restriction of codeword {i}")
        if tuple(star(report.projected_codewords)) != tuple(report.projected_product):
            problems.append("projected product is not the star of the projected codewords")
        if report.weight != report.projected_product.weight:
            problems.append("reported weight differs from the projected product weight")
        if report.lift_exact and report.product.weight != report.weight:
            problems.append("lift_exact set but full product weight differs")
    if not 1 <= report.weight <= report.bound:
        problems.append(f"weight {report.weight} outside [1, {report.bound}]")
    return problems
