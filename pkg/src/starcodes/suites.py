"""
Reproducible check suites shared by the CLI and the acceptance tests.

Randomized suites draw everything (field, length, dimensions, generator
entries) from one :class:`~starcodes.rng.SplitMix64` stream, in the order
the loops below consume it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .bounds import (
    check_adjunction,
    check_dim_dperp,
    pairwise_bound,
    product_singleton_bound,
    reed_solomon,
)
from .code import LinearCode
from .errors import SupportConditionViolated
from .gf import GF
from .product import power_code, product_code, support_condition
from .rng import SplitMix64, random_code
from .witness import product_singleton_witness, unconditional_witness, verify_report


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    skipped: int = 0
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"name": self.name, "trials": self.trials, "skipped": self.skipped,
                "ok": self.ok, "failures": self.failures}


def dim_dperp_suite(trials: int, qs: Sequence[int], nmax: int, seed: int) -> SuiteResult:
    rng = SplitMix64(seed)
    res = SuiteResult("dim_dperp")
    for trial in range(trials):
        F = GF(rng.choice(list(qs)))
        n = rng.randint(1, nmax)
        C1 = random_code(F, n, rng.randint(1, n), rng, full_support=True)
        C2 = random_code(F, n, rng.randint(1, n), rng, full_support=True)
        out = check_dim_dperp(C1, C2)
        res.trials += 1
        if out.skipped:
            res.skipped += 1
        elif not out.holds:
            res.failures.append(f"trial {trial}: {C1!r} {C2!r} -> {out}")
    return res


def adjunction_suite(trials: int, qs: Sequence[int], nmax: int, seed: int) -> SuiteResult:
    rng = SplitMix64(seed)
    res = SuiteResult("adjunction")
    for trial in range(trials):
        F = GF(rng.choice(list(qs)))
        n = rng.randint(1, nmax)
        C = random_code(F, n, rng.randint(0, n), rng)
        C2 = random_code(F, n, rng.randint(0, n), rng)
        out = check_adjunction(C, C2)
        res.trials += 1
        if out.violations:
            res.failures.append(f"trial {trial}: {C!r} {C2!r} -> {out.violations} violations")
    return res


def theorem_suite(trials: int, ts: Sequence[int], qs: Sequence[int], nmax: int, seed: int,
                  nmin: int = 1) -> SuiteResult:
    """Witnesses for random full-support tuples must verify."""
    rng = SplitMix64(seed)
    res = SuiteResult("theorem")
    for trial in range(trials):
        F = GF(rng.choice(list(qs)))
        t = rng.choice(list(ts))
        n = rng.randint(nmin, nmax)
        Cs = [random_code(F, n, rng.randint(1, n), rng, full_support=True) for _ in range(t)]
        report = product_singleton_witness(Cs)
        res.trials += 1
        problems = verify_report(Cs, report)
        if problems:
            res.failures.append(f"trial {trial}: {Cs!r}: {problems}")
    return res


@dataclass
class Check:
    name: str
    ok: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def worked_examples() -> list[Check]:
    """The worked examples: the [4,2] block code, the support-condition
    counterexample, and Reed-Solomon tightness over GF(7)."""
    checks = []
    F = GF(2)

    C = LinearCode.from_rows(F, [[1, 1, 0, 0], [0, 0, 1, 1]])
    C3 = power_code(C, 3)
    d = C3.min_distance()
    checks.append(Check("block code: C^(3) = C", C3 == C, f"C^(3) generator {C3.generator.tolist()}"))
    checks.append(Check("block code: d_min(C^(3)) = t - 1 = 2", d == 2, f"d_min = {d}"))
    w = product_singleton_witness([C, C, C])
    checks.append(Check(
        "block code: witness weight <= 2",
        not verify_report([C, C, C], w) and w.weight <= 2 and w.bound == 2,
        f"weight {w.weight}, bound {w.bound}, branch {w.branch.value}",
    ))

    G12 = LinearCode.from_rows(F, [[1, 1, 1, 0], [0, 0, 0, 1]])
    G3 = LinearCode.from_rows(F, [[1, 1, 1, 0]])
    triple = [G12, G12, G3]
    sc = support_condition(triple)
    checks.append(Check("counterexample: support condition fails at coordinate 3",
                        sc.offending == (3,), f"counts {list(sc.counts)}"))
    dp = product_code(triple).min_distance()
    bound = product_singleton_bound(4, 3, [2, 2, 1])
    checks.append(Check("counterexample: d_min = 3 > bound 2", dp == 3 and bound == 2,
                        f"d_min {dp}, bound {bound}"))
    try:
        product_singleton_witness(triple)
        refused = False
    except SupportConditionViolated:
        refused = True
    checks.append(Check("counterexample: conditional witness refuses", refused, ""))
    u = unconditional_witness(triple)
    checks.append(Check(
        "counterexample: unconditional bound 3 on I = {0,1,2}",
        u.support == (0, 1, 2) and u.bound == 3 and not verify_report(triple, u),
        f"weight {u.weight}, bound {u.bound}, lift_exact {u.lift_exact}",
    ))

    F7 = GF(7)
    bad = []
    for k1 in range(1, 7):
        for k2 in range(1, 8 - k1):
            A, B = reed_solomon(F7, 7, k1), reed_solomon(F7, 7, k2)
            dmin = product_code([A, B]).min_distance()
            wit = product_singleton_witness([A, B])
            if dmin != 9 - k1 - k2 or wit.weight > dmin or verify_report([A, B], wit):
                bad.append((k1, k2, dmin, wit.weight))
    checks.append(Check("Reed-Solomon GF(7): d_min(RS_k1 * RS_k2) = 9 - k1 - k2", not bad,
                        f"mismatches {bad}" if bad else "all 21 pairs tight"))
    checks.append(Check("pairwise bound n=7,k=k'=2 is 5", pairwise_bound(7, 2, 2) == 5, ""))
    return checks
