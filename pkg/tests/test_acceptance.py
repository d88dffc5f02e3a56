"""Acceptance gate: one test per criterion, each timed against its limit.

A status line per criterion is printed in the terminal summary; running this
file directly prints the same lines.
"""

import itertools
import time

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import codeword_set, span_closure, star_all
from starcodes import (
    GF,
    LinearCode,
    aq_exact,
    aq_formula_bound,
    iter_subspaces,
    pairwise_bound,
    power_code,
    product_code,
    product_singleton_bound,
    product_singleton_witness,
    reed_solomon,
    support_condition,
    unconditional_witness,
    verify_report,
)
from starcodes.errors import SupportConditionViolated
from starcodes.rng import SplitMix64, random_code
from starcodes.suites import adjunction_suite, dim_dperp_suite, theorem_suite


def record(number, title, limit, fn):
    start = time.perf_counter()
    failure = None
    try:
        detail = fn()
    except AssertionError as exc:
        failure, detail = exc, str(exc)
    elapsed = time.perf_counter() - start
    if failure is None and elapsed > limit:
        failure = AssertionError(f"took {elapsed:.1f}s, limit {limit}s")
        detail = str(failure)
    status = "PASS" if failure is None else "FAIL"
    ACCEPTANCE_LINES[number] = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s) {detail or ''}".rstrip()
    print(ACCEPTANCE_LINES[number])
    if failure is not None:
        raise failure


def _block_code():
    F = GF(2)
    C = LinearCode.from_rows(F, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert power_code(C, 3) == C
    assert power_code(C, 3).min_distance() == 2
    rep = product_singleton_witness([C] * 3)
    assert rep.bound == 2 and rep.weight <= 2 and not verify_report([C] * 3, rep)
    return f"weight {rep.weight}, bound {rep.bound}"


def _support_condition_example():
    F = GF(2)
    G12 = LinearCode.from_rows(F, [[1, 1, 1, 0], [0, 0, 0, 1]])
    G3 = LinearCode.from_rows(F, [[1, 1, 1, 0]])
    Cs = [G12, G12, G3]
    sc = support_condition(Cs)
    assert not sc.verdict and sc.offending == (3,)
    d = product_code(Cs).min_distance()
    assert d == 3 > product_singleton_bound(4, 3, [2, 2, 1]) == 2
    with pytest.raises(SupportConditionViolated):
        product_singleton_witness(Cs)
    rep = unconditional_witness(Cs)
    assert rep.support == (0, 1, 2) and rep.bound == 3 and 1 <= rep.weight <= 3
    assert not verify_report(Cs, rep)
    return f"d_min {d}, unconditional weight {rep.weight} <= 3"


def _reed_solomon():
    F = GF(7)
    pairs = 0
    for k1 in range(1, 7):
        for k2 in range(1, 8 - k1):
            Cs = [reed_solomon(F, 7, k1), reed_solomon(F, 7, k2)]
            d = product_code(Cs).min_distance()
            assert d == 9 - k1 - k2, (k1, k2, d)
            rep = product_singleton_witness(Cs)
            assert rep.weight <= d and not verify_report(Cs, rep), (k1, k2)
            pairs += 1
    return f"{pairs} pairs"


def _exhaustive_pairs():
    F = GF(2)
    checked = 0
    for n in range(1, 6):
        codes = [C for k in range(1, n + 1) for C in iter_subspaces(F, n, k)]
        supports = [set(C.support()) for C in codes]
        dmin: dict = {}
        for (A, sa), (B, sb) in itertools.product(zip(codes, supports), repeat=2):
            if not sa & sb:
                continue
            bound = pairwise_bound(n, A.k, B.k)
            rep = product_singleton_witness([A, B])
            assert not verify_report([A, B], rep), (A, B)
            assert 1 <= rep.weight <= bound == max(1, n - A.k - B.k + 2)
            P = product_code([A, B])
            if P not in dmin:
                dmin[P] = P.min_distance()
            assert dmin[P] <= bound, (A, B)
            checked += 1
    return f"{checked} ordered pairs, 0 violations"


def _random_tuples():
    res = theorem_suite(1000, ts=(3, 4), qs=(2, 3, 4), nmax=12, seed=2024)
    assert res.ok, res.failures[:3]
    return f"{res.trials} tuples, 0 violations"


def _aq_values():
    F = GF(2)
    checked = 0
    for n in range(1, 8):
        for d in range(1, n + 1):
            values = {}
            for t in (2, 3):
                formula = aq_formula_bound(n, d, t)
                # one dimension above the closed form, so exceeding it would be seen
                row = aq_exact(F, n, d, t, ceiling=formula.value + 1)
                values[t] = row.exact_value
                if d <= t:
                    assert row.exact_value == n // d, (n, d, t, row.exact_value)
                else:
                    assert row.exact_value <= (n - d) // t + 1, (n, d, t, row.exact_value)
                checked += 1
            assert values[3] <= values[2], (n, d, values)
    return f"{checked} values"


def _lemma_suites():
    a = dim_dperp_suite(200, qs=(2, 3, 4), nmax=8, seed=1)
    b = adjunction_suite(500, qs=(2, 3, 4), nmax=8, seed=2)
    assert a.ok, a.failures[:3]
    assert a.skipped == 0
    assert b.ok, b.failures[:3]
    return f"dim/dual-distance {a.trials} trials, adjunction {b.trials} trials"


def _oracle_equivalence():
    rng = SplitMix64(99)
    done = 0
    while done < 100:
        F = GF(rng.choice([2, 3, 4]))
        n = rng.randint(1, 6)
        t = rng.randint(2, 3)
        ks = [rng.randint(1, n) for _ in range(t)]
        if F.q ** sum(ks) > 2**16:
            continue
        Cs = [random_code(F, n, k, rng) for k in ks]
        words = [sorted(codeword_set(F, C.generator.rows, n)) for C in Cs]
        products = {star_all(F, combo) for combo in itertools.product(*words)}
        P = product_code(Cs)
        assert codeword_set(F, P.generator.rows, n) == span_closure(F, products, n), Cs
        done += 1
    return f"{done} instances, 0 mismatches"


def test_criterion_1():
    record(1, "block code cube", 1, _block_code)


def test_criterion_2():
    record(2, "support condition counterexample", 1, _support_condition_example)


def test_criterion_3():
    record(3, "Reed-Solomon tightness over GF(7)", 5, _reed_solomon)


def test_criterion_4():
    record(4, "exhaustive t=2 over GF(2), n <= 5", 120, _exhaustive_pairs)


def test_criterion_5():
    record(5, "random full-support tuples, t in {3,4}", 60, _random_tuples)


def test_criterion_6():
    record(6, "exact a_2^(t)(n,d), n <= 7, t in {2,3}", 600, _aq_values)


def test_criterion_7():
    record(7, "dimension/dual-distance and adjunction suites", 60, _lemma_suites)


def test_criterion_8():
    record(8, "product code vs brute-force span", 60, _oracle_equivalence)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
