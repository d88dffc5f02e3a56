import json

import pytest
from hypothesis import given, strategies as st

from conftest import codes
from oracles import best_product_weight
from starcodes import (
    GF,
    Branch,
    LinearCode,
    high_dim_witness,
    product_code,
    product_singleton_witness,
    reed_solomon,
    unconditional_witness,
    verify_report,
)
from starcodes.errors import PreconditionViolated, SupportConditionViolated, ZeroProduct
from starcodes.rng import SplitMix64, random_code


class TestExamples:
    def test_block_code_cube(self, block_code):
        Cs = [block_code] * 3
        rep = product_singleton_witness(Cs)
        assert rep.branch is Branch.HIGH_DIM
        assert rep.bound == 2
        assert 1 <= rep.weight <= 2
        assert verify_report(Cs, rep) == []

    def test_full_plane_pair(self, gf2):
        Cs = [LinearCode.full(gf2, 2)] * 2
        rep = product_singleton_witness(Cs)
        assert rep.weight == 1 and rep.bound == 1

    def test_random_binary_triple_matches_brute_force(self):
        F = GF(2)
        rng = SplitMix64(7)
        for _ in range(10):
            Cs = [random_code(F, 5, 2, rng, full_support=True) for _ in range(3)]
            rep = product_singleton_witness(Cs)
            assert verify_report(Cs, rep) == []
            best = best_product_weight(F, Cs)
            assert best <= rep.weight <= rep.bound == max(2, 5 + 3 - 6)

    @pytest.mark.parametrize("k1,k2", [(1, 1), (2, 3), (3, 3), (1, 6), (4, 3)])
    def test_reed_solomon_tight(self, k1, k2):
        F = GF(7)
        Cs = [reed_solomon(F, 7, k1), reed_solomon(F, 7, k2)]
        rep = product_singleton_witness(Cs)
        assert verify_report(Cs, rep) == []
        assert rep.weight == rep.bound == product_code(Cs).min_distance() == 9 - k1 - k2

    @given(codes(qs=(2, 3, 4), max_n=6, max_k=4))
    def test_single_code_is_classical_singleton(self, C):
        if C.k == 0:
            return
        rep = product_singleton_witness([C])
        assert verify_report([C], rep) == []
        assert rep.bound == max(0, C.n + 1 - C.k) == C.n - C.k + 1

    def test_uneven_triple_refused(self, uneven_triple):
        with pytest.raises(SupportConditionViolated):
            product_singleton_witness(uneven_triple)

    def test_uneven_triple_unconditional(self, uneven_triple):
        rep = unconditional_witness(uneven_triple)
        assert rep.support == (0, 1, 2)
        assert rep.bound == 3
        assert 1 <= rep.weight <= 3
        assert rep.branch is Branch.PROJECTED_UNCONDITIONAL
        assert verify_report(uneven_triple, rep) == []

    def test_disjoint_supports(self, gf2):
        A = LinearCode.from_rows(gf2, [[1, 1, 0, 0]])
        B = LinearCode.from_rows(gf2, [[0, 0, 1, 1]])
        with pytest.raises(ZeroProduct):
            product_singleton_witness([A, B])
        with pytest.raises(ZeroProduct):
            unconditional_witness([A, B])


class TestBranches:
    def test_kernel_shortcut(self):
        # projection onto the first sum(k)-1 coordinates is not injective on C
        F = GF(2)
        C = LinearCode.from_rows(F, [[1, 1, 1, 0], [0, 0, 0, 1]])
        D = LinearCode.from_rows(F, [[1, 1, 1, 1]])
        rep = product_singleton_witness([C, D])
        assert rep.branch is Branch.KERNEL_SHORTCUT
        assert verify_report([C, D], rep) == []

    def test_punctured(self):
        F = GF(7)
        Cs = [reed_solomon(F, 7, 2), reed_solomon(F, 7, 3)]
        assert product_singleton_witness(Cs).branch is Branch.PUNCTURED_HIGH_DIM


class TestHighDim:
    def test_preconditions(self, gf2, block_code):
        with pytest.raises(PreconditionViolated):
            high_dim_witness([block_code])
        with pytest.raises(PreconditionViolated):
            high_dim_witness([block_code, block_code])  # 2 + 2 = n
        half = LinearCode.from_rows(gf2, [[1, 1, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]])
        with pytest.raises(PreconditionViolated):
            high_dim_witness([half, LinearCode.full(gf2, 4)])

    def test_full_spaces(self):
        F = GF(3)
        Cs = [LinearCode.full(F, 4)] * 3
        rep = high_dim_witness(Cs)
        assert verify_report(Cs, rep) == []
        assert rep.weight <= 2

    def test_trace_shape(self, block_code):
        rep = high_dim_witness([block_code] * 3)
        steps = [e["step"] for e in rep.trace]
        assert steps[0] == "bases" and "stop" in steps and steps[-1] == "j_sequence"


class TestRandomized:
    @given(st.data())
    def test_pairs_verify(self, data):
        F = GF(data.draw(st.sampled_from([2, 3, 4, 5])))
        n = data.draw(st.integers(1, 7))
        Cs = [data.draw(codes(field=F, n=n, max_k=4)) for _ in range(2)]
        if any(C.k == 0 for C in Cs) or not set(Cs[0].support()) & set(Cs[1].support()):
            return
        rep = product_singleton_witness(Cs)
        assert verify_report(Cs, rep) == []

    @given(st.data())
    def test_tuples_verify(self, data):
        F = GF(data.draw(st.sampled_from([2, 3, 4])))
        n = data.draw(st.integers(1, 8))
        t = data.draw(st.integers(3, 5))
        rng = SplitMix64(data.draw(st.integers(0, 2**32)))
        Cs = [random_code(F, n, rng.randint(1, n), rng, full_support=True) for _ in range(t)]
        rep = product_singleton_witness(Cs)
        assert verify_report(Cs, rep) == []

    @given(st.data())
    def test_unconditional_verifies(self, data):
        F = GF(data.draw(st.sampled_from([2, 3])))
        n = data.draw(st.integers(1, 6))
        t = data.draw(st.integers(2, 4))
        Cs = [data.draw(codes(field=F, n=n, max_k=3)) for _ in range(t)]
        common = set.intersection(*(set(C.support()) for C in Cs))
        if not common:
            with pytest.raises(ZeroProduct):
                unconditional_witness(Cs)
            return
        rep = unconditional_witness(Cs)
        assert verify_report(Cs, rep) == []
        assert rep.support == tuple(sorted(common))


class TestReport:
    def test_json_deterministic(self, block_code):
        a = product_singleton_witness([block_code] * 3).to_json(sort_keys=True)
        b = product_singleton_witness([block_code] * 3).to_json(sort_keys=True)
        assert a == b
        doc = json.loads(a)
        assert doc["branch"] == "HighDim" and doc["t"] == 3 and len(doc["codewords"]) == 3

    def test_unconditional_json_has_projection(self, uneven_triple):
        doc = unconditional_witness(uneven_triple).to_dict()
        assert len(doc["projected_product"]) == 3

    def test_verify_catches_tampering(self, block_code):
        Cs = [block_code] * 3
        rep = product_singleton_witness(Cs)
        rep.weight = 0
        assert verify_report(Cs, rep)
        rep = product_singleton_witness(Cs)
        rep.codewords[0] = type(rep.codewords[0])(block_code.field, [1, 0, 0, 0])
        assert any("not in its code" in p for p in verify_report(Cs, rep))
