import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import matrices
from starcodes.errors import DependentSeed, PreconditionViolated
from starcodes.gf import GF
from starcodes.matrix import (
    GFMatrix,
    columns_independent,
    dependency_vector,
    exchange_into_basis,
    extend_to_maximal_independent,
    kernel_basis,
    rank,
    rref,
    solve_left,
)


def M2(rows):
    return GFMatrix(GF(2), rows)


def brute_independent(M, A):
    F = M.field
    cols = [M.column(j) for j in A]
    for coeffs in itertools.product(range(F.q), repeat=len(A)):
        if not any(coeffs):
            continue
        acc = [0] * M.nrows
        for c, col in zip(coeffs, cols):
            acc = [F.add(a, F.mul(c, x)) for a, x in zip(acc, col)]
        if not any(acc):
            return False
    return True


class TestRref:
    def test_duplicate_rows(self):
        R, piv, rk = rref(M2([[1, 1], [1, 1]]))
        assert R.tolist() == [[1, 1], [0, 0]] and piv == (0,) and rk == 1

    def test_identity(self):
        I3 = GFMatrix.identity(GF(2), 3)
        assert rref(I3) == (I3, (0, 1, 2), 3)

    def test_hand_example(self):
        R, piv, rk = rref(M2([[0, 1, 1], [1, 0, 1]]))
        assert piv == (0, 1) and rk == 2
        assert R.tolist() == [[1, 0, 1], [0, 1, 1]]

    def test_empty(self):
        assert rank(GFMatrix(GF(3), [], 4)) == 0

    @given(matrices())
    def test_idempotent(self, M):
        R, piv, _ = rref(M)
        assert rref(R) == (R, piv, len(piv))

    @given(matrices(max_rows=8, max_cols=8))
    def test_rank_of_transpose(self, M):
        assert rank(M) == rank(M.transpose())

    @given(matrices(qs=(2, 3), max_rows=4, max_cols=4))
    def test_rank_matches_span_size(self, M):
        from oracles import rank_by_counting
        assert rank(M) == rank_by_counting(M.field, M.rows, M.ncols)


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert len(kernel_basis(GFMatrix.identity(GF(5), 4))) == 0

    def test_zero_row(self):
        K = kernel_basis(M2([[0, 0, 0]]))
        assert len(K) == 3

    def test_two_equations(self):
        assert kernel_basis(M2([[1, 1, 0], [0, 1, 1]])).tolist() == [[1, 1, 1]]

    @given(matrices())
    def test_kernel_rows_annihilated(self, M):
        K = kernel_basis(M)
        for v in K:
            assert not any(M.mul_vec(v))
        assert rank(K) + rank(M) == M.ncols


class TestIndependence:
    def test_empty_set(self):
        assert columns_independent(M2([[1, 0]]), [])

    def test_equal_columns(self):
        assert not columns_independent(M2([[1, 1]]), [0, 1])

    def test_column_sum(self):
        M = M2([[1, 0, 1], [0, 1, 1]])
        assert columns_independent(M, [0, 1])
        assert not columns_independent(M, [0, 1, 2])

    @given(matrices(qs=(2, 3), max_rows=4, max_cols=5), st.data())
    def test_against_brute_force(self, M, data):
        A = data.draw(st.sets(st.integers(0, M.ncols - 1)))
        assert columns_independent(M, A) == brute_independent(M, sorted(A))


class TestExtend:
    def test_identity(self):
        assert extend_to_maximal_independent(GFMatrix.identity(GF(2), 2)) == (0, 1)

    def test_greedy_scan(self):
        M = M2([[1, 1, 0], [0, 0, 1]])
        assert extend_to_maximal_independent(M) == (0, 2)
        assert extend_to_maximal_independent(M, [1]) == (1, 2)

    def test_dependent_seed(self):
        with pytest.raises(DependentSeed):
            extend_to_maximal_independent(M2([[1, 1, 0], [0, 0, 1]]), [0, 1])

    @given(matrices())
    def test_result_is_a_column_basis(self, M):
        B = extend_to_maximal_independent(M)
        assert len(B) == rank(M) and columns_independent(M, B)
        for j in set(range(M.ncols)) - set(B):
            assert not columns_independent(M, set(B) | {j})


class TestExchange:
    def test_extra_column(self):
        M = M2([[1, 0, 1], [0, 1, 1]])
        assert exchange_into_basis(M, [0, 1], [0], 2) == (0, (1, 2))

    def test_rank_one(self):
        assert exchange_into_basis(M2([[1, 1, 1]]), [0], [0], 1) == (0, (1,))

    def test_second_index(self):
        M = M2([[1, 0, 1], [0, 1, 1]])
        assert exchange_into_basis(M, [0, 1], [1], 2) == (1, (0, 2))

    def test_precondition(self):
        M = M2([[1, 0, 0], [0, 1, 0]])
        with pytest.raises(PreconditionViolated):
            exchange_into_basis(M, [0, 1], [0], 2)  # zero column: (B\I)+{j1} dependent
        with pytest.raises(PreconditionViolated):
            exchange_into_basis(M, [0], [0], 1)  # B not maximal

    @given(matrices(), st.data())
    def test_exchange_preserves_basis(self, M, data):
        B = extend_to_maximal_independent(M)
        outside = [j for j in range(M.ncols) if j not in B and any(M.column(j))]
        if not outside:
            return
        j1 = data.draw(st.sampled_from(outside))
        # I must meet the fundamental circuit of j1; taking all of it suffices
        circuit = set(dependency_vector(M, B, j1).support) - {j1}
        I = circuit | data.draw(st.sets(st.sampled_from(B)))
        j, B2 = exchange_into_basis(M, B, I, j1)
        assert j in I and len(B2) == len(B) and columns_independent(M, B2)
        assert set(B2) == (set(B) - {j}) | {j1}


class TestDependencyVector:
    def test_repetition_dual(self):
        assert dependency_vector(M2([[1, 1]]), [0], 1) == (1, 1)

    def test_kernel_vector(self):
        assert dependency_vector(M2([[1, 0, 1], [0, 1, 1]]), [0, 1], 2) == (1, 1, 1)

    def test_gf3(self):
        # x + 2y = 0 with y = 1 gives x = 1
        assert dependency_vector(GFMatrix(GF(3), [[1, 2]]), [0], 1) == (1, 1)

    def test_independent_extension_rejected(self):
        with pytest.raises(PreconditionViolated):
            dependency_vector(M2([[1, 0], [0, 1]]), [0], 1)

    @given(matrices(), st.data())
    def test_post_conditions(self, H, data):
        A = extend_to_maximal_independent(H)
        outside = sorted(set(range(H.ncols)) - set(A))
        if not outside:
            return
        j = data.draw(st.sampled_from(outside))
        v = dependency_vector(H, A, j)
        assert not any(H.mul_vec(v))
        assert v[j] == 1
        assert set(v.support) <= set(A) | {j}


@given(matrices(), st.data())
def test_solve_left(M, data):
    F = M.field
    x = data.draw(st.lists(st.integers(0, F.q - 1), min_size=M.nrows, max_size=M.nrows))
    v = M.left_mul(x)
    y = solve_left(M, v)
    assert y is not None and M.left_mul(y) == v


def test_solve_left_outside_row_space():
    assert solve_left(M2([[1, 1, 0]]), [1, 0, 0]) is None
