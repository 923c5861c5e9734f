"""Integer Smith normal form, kernels, and quotient invariants."""

from __future__ import annotations

import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from polygraph.errors import InternalError
from polygraph.homology import (
    identity_matrix,
    kernel_basis,
    kernel_coordinates,
    matmul,
    quotient_invariants,
    smith_normal_form,
)


def columns_after_rank(a, dec):
    """The columns of ``a @ v`` past the pivot block, as vectors."""
    prod = matmul(a, dec.v)
    n = len(dec.v)
    return [[row[j] for row in prod] for j in range(dec.rank, n)]


class TestSmithNormalForm:
    def test_two_by_two_invariant_factors(self):
        dec = smith_normal_form([[2, 4], [6, 8]])
        assert dec.diagonal == [2, 4]
        assert dec.rank == 2

    def test_diagonal_entries_form_divisibility_chain(self):
        dec = smith_normal_form([[6, 10], [15, 0], [0, 21]])
        assert all(d > 0 for d in dec.diagonal)
        for prev, nxt in zip(dec.diagonal, dec.diagonal[1:]):
            assert nxt % prev == 0

    def test_column_matrix_v_is_unimodular(self):
        a = [[2, 4], [6, 8]]
        dec = smith_normal_form(a)
        n = len(dec.v)
        assert matmul(dec.v, dec.vinv) == identity_matrix(n)
        assert matmul(dec.vinv, dec.v) == identity_matrix(n)

    def test_columns_past_rank_are_killed(self):
        a = [[1, -1, 0], [0, 1, -1]]
        dec = smith_normal_form(a)
        assert dec.rank == 2
        for col in columns_after_rank(a, dec):
            assert all(entry == 0 for entry in col)

    def test_zero_matrix_has_rank_zero(self):
        dec = smith_normal_form([[0, 0], [0, 0]])
        assert dec.diagonal == []
        assert dec.rank == 0
        assert dec.v == identity_matrix(2)

    def test_empty_and_column_free_matrices(self):
        assert smith_normal_form([]).rank == 0
        dec = smith_normal_form([[], []])
        assert dec.rank == 0
        assert dec.diagonal == []

    def test_ragged_input_is_rejected(self):
        with pytest.raises(ValueError, match="ragged"):
            smith_normal_form([[1, 2], [3]])

    def test_negative_entries_yield_positive_factors(self):
        dec = smith_normal_form([[-3, 0], [0, -5]])
        assert dec.diagonal == [1, 15]


class TestKernel:
    def test_kernel_of_difference_chain_is_the_diagonal(self):
        a = [[1, -1, 0], [0, 1, -1]]
        dec, basis = kernel_basis(a)
        assert len(basis) == 1
        (vec,) = basis
        # The kernel of this matrix is spanned by (1, 1, 1) up to sign.
        assert vec in ([1, 1, 1], [-1, -1, -1])

    def test_basis_vectors_really_lie_in_the_kernel(self):
        a = [[2, 4, 6], [1, 2, 3]]
        dec, basis = kernel_basis(a)
        assert len(basis) == 2
        for vec in basis:
            image = matmul(a, [[entry] for entry in vec])
            assert all(row == [0] for row in image)

    def test_coordinates_reproduce_a_combination(self):
        a = [[1, -1, 0], [0, 1, -1]]
        dec, basis = kernel_basis(a)
        (vec,) = basis
        tripled = [3 * entry for entry in vec]
        coords = kernel_coordinates(dec, tripled)
        assert coords == [3]

    def test_coordinates_reject_vectors_outside_the_kernel(self):
        a = [[1, -1, 0], [0, 1, -1]]
        dec, _ = kernel_basis(a)
        with pytest.raises(InternalError, match="not in the kernel"):
            kernel_coordinates(dec, [1, 0, 0])

    def test_coordinates_reject_wrong_length(self):
        dec, _ = kernel_basis([[1, -1, 0], [0, 1, -1]])
        with pytest.raises(ValueError, match="length"):
            kernel_coordinates(dec, [0, 0])

    def test_full_rank_matrix_has_empty_kernel(self):
        dec, basis = kernel_basis([[2, 0], [0, 3]])
        assert basis == []
        assert kernel_coordinates(dec, [0, 0]) == []


class TestQuotientInvariants:
    def test_cyclic_quotient(self):
        assert quotient_invariants(1, [[5]]) == (0, [5])

    def test_free_part_survives(self):
        # Z^2 modulo the single column (2, 0): one free rank, one Z/2.
        assert quotient_invariants(2, [[2], [0]]) == (1, [2])

    def test_torsion_chain(self):
        relations = [[2, 0], [0, 4]]
        assert quotient_invariants(2, relations) == (0, [2, 4])

    def test_unit_factors_are_dropped(self):
        assert quotient_invariants(2, [[1], [0]]) == (1, [])

    def test_no_relations_leaves_the_free_group(self):
        assert quotient_invariants(3, []) == (3, [])
        assert quotient_invariants(3, [[], [], []]) == (3, [])

    def test_rank_zero_group_is_trivial(self):
        assert quotient_invariants(0, []) == (0, [])

    def test_row_count_must_match_free_rank(self):
        with pytest.raises(ValueError, match="free_rank"):
            quotient_invariants(2, [[1], [0], [0]])


class TestAgainstSympy:
    def test_random_matrices_agree_with_sympy(self):
        rng = random.Random(71)
        trials = 0
        for _ in range(200):
            m = rng.randrange(0, 5)
            n = rng.randrange(0, 5)
            a = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(m)]
            dec = smith_normal_form(a)

            # Independent reference: sympy's Smith normal form over ZZ.
            if m and n:
                ref = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
                ref_diag = [
                    abs(ref[i, i]) for i in range(min(m, n)) if ref[i, i] != 0
                ]
            else:
                ref_diag = []
            assert dec.diagonal == ref_diag

            # Audit the column operations directly.
            size = len(dec.v)
            assert matmul(dec.v, dec.vinv) == identity_matrix(size)
            for col in columns_after_rank(a, dec):
                assert all(entry == 0 for entry in col)
            trials += 1
        assert trials == 200
