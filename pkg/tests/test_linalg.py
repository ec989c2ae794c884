import itertools

import numpy as np
import pytest

from bsymbol import (GF, LinearCode, det, is_nonsingular, is_nsc,
                     is_upper_triangular, kernel_basis, min_b_distance, rank,
                     rref)
from bsymbol.reed_muller import binomial_matrix
from bsymbol.verify import random_vandermonde_nsc


def leibniz_det(field, A):
    """Independent determinant by the permutation-sum formula."""
    n = A.shape[0]
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = field.mul(term, int(A[i, perm[i]]))
        total = field.add(total, term if inversions % 2 == 0 else field.neg(term))
    return total


def test_rank_examples():
    assert rank(GF(2), np.eye(3, dtype=int)) == 3
    assert rank(GF(5), np.zeros((2, 4), dtype=int)) == 0
    # det of [[1,1],[1,-1]] over GF(3) is -2 = 1, nonzero
    A = np.array([[1, 1], [1, 2]])
    assert det(GF(3), A) == 1
    assert rank(GF(3), A) == 2


def test_rref_is_idempotent_and_rank_stable():
    rng = np.random.default_rng(3)
    for q in (2, 3, 4):
        f = GF(2, 2) if q == 4 else GF(q)
        for _ in range(20):
            A = rng.integers(0, f.q, size=(rng.integers(1, 6), rng.integers(1, 7)))
            R, piv = rref(f, A)
            assert rank(f, A) == len(piv) == R.shape[0]
            R2, piv2 = rref(f, R)
            assert np.array_equal(R, R2) and piv == piv2


def test_kernel_of_all_ones_row():
    # kernel of (1,1,...,1) is the code of zero-sum vectors
    for q, n in [(2, 5), (3, 4), (5, 6)]:
        f = GF(q)
        B = kernel_basis(f, np.ones((1, n), dtype=int))
        assert B.shape == (n - 1, n)
        for row in B:
            assert sum(int(v) for v in row) % q == 0


def test_kernel_of_identity_is_empty():
    B = kernel_basis(GF(3), np.eye(4, dtype=int))
    assert B.shape == (0, 4)


def test_kernel_orthogonal_to_split_parity_rows():
    H = np.array([[1, 1, 0, 0], [0, 0, 1, 1]])
    f = GF(2)
    B = kernel_basis(f, H)
    assert B.shape == (2, 4)
    assert not f.matmul(H, B.T).any()


def test_kernel_dimension_plus_rank_is_cols():
    rng = np.random.default_rng(5)
    for _ in range(30):
        f = GF(int(rng.choice([2, 3, 5])))
        A = rng.integers(0, f.q, size=(rng.integers(1, 5), rng.integers(1, 8)))
        B = kernel_basis(f, A)
        assert B.shape[0] + rank(f, A) == A.shape[1]
        if B.shape[0]:
            assert not f.matmul(np.asarray(A) % f.q, B.T).any()
            assert rank(f, B) == B.shape[0]


def test_det_matches_leibniz():
    rng = np.random.default_rng(9)
    for _ in range(25):
        f = GF(int(rng.choice([2, 3, 5])))
        n = int(rng.integers(1, 4))
        A = rng.integers(0, f.q, size=(n, n))
        d = det(f, A)
        assert d == leibniz_det(f, A)
        assert is_nonsingular(f, A) == (d != 0)


def test_is_upper_triangular():
    assert is_upper_triangular(np.array([[1, 2], [0, 3]]))
    assert not is_upper_triangular(np.array([[0, 1], [1, 0]]))
    assert is_upper_triangular(np.array([[5, 0, 2]]))  # single row, vacuous
    for q in (2, 3, 4, 5):
        f = GF(2, 2) if q == 4 else GF(q)
        assert is_upper_triangular(binomial_matrix(f))


def exhaustive_nsc(field, A):
    """Definition-level NSC oracle via independent minor determinants."""
    m, n = A.shape
    for t in range(1, m + 1):
        for cols in itertools.combinations(range(n), t):
            if leibniz_det(field, A[:t][:, list(cols)]) == 0:
                return False
    return True


def test_is_nsc_examples():
    f3 = GF(3)
    assert is_nsc(f3, np.array([[1, 1], [1, 2]]))
    assert not is_nsc(f3, np.array([[1, 0], [1, 2]]))  # zero in row 1
    with pytest.raises(ValueError):
        is_nsc(f3, np.array([[1], [1]]))  # more rows than cols


def test_binomial_matrix_nsc_status_by_exhaustive_minors():
    # settled by the minor oracle, entry pattern notwithstanding
    for q in (2, 3, 4, 5):
        f = GF(2, 2) if q == 4 else GF(q)
        B = binomial_matrix(f)
        assert exhaustive_nsc(f, B)
        assert is_nsc(f, B)


def test_is_nsc_agrees_with_exhaustive_oracle():
    rng = np.random.default_rng(17)
    for _ in range(60):
        f = GF(int(rng.choice([2, 3, 5])))
        m = int(rng.integers(1, 4))
        n = int(rng.integers(m, 5))
        A = rng.integers(0, f.q, size=(m, n))
        assert is_nsc(f, A) == exhaustive_nsc(f, A)


def test_nsc_implies_full_rank_and_nonzero_first_row():
    rng = np.random.default_rng(21)
    found = 0
    while found < 10:
        f = GF(5)
        m = int(rng.integers(1, 4))
        n = int(rng.integers(m, 5))
        A = random_vandermonde_nsc(rng, f, m, n)
        assert is_nsc(f, A)
        assert rank(f, A) == m
        assert (A[0] != 0).all()
        found += 1


def test_nsc_first_rows_span_hamming_distance():
    # the span of the first t rows of an NSC matrix reaches the Singleton bound
    rng = np.random.default_rng(23)
    f = GF(7)
    for _ in range(10):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(m, 6))
        A = random_vandermonde_nsc(rng, f, m, n)
        for t in range(1, m + 1):
            code = LinearCode(f, A[:t])
            assert min_b_distance(code, 1) == n - t + 1
