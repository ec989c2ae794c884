"""Dense exact linear algebra over GF(q).

Matrices are 2-d numpy integer arrays with entries in [0, q); the Field
is passed alongside.  Everything is exact elimination in the field, no
floating point anywhere.
"""

from __future__ import annotations

import itertools

import numpy as np

from .field import DTYPE, Field


def _as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=DTYPE)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {M.shape}")
    return M


def rref(field: Field, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns (R, pivots) where R holds only the nonzero rows, so
    len(pivots) = R.shape[0] = rank(A).
    """
    R = _as_matrix(A).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p0 = r + int(nz[0])
        if p0 != r:
            R[[r, p0]] = R[[p0, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r] = field.mul_arr(R[r], field.inv(piv))
        colvals = R[:, c].copy()
        colvals[r] = 0
        other = np.nonzero(colvals)[0]
        if other.size:
            R[other] = field.sub_arr(R[other], field.mul_arr(colvals[other, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(field: Field, A) -> int:
    return len(rref(field, A)[1])


def kernel_basis(field: Field, A) -> np.ndarray:
    """Basis of {x : A x^T = 0}, one row per basis vector.

    Shape is (cols - rank(A), cols); empty (0, cols) for full column rank.
    """
    M = _as_matrix(A)
    cols = M.shape[1]
    R, pivots = rref(field, M)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    B = np.zeros((len(free), cols), dtype=DTYPE)
    for idx, f in enumerate(free):
        B[idx, f] = 1
        for i, pc in enumerate(pivots):
            B[idx, pc] = field.neg(int(R[i, f]))
    return B


def det(field: Field, A) -> int:
    M = _as_matrix(A).copy()
    n, m = M.shape
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return 0
        p0 = c + int(nz[0])
        if p0 != c:
            M[[c, p0]] = M[[p0, c]]
            d = field.neg(d)
        piv = int(M[c, c])
        d = field.mul(d, piv)
        below = np.nonzero(M[c + 1:, c])[0]
        if below.size:
            rowsel = below + c + 1
            factors = field.mul_arr(M[rowsel, c], field.inv(piv))
            M[rowsel] = field.sub_arr(M[rowsel], field.mul_arr(factors[:, None], M[c][None, :]))
    return d


def is_nonsingular(field: Field, A) -> bool:
    M = _as_matrix(A)
    return M.shape[0] == M.shape[1] and rank(field, M) == M.shape[0]


def is_upper_triangular(A) -> bool:
    """True iff every entry strictly below the main diagonal is zero."""
    M = _as_matrix(A)
    rows, cols = M.shape
    for i in range(1, rows):
        if M[i, :min(i, cols)].any():
            return False
    return True


def is_nsc(field: Field, A) -> bool:
    """Nonsingular-by-column test, by exhaustive minor enumeration.

    For every t and every choice of t columns, the t x t submatrix of
    the first t rows must be nonsingular.  Cost grows as sum_t C(N, t)
    eliminations; intended for the small mixing matrices this library
    works with (M, N <= 12 or so).
    """
    M = _as_matrix(A)
    m, n = M.shape
    if m > n:
        raise ValueError(f"NSC requires rows <= cols, got {m}x{n}")
    if (M[0] == 0).any():
        return False
    for t in range(2, m + 1):
        top = M[:t]
        for cols in itertools.combinations(range(n), t):
            if rank(field, top[:, cols]) < t:
                return False
    return True
