"""Generalized Reed-Muller codes and their exact b-symbol distances.

RM_q(r, m) is the length-q^m code of evaluations of m-variate polynomials
of total degree <= r at all points of GF(q)^m, the points taken in
lexicographic order under the canonical element order (so P_1 is the
origin).  Degree r >= m(q-1) gives the full space, r < 0 the zero code.

Two independent constructions are provided: direct evaluation of the
reduced monomial basis (every exponent < q, since X^q = X on GF(q)), and
the length-q recursion that mixes the codes RM_q(r, m-1), ...,
RM_q(r-q+1, m-1) with the q x q upper triangular matrix of field
binomial coefficients.  The two always produce the same row space.

Writing r = t(q-1) + s with 0 <= s < q-1, the minimum Hamming distance
is (q-s) q^{m-t-1} and the minimum b-symbol distance is

    d_b(RM_q(r, m)) = min{(q-s) q^{m-t-1} + b - 1, q^m}.

The formula rests on a minimum-weight codeword with cyclically
consecutive support avoiding position 1; ``rm_successive_witness``
constructs that codeword explicitly.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import linalg
from .codes import DTYPE, EnumerationCapError, LinearCode
from .field import Field

POINT_CAP = 1 << 20

_RECURSION_MEMO: dict = {}


def point_order(field: Field, m: int) -> np.ndarray:
    """All q^m points of GF(q)^m in lexicographic order, one per row.

    The first coordinate is the most significant, so points sharing the
    value of x_1 form q consecutive blocks of size q^{m-1}.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    q = field.q
    total = q ** m
    if total > POINT_CAP:
        raise EnumerationCapError(f"q^m = {total} exceeds point cap {POINT_CAP}")
    idx = np.arange(total, dtype=np.int64)
    pts = np.zeros((total, m), dtype=DTYPE)
    for j in range(m):
        pts[:, j] = (idx // q ** (m - 1 - j)) % q
    return pts


def reduced_monomials(q: int, r: int, m: int) -> list[tuple[int, ...]]:
    """Exponent tuples with every entry < q and total degree <= r, in lex order."""
    if r < 0:
        return []
    cap = min(r, m * (q - 1))
    return [a for a in itertools.product(range(q), repeat=m) if sum(a) <= cap]


def rm_dimension(q: int, r: int, m: int) -> int:
    """dim RM_q(r, m), counted over the reduced monomial basis."""
    if r < 0:
        return 0
    if r >= m * (q - 1):
        return q ** m
    # coefficient counting: product of m truncated geometric polynomials
    counts = [1]
    for _ in range(m):
        new = [0] * (len(counts) + q - 1)
        for d, c in enumerate(counts):
            for a in range(q):
                new[d + a] += c
        counts = new
    return sum(counts[: r + 1])


def rm_by_evaluation(field: Field, r: int, m: int) -> LinearCode:
    """RM_q(r, m) with generator rows the evaluations of reduced monomials."""
    if m < 0:
        raise ValueError("m must be >= 0")
    q = field.q
    n = q ** m
    if n > POINT_CAP:
        raise EnumerationCapError(f"q^m = {n} exceeds point cap {POINT_CAP}")
    monos = reduced_monomials(q, r, m)
    if not monos:
        return LinearCode(field, np.zeros((0, n), dtype=DTYPE))
    pts = point_order(field, m)
    pow_tab = np.zeros((q, q), dtype=DTYPE)
    pow_tab[:, 0] = 1
    for a in range(q):
        for i in range(1, q):
            pow_tab[a, i] = field.mul(int(pow_tab[a, i - 1]), a)
    rows = np.zeros((len(monos), n), dtype=DTYPE)
    for ridx, expo in enumerate(monos):
        row = np.ones(n, dtype=DTYPE)
        for j, a in enumerate(expo):
            if a:
                row = field.mul_arr(row, pow_tab[pts[:, j], a])
        rows[ridx] = row
    return LinearCode(field, rows)


def binomial_matrix(field: Field) -> np.ndarray:
    """q x q matrix of field binomial coefficients over the canonical order.

    Entry (i, j), 1-based, is the ratio of falling factorials
    prod_{u<i}(alpha_j - alpha_u) / prod_{u<i}(alpha_i - alpha_u), with
    first row all ones.  The matrix is upper triangular with unit
    diagonal and drives the length-q recursion.
    """
    q = field.q
    alphas = list(field.elements_in_order())
    B = np.zeros((q, q), dtype=DTYPE)
    B[0] = 1
    for i in range(2, q + 1):
        denom = 1
        for u in range(i - 1):
            denom = field.mul(denom, field.sub(alphas[i - 1], alphas[u]))
        dinv = field.inv(denom)
        for j in range(1, q + 1):
            num = 1
            for u in range(i - 1):
                num = field.mul(num, field.sub(alphas[j - 1], alphas[u]))
            B[i - 1, j - 1] = field.mul(num, dinv)
    return B


def rm_by_recursion(field: Field, r: int, m: int) -> LinearCode:
    """RM_q(r, m) through the matrix product recursion over GF(q)^1 blocks."""
    if m < 0:
        raise ValueError("m must be >= 0")
    key = (field.p, field.e, r, m)
    cached = _RECURSION_MEMO.get(key)
    if cached is not None:
        return cached
    q = field.q
    if q ** m > POINT_CAP:
        raise EnumerationCapError(f"q^m = {q ** m} exceeds point cap {POINT_CAP}")
    if r < 0:
        code = LinearCode(field, np.zeros((0, q ** m), dtype=DTYPE))
    elif m == 0:
        code = LinearCode(field, np.ones((1, 1), dtype=DTYPE))
    else:
        from .matrix_product import MatrixProductSpec, product_code
        mixer = binomial_matrix(field)
        parts = []
        kept_rows = []
        for i in range(q):
            sub = rm_by_recursion(field, r - i, m - 1)
            if sub.k > 0:
                parts.append(sub)
                kept_rows.append(i)
        # degrees r-i < 0 contribute nothing; drop those rows of the mixer
        code = product_code(MatrixProductSpec(tuple(parts), mixer[kept_rows]))
    _RECURSION_MEMO[key] = code
    return code


def rm_d1(field: Field, r: int, m: int) -> int:
    """Minimum Hamming distance (q-s) q^{m-t-1}; 1 for the full space."""
    if r < 0:
        raise ValueError("the zero code has no minimum distance")
    q = field.q
    if r >= m * (q - 1):
        return 1
    t, s = divmod(r, q - 1)
    return (q - s) * q ** (m - t - 1)


def rm_db(field: Field, r: int, m: int, b: int) -> int:
    """Closed-form d_b(RM_q(r, m)) = min{d_1 + b - 1, q^m}."""
    n = field.q ** m
    if not 1 <= b <= n:
        raise ValueError(f"b must be in 1..{n}, got {b}")
    return min(rm_d1(field, r, m) + b - 1, n)


def _univariate_low_zero_coeffs(field: Field, r: int) -> list[int]:
    """Coefficients a_1..a_r of a nonzero f = sum a_i X^i vanishing on alpha_1..alpha_r.

    alpha_1 = 0 kills the constant term for free; the remaining r - 1
    conditions are linear in the r coefficients, so a nonzero solution
    always exists.  Needs 1 <= r < q - 1.
    """
    alphas = list(field.elements_in_order())
    if r == 1:
        return [1]
    V = np.zeros((r - 1, r), dtype=DTYPE)
    for jj in range(r - 1):          # condition at alpha_{jj+2}
        for ii in range(r):          # coefficient of X^{ii+1}
            V[jj, ii] = field.pow(alphas[jj + 1], ii + 1)
    basis = linalg.kernel_basis(field, V)
    return [int(v) for v in basis[0]]


def rm_successive_witness(field: Field, r: int, m: int) -> np.ndarray:
    """Minimum-Hamming-weight codeword with cyclically consecutive support.

    The support avoids position 1 unless it is all of 1..q^m, so every
    window inflation caps out and w_b of the witness meets the closed
    form for every b.
    """
    if r < 0:
        raise ValueError("the zero code has no codewords to witness")
    q = field.q
    n = q ** m
    if n > POINT_CAP:
        raise EnumerationCapError(f"q^m = {n} exceeds point cap {POINT_CAP}")
    if r >= m * (q - 1):
        w = np.zeros(n, dtype=DTYPE)
        w[n - 1] = 1
        return w
    if r == 0:
        return np.ones(n, dtype=DTYPE)
    if r < q - 1:
        coeffs = _univariate_low_zero_coeffs(field, r)
        alphas = list(field.elements_in_order())
        y = [0] * q
        for j in range(q):
            acc = 0
            for i, a in enumerate(coeffs, start=1):
                acc = field.add(acc, field.mul(a, field.pow(alphas[j], i)))
            y[j] = acc
        if any(y[:r]) or not all(y[r:]):
            raise AssertionError("witness coefficient solve produced a wrong zero pattern")
        return np.repeat(np.array(y, dtype=DTYPE), q ** (m - 1))
    # r >= q-1 and below the full-space range, so m >= 2: the recursion
    # embeds a witness of RM_q(r-q+1, m-1) into the last block.
    sub = rm_successive_witness(field, r - q + 1, m - 1)
    return np.concatenate([np.zeros((q - 1) * q ** (m - 1), dtype=DTYPE), sub])


def rm_is_b_mds(field: Field, r: int, m: int, b: int) -> tuple[bool, str]:
    """Whether RM_q(r, m) attains the b-symbol Singleton bound, with the reason.

    True exactly when b >= q^m - d_1 + 1 (the window saturates the
    length) or the code already attains the Hamming Singleton bound.
    """
    if r < 0:
        raise ValueError("the zero code has no MDS status")
    n = field.q ** m
    if not 1 <= b <= n:
        raise ValueError(f"b must be in 1..{n}, got {b}")
    d1 = rm_d1(field, r, m)
    k = rm_dimension(field.q, r, m)
    if d1 == n - k + 1:
        return True, "1-symbol MDS"
    if b >= n - d1 + 1:
        return True, "b >= n - d1 + 1"
    return False, "below both thresholds"
