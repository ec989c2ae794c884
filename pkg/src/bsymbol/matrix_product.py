"""Matrix product codes [C_1, ..., C_M] . A and their b-symbol distance bounds.

A codeword is the concatenation of N blocks of length n, block j being
sum_l a_{l,j} c_l for constituent codewords c_l.  Reshaping a codeword
into the n x N matrix whose columns are the blocks (``block_matrix``)
turns encoding into a plain matrix product: the block matrix equals
(c_1^T | ... | c_M^T) . A.

Bounds implemented here, each taking the window parameter b <= n:

  lower_bound_first_rows:  d_b(C) >= min_i t_i d_b(C_i), t_i the minimum
      Hamming distance of the span of the first i rows of A.
  lower_bound_last_rows:   d_b(C) >= min_i s_{M-i+1} d_b(C_i), s_j from
      the span of the last j rows.
  lower_bound_nsc:         min_i (N-i+1) d_b(C_i) for nonsingular-by-column A.
  upper_bound_triangular_nsc: for upper triangular NSC A,
      d_b(C) <= min{N d_b(C_1), (N-i+1) d_b(C_i) + b - 1 (i >= 2)},
      together with two equality certificates: the bound is exact when
      the NSC lower bound is attained by the first constituent, or when
      some minimizing constituent has a minimum-b-weight codeword with a
      hole of size >= b-1 touching position 1 or n.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .codes import (DTYPE, EnumerationCapError, LinearCode, _check_b,
                    find_codeword_with_end_hole, min_b_distance)


@dataclass(frozen=True)
class MatrixProductSpec:
    """Constituent codes plus the M x N mixing matrix of rank M."""

    codes: tuple[LinearCode, ...]
    mixer: np.ndarray

    def __post_init__(self):
        codes = tuple(self.codes)
        A = np.asarray(self.mixer, dtype=DTYPE)
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "mixer", A)
        if len(codes) == 0:
            raise ValueError("at least one constituent code is required")
        f = codes[0].field
        n = codes[0].n
        for c in codes:
            if c.field != f:
                raise ValueError("constituent codes must share a field")
            if c.n != n:
                raise ValueError("constituent codes must share a length")
            if c.k == 0:
                raise ValueError("constituent codes must have dimension >= 1")
        if A.ndim != 2 or A.shape[0] != len(codes):
            raise ValueError(f"mixing matrix must have {len(codes)} rows")
        if A.shape[0] > A.shape[1]:
            raise ValueError("mixing matrix must have rows <= cols")
        if A.size and ((A < 0) | (A >= f.q)).any():
            raise ValueError(f"mixing matrix entries must lie in [0, {f.q})")
        if linalg.rank(f, A) < A.shape[0]:
            raise ValueError("mixing matrix must have full row rank")

    @property
    def field(self):
        return self.codes[0].field

    @property
    def n(self) -> int:
        return self.codes[0].n

    @property
    def M(self) -> int:
        return self.mixer.shape[0]

    @property
    def N(self) -> int:
        return self.mixer.shape[1]


def product_code(spec: MatrixProductSpec) -> LinearCode:
    """The [nN, sum k_l] code with block generator (a_{l,j} G_l)_{l,j}."""
    f = spec.field
    blocks = []
    for l, c in enumerate(spec.codes):
        row = np.concatenate(
            [f.mul_arr(c.generator, int(spec.mixer[l, j])) for j in range(spec.N)], axis=1)
        blocks.append(row)
    return LinearCode(f, np.vstack(blocks))


def encode(spec: MatrixProductSpec, words) -> np.ndarray:
    """Codeword [sum_l a_{l,1} c_l, ..., sum_l a_{l,N} c_l] for c_l in C_l.

    Membership of every word in its constituent is checked through the
    parity check matrix.
    """
    if len(words) != spec.M:
        raise ValueError(f"expected {spec.M} constituent words")
    f = spec.field
    rows = []
    for l, w in enumerate(words):
        v = np.asarray(w, dtype=DTYPE)
        if v.shape != (spec.n,):
            raise ValueError(f"word {l + 1} must have length {spec.n}")
        if not spec.codes[l].contains(v):
            raise ValueError(f"word {l + 1} is not a codeword of constituent {l + 1}")
        rows.append(v)
    C = np.stack(rows, axis=1)                      # n x M, column l = c_l
    return f.matmul(C, spec.mixer).T.reshape(-1)    # blocks are the columns


def block_matrix(c, n: int, N: int) -> np.ndarray:
    """Reshape a length-nN codeword into the n x N matrix of its blocks."""
    v = np.asarray(c, dtype=DTYPE)
    if v.shape != (n * N,):
        raise ValueError(f"expected a vector of length {n * N}, got {v.shape}")
    return v.reshape(N, n).T.copy()


def _span_d1(field, rows, cap) -> int:
    return min_b_distance(LinearCode(field, rows), 1, cap)


def lower_bound_first_rows(spec: MatrixProductSpec, b: int, cap: int | None = None) -> int:
    _check_b(b, spec.n)
    f, A = spec.field, spec.mixer
    return min(_span_d1(f, A[:i], cap) * min_b_distance(spec.codes[i - 1], b, cap)
               for i in range(1, spec.M + 1))


def lower_bound_last_rows(spec: MatrixProductSpec, b: int, cap: int | None = None) -> int:
    _check_b(b, spec.n)
    f, A, M = spec.field, spec.mixer, spec.M
    s = {j: _span_d1(f, A[M - j:], cap) for j in range(1, M + 1)}
    return min(s[M - i + 1] * min_b_distance(spec.codes[i - 1], b, cap)
               for i in range(1, M + 1))


def lower_bound_nsc(spec: MatrixProductSpec, b: int, cap: int | None = None) -> int:
    _check_b(b, spec.n)
    if not linalg.is_nsc(spec.field, spec.mixer):
        raise ValueError("mixing matrix is not nonsingular by column")
    N = spec.N
    return min((N - i + 1) * min_b_distance(spec.codes[i - 1], b, cap)
               for i in range(1, spec.M + 1))


@dataclass(frozen=True)
class TriangularBoundResult:
    """Upper bound value plus an equality certificate when one was found.

    certificate is 'first-rows-tight' when the NSC lower bound meets
    N d_b(C_1), 'end-hole-witness' when a constituent witness codeword
    proves equality (the witness is then attached), and None when the
    search was inconclusive.
    """

    upper: int
    exact: int | None = None
    certificate: str | None = None
    witness: np.ndarray | None = dc_field(default=None, compare=False)


def upper_bound_triangular_nsc(spec: MatrixProductSpec, b: int,
                               cap: int | None = None) -> TriangularBoundResult:
    _check_b(b, spec.n)
    f, A, N = spec.field, spec.mixer, spec.N
    if not linalg.is_upper_triangular(A):
        raise ValueError("mixing matrix is not upper triangular")
    if not linalg.is_nsc(f, A):
        raise ValueError("mixing matrix is not nonsingular by column")
    db = [min_b_distance(c, b, cap) for c in spec.codes]
    dstar = min((N - i + 1) * db[i - 1] for i in range(1, spec.M + 1))
    upper = min([N * db[0]] + [(N - i + 1) * db[i - 1] + b - 1 for i in range(2, spec.M + 1)])
    if dstar == N * db[0]:
        return TriangularBoundResult(upper, dstar, "first-rows-tight")
    for i0 in range(2, spec.M + 1):
        if (N - i0 + 1) * db[i0 - 1] != dstar:
            continue
        w = find_codeword_with_end_hole(spec.codes[i0 - 1], b, db[i0 - 1], cap)
        if w is not None:
            return TriangularBoundResult(upper, dstar, "end-hole-witness", w)
    return TriangularBoundResult(upper)


def bound_report(spec: MatrixProductSpec, b: int, cap: int | None = None) -> dict:
    """All applicable bounds plus the exact distance when computable."""
    f = spec.field
    report: dict = {
        "schema": 1,
        "b": b,
        "lower_a": lower_bound_first_rows(spec, b, cap),
        "lower_b": lower_bound_last_rows(spec, b, cap),
        "lower_nsc": None,
        "upper": None,
        "exact": None,
        "tight": False,
    }
    nsc = linalg.is_nsc(f, spec.mixer)
    if nsc:
        report["lower_nsc"] = lower_bound_nsc(spec, b, cap)
    certified = None
    if nsc and linalg.is_upper_triangular(spec.mixer):
        res = upper_bound_triangular_nsc(spec, b, cap)
        report["upper"] = res.upper
        certified = res.exact
    try:
        report["exact"] = min_b_distance(product_code(spec), b, cap)
    except EnumerationCapError:
        report["exact"] = certified
    if report["exact"] is not None:
        best_lower = max(v for v in (report["lower_a"], report["lower_b"], report["lower_nsc"])
                         if v is not None)
        report["tight"] = (report["exact"] == best_lower
                           or (report["upper"] is not None and report["exact"] == report["upper"]))
    return report
