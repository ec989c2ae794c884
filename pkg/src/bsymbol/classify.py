"""Closed-form b-symbol profiles of codimension-1 and codimension-2 codes.

An [n, n-1]_q code has d_1 in {1, 2} and its whole profile follows:

  case a: d_1 = 2, d_b = b + 1 for b <= n-1 (meets the Singleton bound);
  case b: d_1 = 1, d_b = b for b <= n-1 (one below it).

An [n, n-2]_q code has d_1 in {1, 2, 3} and splits into four cases:

  case a: d_1 = 1,                        d_b = b;
  case b: d_1 = 2 with a weight-2 codeword on cyclically adjacent
          positions (w_2 = 3),            d_b = b + 1;
  case c: d_1 = 2 but every weight-2 codeword has w_2 = 4,
          d_1 = 2 and d_b = min(b + 2, n) for b >= 2;
  case d: d_1 = 3,                        d_b = min(b + 2, n).

All profiles run b = 1..n-1 with d_n = n appended.  The case analysis
never enumerates codewords: weight-1 words correspond to zero columns
of the parity check matrix and weight-2 words to proportional column
pairs, so a quadratic column scan decides everything even when q^k is
astronomically large.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import DTYPE, BSymbolProfile, LinearCode
from .field import Field


@dataclass(frozen=True)
class CodimClassification:
    """Case letter, minimum Hamming distance, and the predicted full profile."""

    case: str
    d1: int
    profile: BSymbolProfile


def _predict(code: LinearCode, body) -> BSymbolProfile:
    distances = list(body) + [code.n]
    return BSymbolProfile.from_distances(code.q, code.n, code.k, distances)


def classify_codim1(code: LinearCode) -> CodimClassification:
    """Profile of an [n, n-1] code from its 1 x n parity check row."""
    n = code.n
    if code.k != n - 1 or n < 2:
        raise ValueError(f"expected an [n, n-1] code with n >= 2, got [{n},{code.k}]")
    h = code.parity_check[0]
    if (h == 0).any():
        return CodimClassification("b", 1, _predict(code, (b for b in range(1, n))))
    return CodimClassification("a", 2, _predict(code, (b + 1 for b in range(1, n))))


def _proportional(field: Field, u, v) -> bool:
    # 2x2 determinant of two nonzero columns
    return field.sub(field.mul(int(u[0]), int(v[1])), field.mul(int(u[1]), int(v[0]))) == 0


def classify_codim2(code: LinearCode) -> CodimClassification:
    """Profile of an [n, n-2] code from its 2 x n parity check matrix."""
    n = code.n
    if code.k != n - 2 or n < 3:
        raise ValueError(f"expected an [n, n-2] code with n >= 3, got [{n},{code.k}]")
    f = code.field
    H = code.parity_check
    cols = [H[:, j] for j in range(n)]
    if any(not c.any() for c in cols):
        return CodimClassification("a", 1, _predict(code, (b for b in range(1, n))))
    pair_exists = any(_proportional(f, cols[i], cols[j])
                      for i in range(n) for j in range(i + 1, n))
    if not pair_exists:
        return CodimClassification(
            "d", 3, _predict(code, (min(b + 2, n) for b in range(1, n))))
    adjacent = any(_proportional(f, cols[i], cols[(i + 1) % n]) for i in range(n))
    if adjacent:
        return CodimClassification("b", 2, _predict(code, (b + 1 for b in range(1, n))))
    return CodimClassification(
        "c", 2, _predict(code, [2] + [min(b + 2, n) for b in range(2, n)]))


#: Parity check pattern families covering the four codimension-2 cases.
PARITY_FAMILIES = ("unit", "adjacent_pair", "alternating", "alternating_tail", "vandermonde")


def parity_family(kind: str, field: Field, n: int) -> LinearCode:
    """[n, n-2] code from one of the named 2 x n parity check patterns.

    unit             rows e_1, e_2 (zero columns, case a), n >= 3;
    adjacent_pair    (1 1 0...0 / 0 0 1...1), case b, n >= 4;
    alternating      (1 0 1 0... / 0 1 0 1...), even n >= 4, case c;
    alternating_tail alternating on n-1 columns plus a final (1 1)
                     column, odd n >= 5, case c;
    vandermonde      (1...1 / alpha_1...alpha_n) over n distinct field
                     elements, 3 <= n <= q, case d.
    """
    H = np.zeros((2, n), dtype=DTYPE)
    if kind == "unit":
        if n < 3:
            raise ValueError("unit family needs n >= 3")
        H[0, 0] = 1
        H[1, 1] = 1
    elif kind == "adjacent_pair":
        if n < 4:
            raise ValueError("adjacent_pair family needs n >= 4")
        H[0, 0] = H[0, 1] = 1
        H[1, 2:] = 1
    elif kind == "alternating":
        if n < 4 or n % 2:
            raise ValueError("alternating family needs even n >= 4")
        H[0, 0::2] = 1
        H[1, 1::2] = 1
    elif kind == "alternating_tail":
        if n < 5 or n % 2 == 0:
            raise ValueError("alternating_tail family needs odd n >= 5")
        H[0, 0:n - 1:2] = 1
        H[1, 1:n - 1:2] = 1
        H[:, n - 1] = 1
    elif kind == "vandermonde":
        if not 3 <= n <= field.q:
            raise ValueError(f"vandermonde family needs 3 <= n <= q = {field.q}")
        H[0] = 1
        H[1] = np.arange(n, dtype=DTYPE)
    else:
        raise ValueError(f"unknown parity family {kind!r}; choose from {PARITY_FAMILIES}")
    return LinearCode.from_parity_check(field, H)
