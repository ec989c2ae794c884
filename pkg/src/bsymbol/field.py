"""Exact arithmetic in GF(p^e) with a canonical integer encoding.

Elements are plain integers in [0, q), q = p^e.  A prime-field element
is its residue.  An extension-field element c_0 + c_1*x + ... + c_{e-1}*x^{e-1}
in the polynomial basis is encoded as the base-p integer
c_0 + c_1*p + ... + c_{e-1}*p^{e-1}, so the polynomial 'x' is the integer p.

Every module in this library orders field elements by this encoding,
0 < 1 < ... < q-1, starting at the zero element.  For prime q this is the
usual order on residues.

Extension moduli are not configurable: the modulus of GF(p^e) is the monic
irreducible polynomial of degree e over GF(p) with the smallest integer
encoding of its non-leading coefficients, found by deterministic search.
This makes element encodings reproducible across runs and machines.
Examples of what the search yields:

    GF(4)  : x^2 + x + 1
    GF(8)  : x^3 + x + 1
    GF(9)  : x^2 + 1
    GF(16) : x^4 + x + 1
    GF(25) : x^2 + 2

Multiplication and inversion go through log/antilog tables built on the
smallest generator of the multiplicative group; addition is digit-wise
mod p (a plain XOR when p = 2).  The direct polynomial product is kept
available as ``mul_direct`` so the table path can be cross-checked.
"""

from __future__ import annotations

import functools

import numpy as np

# Integer dtype used for all element arrays in the library.
DTYPE = np.int32

#: Largest supported field order.
MAX_ORDER = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters or an impossible field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ----------------------------------------------------------------------
# Polynomial helpers over GF(p), coefficient lists low degree first
# ----------------------------------------------------------------------

def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    r = list(a)
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return r[:dm]


def _poly_is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    e = len(f) - 1
    if e == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, e // 2 + 1):
        for tail in range(p ** d):
            g = [(tail // p ** j) % p for j in range(d)] + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _find_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Canonical (smallest-encoding) monic irreducible of degree e over GF(p)."""
    for tail in range(p ** e):
        f = [(tail // p ** j) % p for j in range(e)] + [1]
        if _poly_is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """The finite field GF(p^e), q = p^e <= 2^16.

    Scalar operations take and return plain ints; the ``*_arr`` variants
    operate elementwise on numpy integer arrays with broadcasting.  The
    Field is immutable after construction and safe to share.
    """

    def __init__(self, p: int, e: int = 1, max_order: int = MAX_ORDER):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        q = p ** e
        if q > max_order:
            raise FieldError(f"field order {q} exceeds cap {max_order}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus_poly: tuple[int, ...] = () if e == 1 else _find_irreducible(p, e)
        self.generator: int | None = None
        if e > 1:
            self._build_tables()

    # -- construction internals -------------------------------------------

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.e)]

    def _undigits(self, ds) -> int:
        return sum(int(d) % self.p * self.p ** i for i, d in enumerate(ds))

    def mul_direct(self, a: int, b: int) -> int:
        """Reference product via polynomial arithmetic, no tables."""
        if self.e == 1:
            return a * b % self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % self.p
        return self._undigits(_poly_rem(prod, list(self.modulus_poly), self.p))

    def _build_tables(self):
        q = self.q
        for g in range(2, q):
            seq = []
            x = 1
            for i in range(q - 1):
                seq.append(x)
                x = self.mul_direct(x, g)
                if x == 1 and i < q - 2:
                    break
            if len(seq) == q - 1 and x == 1:
                self.generator = g
                break
        else:  # multiplicative group is always cyclic
            raise FieldError(f"no generator found for GF({self.p}^{self.e})")
        exp = np.zeros(2 * (q - 1), dtype=DTYPE)
        log = np.zeros(q, dtype=DTYPE)
        for i, v in enumerate(seq):
            exp[i] = v
            log[v] = i
        exp[q - 1:] = exp[:q - 1]
        self._exp2 = exp
        self._log = log

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._undigits((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._undigits(-x % self.p for x in self._digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp2[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._exp2[(self.q - 1) - self._log[a]])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        out, base = 1, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def from_int(self, z: int) -> int:
        """Embed an ordinary integer via the prime subfield (z mod p)."""
        return z % self.p

    def elements_in_order(self) -> range:
        """All q elements in the canonical total order, starting at 0."""
        return range(self.q)

    # -- vectorized operations ----------------------------------------------

    def add_arr(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self.e == 1:
            return ((a + b) % self.p).astype(DTYPE)
        if self.p == 2:
            return (a ^ b).astype(DTYPE)
        out = np.zeros(np.broadcast(a, b).shape, dtype=DTYPE)
        pw = 1
        for _ in range(self.e):
            out += (((a // pw) + (b // pw)) % self.p).astype(DTYPE) * pw
            pw *= self.p
        return out

    def neg_arr(self, a):
        a = np.asarray(a)
        if self.e == 1:
            return ((-a) % self.p).astype(DTYPE)
        if self.p == 2:
            return a.astype(DTYPE).copy()
        out = np.zeros(a.shape, dtype=DTYPE)
        pw = 1
        for _ in range(self.e):
            out += ((-(a // pw)) % self.p).astype(DTYPE) * pw
            pw *= self.p
        return out

    def sub_arr(self, a, b):
        if self.p == 2:
            return (np.asarray(a) ^ np.asarray(b)).astype(DTYPE)
        if self.e == 1:
            return ((np.asarray(a) - np.asarray(b)) % self.p).astype(DTYPE)
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if self.e == 1:
            return ((a.astype(np.int64) * b.astype(np.int64)) % self.p).astype(DTYPE)
        prod = self._exp2[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod).astype(DTYPE)

    def matmul(self, A, B):
        """Exact matrix product of 2-d element arrays."""
        A, B = np.asarray(A), np.asarray(B)
        if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
            raise ValueError(f"incompatible shapes {A.shape} x {B.shape}")
        if self.e == 1:
            return ((A.astype(np.int64) @ B.astype(np.int64)) % self.p).astype(DTYPE)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=DTYPE)
        for l in range(A.shape[1]):
            col = A[:, l]
            if col.any():
                out = self.add_arr(out, self.mul_arr(col[:, None], B[l][None, :]))
        return out

    # -----------------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.e, self.modulus_poly) == (other.p, other.e, other.modulus_poly))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus_poly))

    def __repr__(self):
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"


@functools.lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> Field:
    """Shared Field instance for GF(p^e); same (p, e) returns the same object."""
    return Field(p, e)


def field_from_order(q: int) -> Field:
    """Field of order q for a prime power q, e.g. 9 -> GF(3^2)."""
    if q < 2:
        raise FieldError(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            v = q
            while v % p == 0:
                v //= p
                e += 1
            if v != 1:
                raise FieldError(f"{q} is not a prime power")
            return GF(p, e)
        p += 1
    return GF(q, 1)
