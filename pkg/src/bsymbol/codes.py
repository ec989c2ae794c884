"""Linear codes over GF(q) and the cyclic b-symbol metric.

Coordinate positions are 1-based, 1..n, and all windows and holes wrap
around cyclically: the b-window at position i reads coordinates
i, i+1, ..., i+b-1 with indices reduced mod n.  The b-symbol support of
a vector is the set of positions whose window is nonzero; its size is
the b-symbol weight, which reduces to the Hamming weight at b = 1.

A hole of a support set J is a maximal cyclic run of positions outside
J (both flanking positions lie in J).  The b-symbol weight can be read
off the Hamming support alone:

    w_b(x) = w_1(x) + sum over holes H of min(|H|, b - 1)

and the equivalence of this formula with the window definition is one
of the test oracles of the library.

Exact minimum distances are found by exhaustive enumeration.  Messages
are enumerated one representative per scalar line (first nonzero digit
fixed to 1), in deterministic base-q counter order, and processed in
vectorized batches; results are independent of the batch partition.
The enumeration refuses to run past a configurable cap (default 2^24
codewords, overridable via the BSYM_CAP environment variable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import DTYPE, Field

DEFAULT_CAP = 1 << 24
CAP_ENV = "BSYM_CAP"
BATCH = 1 << 15


class EnumerationCapError(RuntimeError):
    """Exact enumeration would exceed the configured codeword cap."""


def enumeration_cap(override: int | None = None) -> int:
    """Active enumeration cap: explicit argument, else $BSYM_CAP, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_CAP


def _as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=DTYPE)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    return v


def _check_b(b: int, n: int):
    if not 1 <= b <= n:
        raise ValueError(f"b must be in 1..{n}, got {b}")


# ----------------------------------------------------------------------
# b-symbol supports, weights, holes
# ----------------------------------------------------------------------

def b_support(x, b: int) -> set[int]:
    """Positions i (1-based, cyclic) whose window (x_i, ..., x_{i+b-1}) is nonzero."""
    v = _as_vector(x)
    n = v.size
    _check_b(b, n)
    return {i + 1 for i in range(n) if any(v[(i + t) % n] for t in range(b))}


def b_weight(x, b: int) -> int:
    """Number of nonzero b-windows of x; the Hamming weight at b = 1."""
    return len(b_support(x, b))


def b_distance(field: Field, x, y, b: int) -> int:
    """b-symbol distance of two vectors, the b-symbol weight of x - y."""
    vx, vy = _as_vector(x), _as_vector(y)
    if vx.size != vy.size:
        raise ValueError(f"length mismatch: {vx.size} vs {vy.size}")
    return b_weight(field.sub_arr(vx, vy), b)


@dataclass(frozen=True)
class HoleSet:
    """Cyclic hole decomposition of a support set J inside 1..n.

    Each hole is a tuple of consecutive (mod n) positions outside the
    support, flanked on both sides by support positions.  J = empty and
    J = 1..n have no holes.
    """

    n: int
    support: tuple[int, ...]
    holes: tuple[tuple[int, ...], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(h) for h in self.holes)


def holes(J, n: int) -> HoleSet:
    """Hole decomposition of the support set J subset of {1..n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    supp = sorted(set(int(j) for j in J))
    if supp and not (1 <= supp[0] and supp[-1] <= n):
        raise ValueError(f"support positions must lie in 1..{n}")
    g = len(supp)
    if g in (0, n):
        return HoleSet(n, tuple(supp), ())
    out = []
    for i, s in enumerate(supp):
        nxt = supp[(i + 1) % g]
        gap = (nxt - s - 1) % n
        if gap:
            out.append(tuple((s + t - 1) % n + 1 for t in range(1, gap + 1)))
    return HoleSet(n, tuple(supp), tuple(out))


def is_successive(J, n: int) -> bool:
    """True iff J is cyclically consecutive (at most one hole)."""
    return len(holes(J, n).holes) <= 1


def b_weight_via_holes(x, b: int) -> int:
    """b-symbol weight from the Hamming support and its hole sizes."""
    v = _as_vector(x)
    n = v.size
    _check_b(b, n)
    supp = [i + 1 for i in range(n) if v[i]]
    hs = holes(supp, n)
    return len(supp) + sum(min(len(h), b - 1) for h in hs.holes)


def window_weight_table(X) -> np.ndarray:
    """w_b for every row of X and every b = 1..n, as a (rows, n) matrix."""
    M = np.asarray(X)
    if M.ndim != 2:
        raise ValueError("expected a 2-d array of row vectors")
    mask = M != 0
    n = mask.shape[1]
    out = np.zeros((mask.shape[0], n), dtype=np.int64)
    cur = mask.copy()
    out[:, 0] = cur.sum(axis=1)
    for b in range(2, n + 1):
        cur |= np.roll(mask, -(b - 1), axis=1)
        out[:, b - 1] = cur.sum(axis=1)
    return out


# ----------------------------------------------------------------------
# Linear codes
# ----------------------------------------------------------------------

class LinearCode:
    """An [n, k]_q linear code held as a row-reduced generator matrix.

    The constructor rejects dependent generator rows; a dimension-0 code
    (empty generator) is representable but has no distance profile.
    Computed minimum distances are cached on the instance.
    """

    def __init__(self, field: Field, generator):
        G = np.asarray(generator, dtype=DTYPE)
        if G.ndim != 2:
            raise ValueError(f"generator must be 2-d, got shape {G.shape}")
        if G.shape[1] < 1:
            raise ValueError("code length must be >= 1")
        if G.size and ((G < 0) | (G >= field.q)).any():
            raise ValueError(f"generator entries must lie in [0, {field.q})")
        R, pivots = linalg.rref(field, G)
        if len(pivots) < G.shape[0]:
            raise ValueError("generator rows are linearly dependent")
        self.field = field
        self.generator = R
        self.k, self.n = R.shape
        self._parity: np.ndarray | None = None
        self._db: dict[int, int] = {}

    @classmethod
    def from_parity_check(cls, field: Field, H) -> "LinearCode":
        """Code {x : H x^T = 0}; dimension n - rank(H)."""
        Hm = np.asarray(H, dtype=DTYPE)
        code = cls(field, linalg.kernel_basis(field, Hm))
        code._parity = linalg.rref(field, Hm)[0]
        return code

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def parity_check(self) -> np.ndarray:
        if self._parity is None:
            self._parity = linalg.kernel_basis(self.field, self.generator)
        return self._parity

    def contains(self, x) -> bool:
        v = _as_vector(x)
        if v.size != self.n:
            raise ValueError(f"vector length {v.size} != code length {self.n}")
        H = self.parity_check
        if H.shape[0] == 0:
            return True
        return not self.field.matmul(H, v[:, None]).any()

    def same_code(self, other: "LinearCode") -> bool:
        """Row-space equality; generators are stored in RREF, which is canonical."""
        return (self.field == other.field and self.n == other.n and self.k == other.k
                and bool(np.array_equal(self.generator, other.generator)))

    def __repr__(self):
        q = f"{self.field.p}^{self.field.e}" if self.field.e > 1 else f"{self.field.p}"
        return f"LinearCode([{self.n},{self.k}]_{q})"


# ----------------------------------------------------------------------
# Exhaustive enumeration engine
# ----------------------------------------------------------------------

def _projective_batches(q: int, k: int, batch: int = BATCH):
    """Message batches covering one representative per scalar line.

    The first nonzero digit of every message is 1, the remaining digits
    run through a base-q counter, so the (q^k - 1)/(q - 1) projective
    representatives are produced exactly once, in a fixed order.
    """
    for lead in range(k):
        free = k - lead - 1
        total = q ** free
        start = 0
        while start < total:
            cnt = min(batch, total - start)
            idx = np.arange(start, start + cnt, dtype=np.int64)
            block = np.zeros((cnt, k), dtype=DTYPE)
            block[:, lead] = 1
            if free:
                powers = q ** np.arange(free, dtype=np.int64)
                block[:, lead + 1:] = ((idx[:, None] // powers) % q).astype(DTYPE)
            yield block
            start += cnt


def iter_codeword_batches(code: LinearCode, cap: int | None = None, batch: int = BATCH):
    """Batches of nonzero codewords, one representative per scalar line.

    Scalar multiples share the same support, hence the same b-symbol
    weight, so the representatives suffice for all weight minimization
    and support searches.  Order is deterministic.
    """
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    limit = enumeration_cap(cap)
    total = code.q ** code.k
    if total > limit:
        raise EnumerationCapError(
            f"q^k = {total} exceeds enumeration cap {limit}; "
            f"raise {CAP_ENV} or use estimate_min_b_distance")
    for msgs in _projective_batches(code.q, code.k, batch):
        yield code.field.matmul(msgs, code.generator)


def _update_window_minima(mask: np.ndarray, bmin: np.ndarray):
    """Fold one batch of support masks into the running per-b minima.

    Rows whose window weight has reached n are dropped as b grows; their
    weight stays n for all larger b, which is the value bmin starts at.
    """
    n = mask.shape[1]
    cur = mask.copy()
    src = mask
    w = cur.sum(axis=1)
    if w.size == 0:
        return
    bmin[0] = min(bmin[0], int(w.min()))
    for b in range(2, bmin.size + 1):
        keep = w < n
        if not keep.all():
            cur = cur[keep]
            src = src[keep]
            if cur.shape[0] == 0:
                return
        cur |= np.roll(src, -(b - 1), axis=1)
        w = cur.sum(axis=1)
        bmin[b - 1] = min(bmin[b - 1], int(w.min()))


def exhaustive_b_profile(code: LinearCode, b_max: int | None = None,
                         cap: int | None = None) -> list[int]:
    """Exact d_1(C), ..., d_{b_max}(C) in a single enumeration pass."""
    if code.k == 0:
        raise ValueError("the zero code has no distance profile")
    n = code.n
    if b_max is None:
        b_max = n
    _check_b(b_max, n)
    if all(b in code._db for b in range(1, b_max + 1)):
        return [code._db[b] for b in range(1, b_max + 1)]
    bmin = np.full(b_max, n, dtype=np.int64)
    for words in iter_codeword_batches(code, cap):
        _update_window_minima(words != 0, bmin)
    out = [int(v) for v in bmin]
    code._db.update({b: out[b - 1] for b in range(1, b_max + 1)})
    return out


def min_b_distance(code: LinearCode, b: int, cap: int | None = None) -> int:
    """Exact minimum b-symbol weight over the nonzero codewords."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    _check_b(b, code.n)
    if b in code._db:
        return code._db[b]
    if b == code.n:
        # every nonzero codeword meets every full-length window
        code._db[b] = code.n
        return code.n
    return exhaustive_b_profile(code, b_max=b, cap=cap)[b - 1]


def estimate_min_b_distance(code: LinearCode, b: int, samples: int, seed: int = 0) -> int:
    """Upper bound on d_b: minimum over random codewords plus all generator rows."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    _check_b(b, code.n)
    best = min(b_weight(row, b) for row in code.generator)
    if samples > 0:
        rng = np.random.default_rng(seed)
        msgs = rng.integers(0, code.q, size=(samples, code.k), dtype=np.int64).astype(DTYPE)
        msgs = msgs[msgs.any(axis=1)]
        if msgs.shape[0]:
            words = code.field.matmul(msgs, code.generator)
            mask = words != 0
            cur = mask.copy()
            for t in range(1, b):
                cur |= np.roll(mask, -t, axis=1)
            best = min(best, int(cur.sum(axis=1).min()))
    return best


def find_codeword_with_end_hole(code: LinearCode, b: int, weight: int,
                                cap: int | None = None) -> np.ndarray | None:
    """First codeword with w_b = weight and a hole of size >= b-1 touching position 1 or n.

    Searches scalar-line representatives in deterministic order (the
    hole condition only depends on the support, so that is enough) and
    returns None when no representative satisfies it.
    """
    _check_b(b, code.n)
    n = code.n
    for words in iter_codeword_batches(code, cap):
        mask = words != 0
        cur = mask.copy()
        for t in range(1, b):
            cur |= np.roll(mask, -t, axis=1)
        hits = np.nonzero(cur.sum(axis=1) == weight)[0]
        for r in hits:
            supp = [i + 1 for i in range(n) if mask[r, i]]
            for h in holes(supp, n).holes:
                if len(h) >= b - 1 and (1 in h or n in h):
                    return words[r].copy()
    return None


# ----------------------------------------------------------------------
# Distance profiles
# ----------------------------------------------------------------------

def singleton_bound(n: int, k: int, b: int) -> int:
    return min(n - k + b, n)


def distance_flag(n: int, k: int, b: int, d: int) -> str:
    """'MDS', 'AMDS' or 'neither' for a b-symbol distance value."""
    s = singleton_bound(n, k, b)
    if d == s:
        return "MDS"
    if d == s - 1:
        return "AMDS"
    return "neither"


@dataclass(frozen=True)
class BSymbolProfile:
    """The vector (d_1, ..., d_n) of a code with per-b MDS/AMDS flags.

    Construction validates the bound d_b <= min(n-k+b, n), monotonicity
    of the distances in b, agreement of the flags with the distances,
    and that the MDS flag, once reached, persists for larger b.
    """

    q: int
    n: int
    k: int
    distances: tuple[int, ...]
    flags: tuple[str, ...]

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_distances(cls, q: int, n: int, k: int, distances) -> "BSymbolProfile":
        d = tuple(int(v) for v in distances)
        flags = tuple(distance_flag(n, k, b, v) for b, v in enumerate(d, start=1))
        return cls(q, n, k, d, flags)

    def validate(self):
        n, k = self.n, self.k
        if k < 1 or k > n:
            raise ValueError(f"invalid dimensions [{n},{k}]")
        if len(self.distances) != n or len(self.flags) != n:
            raise ValueError("profile must cover b = 1..n")
        mds_seen = False
        for b, d in enumerate(self.distances, start=1):
            if not b <= d <= singleton_bound(n, k, b):
                raise ValueError(f"d_{b} = {d} violates b <= d_b <= min(n-k+b, n)")
            if b > 1 and d < self.distances[b - 2]:
                raise ValueError(f"d_{b} = {d} decreases below d_{b-1}")
            flag = distance_flag(n, k, b, d)
            if self.flags[b - 1] != flag:
                raise ValueError(f"flag at b = {b} should be {flag}")
            if mds_seen and flag != "MDS":
                raise ValueError(f"MDS flag lost at b = {b}")
            mds_seen = mds_seen or flag == "MDS"

    def distance(self, b: int) -> int:
        _check_b(b, self.n)
        return self.distances[b - 1]

    def flag(self, b: int) -> str:
        _check_b(b, self.n)
        return self.flags[b - 1]

    def to_dict(self) -> dict:
        return {"schema": 1, "q": self.q, "n": self.n, "k": self.k,
                "d": list(self.distances), "flags": list(self.flags)}


def profile(code: LinearCode, cap: int | None = None) -> BSymbolProfile:
    """Full exact b-symbol distance profile of a code, b = 1..n."""
    d = exhaustive_b_profile(code, cap=cap)
    return BSymbolProfile.from_distances(code.q, code.n, code.k, d)
