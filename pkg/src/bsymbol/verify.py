"""Randomized self-verification suites.

Each suite draws reproducible random instances from a seeded generator,
checks library results against independent oracles (brute-force
enumeration, the hole formula against the window definition, closed
forms against exhaustive profiles, bound soundness against exact
distances) and reports a pass/fail count.  The CLI ``verify-all``
subcommand runs every suite; the test suite reuses the same generators
at the acceptance parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .classify import PARITY_FAMILIES, classify_codim1, classify_codim2, parity_family
from .codes import (DTYPE, LinearCode, b_weight, b_weight_via_holes,
                    exhaustive_b_profile, min_b_distance, profile,
                    window_weight_table)
from .field import GF, Field
from .matrix_product import (MatrixProductSpec, block_matrix, encode,
                             lower_bound_first_rows, lower_bound_last_rows,
                             lower_bound_nsc, product_code,
                             upper_bound_triangular_nsc)
from .reed_muller import (binomial_matrix, rm_by_evaluation, rm_by_recursion,
                          rm_db, rm_dimension, rm_successive_witness)
from .uv_construction import build_amds, uv_bounds, uv_construct


@dataclass
class SuiteResult:
    name: str
    checks: int
    failures: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0


# ----------------------------------------------------------------------
# Random instance generators
# ----------------------------------------------------------------------

def random_full_rank(rng: np.random.Generator, field: Field, rows: int, cols: int) -> np.ndarray:
    """Random rows x cols matrix of full row rank over the field."""
    if rows > cols:
        raise ValueError("rows must be <= cols")
    while True:
        M = rng.integers(0, field.q, size=(rows, cols), dtype=np.int64).astype(DTYPE)
        if linalg.rank(field, M) == rows:
            return M


def random_code(rng: np.random.Generator, field: Field, n: int, k: int) -> LinearCode:
    return LinearCode(field, random_full_rank(rng, field, k, n))


def random_vandermonde_nsc(rng: np.random.Generator, field: Field,
                           rows: int, cols: int) -> np.ndarray:
    """Rows (x_j^i)_{i=0..rows-1} over distinct points x_j; always NSC."""
    if cols > field.q:
        raise ValueError("need cols <= q distinct points")
    pts = rng.permutation(field.q)[:cols]
    A = np.zeros((rows, cols), dtype=DTYPE)
    A[0] = 1
    for i in range(1, rows):
        A[i] = field.mul_arr(A[i - 1], pts.astype(DTYPE))
    return A


def random_triangular_nsc(rng: np.random.Generator, field: Field,
                          rows: int, cols: int) -> np.ndarray:
    """Upper triangular NSC matrix: a row/column rescaling of a binomial-matrix slice.

    Taking the first `rows` rows and columns of the q x q binomial
    matrix keeps every minor nonsingular, and scaling rows or columns by
    nonzero constants preserves both properties.  Needs cols <= q.
    """
    if cols > field.q:
        raise ValueError("triangular NSC over GF(q) here needs cols <= q")
    A = binomial_matrix(field)[:rows, :cols].copy()
    rscale = rng.integers(1, field.q, size=rows).astype(DTYPE)
    cscale = rng.integers(1, field.q, size=cols).astype(DTYPE)
    return field.mul_arr(field.mul_arr(A, rscale[:, None]), cscale[None, :])


def random_mpc_spec(rng: np.random.Generator, qs=(2, 3, 5), n_max: int = 6,
                    m_max: int = 3, n_cols_max: int = 4,
                    message_cap: int = 1 << 16) -> MatrixProductSpec:
    """Random spec with exact product distance within message_cap.

    Cycles through plain rank-M, Vandermonde NSC, and triangular NSC
    mixing matrices so every bound path gets exercised.
    """
    while True:
        field = GF(int(rng.choice(qs)))
        n = int(rng.integers(2, n_max + 1))
        M = int(rng.integers(1, m_max + 1))
        N = int(rng.integers(M, n_cols_max + 1))
        kind = int(rng.integers(0, 3))
        if kind and N > field.q:
            continue
        dims = [int(rng.integers(1, n + 1)) for _ in range(M)]
        if field.q ** sum(dims) > message_cap:
            continue
        if kind == 0:
            A = random_full_rank(rng, field, M, N)
        elif kind == 1:
            A = random_vandermonde_nsc(rng, field, M, N)
        else:
            A = random_triangular_nsc(rng, field, M, N)
        codes = tuple(random_code(rng, field, n, k) for k in dims)
        return MatrixProductSpec(codes, A)


def random_vector(rng: np.random.Generator, q: int, n: int) -> np.ndarray:
    return rng.integers(0, q, size=n, dtype=np.int64).astype(DTYPE)


# ----------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------

def suite_field_axioms(qs=((2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2))) -> SuiteResult:
    """Exhaustive field axioms plus table-vs-polynomial cross-check."""
    checks = failures = 0
    for p, e in qs:
        f = GF(p, e)
        elems = list(f.elements_in_order())
        for a in elems:
            for b in elems:
                checks += 3
                if f.add(a, b) != f.add(b, a):
                    failures += 1
                if f.mul(a, b) != f.mul(b, a):
                    failures += 1
                if f.mul(a, b) != f.mul_direct(a, b):
                    failures += 1
                for c in elems:
                    checks += 2
                    if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)):
                        failures += 1
                    if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)):
                        failures += 1
            checks += 1
            if a and f.mul(a, f.inv(a)) != 1:
                failures += 1
    return SuiteResult("field-axioms", checks, failures)


def suite_hole_formula(seed: int, trials: int) -> SuiteResult:
    """Window-definition weight equals the hole-formula weight, all b."""
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([2, 3, 4, 5]))
        n = int(rng.integers(1, 17))
        x = random_vector(rng, q, n)
        table = window_weight_table(x[None, :])[0]
        for b in range(1, n + 1):
            checks += 1
            if table[b - 1] != b_weight_via_holes(x, b):
                failures += 1
        # spot-check the vectorized path against the naive definition
        b = int(rng.integers(1, n + 1))
        checks += 1
        if table[b - 1] != b_weight(x, b):
            failures += 1
    return SuiteResult("hole-formula", checks, failures)


def suite_weight_monotonicity(seed: int, trials: int) -> SuiteResult:
    """w_1 <= w_b <= min(w_1 + (b-1)*holes, n) and w_b <= w_{b+1}."""
    from .codes import holes as hole_fn
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(2, 17))
        x = random_vector(rng, q, n)
        table = window_weight_table(x[None, :])[0]
        w1 = int(table[0])
        supp = [i + 1 for i in range(n) if x[i]]
        nholes = len(hole_fn(supp, n).holes)
        for b in range(1, n + 1):
            checks += 1
            wb = int(table[b - 1])
            if not (w1 <= wb <= min(w1 + (b - 1) * nholes, n)):
                failures += 1
            if b < n and wb > table[b]:
                failures += 1
    return SuiteResult("weight-monotonicity", checks, failures)


def suite_structured_block_vectors(seed: int, trials: int) -> SuiteResult:
    """Row-structured block vectors obey the per-row window lower bound.

    Builds length-nN vectors whose block matrix has exactly l nonzero
    entries in each row of a chosen support J and zero rows elsewhere;
    then w_b >= l * (|J| + sum over holes of J of min(|H|, b-1)).
    """
    from .codes import holes as hole_fn
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([2, 3, 5]))
        f = GF(q)
        n = int(rng.integers(2, 8))
        N = int(rng.integers(1, 5))
        l = int(rng.integers(1, N + 1))
        g = int(rng.integers(1, n + 1))
        J = sorted(rng.permutation(n)[:g] + 1)
        D = np.zeros((n, N), dtype=DTYPE)
        for i in J:
            cols = rng.permutation(N)[:l]
            D[i - 1, cols] = rng.integers(1, q, size=l)
        c = D.T.reshape(-1)
        hs = hole_fn(J, n)
        for b in range(1, n + 1):
            bound = l * (g + sum(min(len(h), b - 1) for h in hs.holes))
            checks += 1
            if b_weight_via_holes(c, b) < bound:
                failures += 1
        # round-trip the block view
        checks += 1
        if not np.array_equal(block_matrix(c, n, N), D):
            failures += 1
    return SuiteResult("structured-block-vectors", checks, failures)


def suite_product_bounds(seed: int, trials: int) -> SuiteResult:
    """Lower bounds <= exact d_b <= applicable upper bound on random specs."""
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        spec = random_mpc_spec(rng)
        code = product_code(spec)
        exact = exhaustive_b_profile(code)
        nsc = linalg.is_nsc(spec.field, spec.mixer)
        triangular = nsc and linalg.is_upper_triangular(spec.mixer)
        for b in range(1, spec.n + 1):
            d = exact[b - 1]
            checks += 1
            if lower_bound_first_rows(spec, b) > d:
                failures += 1
            checks += 1
            if lower_bound_last_rows(spec, b) > d:
                failures += 1
            if nsc:
                checks += 1
                if lower_bound_nsc(spec, b) > d:
                    failures += 1
            if triangular:
                res = upper_bound_triangular_nsc(spec, b)
                checks += 1
                if d > res.upper:
                    failures += 1
                if res.exact is not None:
                    checks += 1
                    if res.exact != d:
                        failures += 1
    return SuiteResult("product-bounds", checks, failures)


def suite_uv_bounds(seed: int, trials: int) -> SuiteResult:
    """Sandwich and equality detection for the [u+v, u-v] construction."""
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([3, 5]))
        f = GF(q)
        n = int(rng.integers(2, 6))
        k1 = int(rng.integers(1, n + 1))
        k2 = int(rng.integers(1, n + 1))
        if q ** (k1 + k2) > 1 << 14:
            continue
        c1 = random_code(rng, f, n, k1)
        c2 = random_code(rng, f, n, k2)
        code = uv_construct(c1, c2)
        exact = exhaustive_b_profile(code)
        for b in range(1, n + 1):
            rep = uv_bounds(c1, c2, b)
            d = exact[b - 1]
            checks += 1
            if not (rep.lower <= d and rep.sandwich_low <= d <= rep.sandwich_high):
                failures += 1
            if rep.exact is not None:
                checks += 1
                if rep.exact != d:
                    failures += 1
            if rep.mds_sandwich is not None:
                checks += 1
                lo, hi = rep.mds_sandwich
                if not lo <= d <= hi:
                    failures += 1
    return SuiteResult("uv-bounds", checks, failures)


def suite_reed_muller(qs=(2, 3), m_max: int = 3, dim_cap: int = 1 << 12) -> SuiteResult:
    """Closed-form d_b vs exhaustive profiles, construction equality, witness."""
    checks = failures = 0
    for q in qs:
        f = GF(q) if q in (2, 3, 5, 7) else GF(2, 2)
        for m in range(1, m_max + 1):
            if q ** m > 64:
                continue
            for r in range(0, m * (q - 1) + 1):
                ev = rm_by_evaluation(f, r, m)
                rec = rm_by_recursion(f, r, m)
                checks += 2
                if not ev.same_code(rec):
                    failures += 1
                if ev.k != rm_dimension(q, r, m):
                    failures += 1
                w = rm_successive_witness(f, r, m)
                checks += 1
                if not ev.contains(w):
                    failures += 1
                if q ** ev.k > dim_cap:
                    continue
                exact = exhaustive_b_profile(ev)
                for b in range(1, ev.n + 1):
                    checks += 1
                    if exact[b - 1] != rm_db(f, r, m, b):
                        failures += 1
                    checks += 1
                    if b_weight(w, b) != rm_db(f, r, m, b):
                        failures += 1
    return SuiteResult("reed-muller", checks, failures)


def suite_classification(seed: int, trials: int) -> SuiteResult:
    """Codimension-1/2 closed-form profiles vs exhaustive enumeration."""
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([2, 3, 5]))
        f = GF(q)
        codim = int(rng.choice([1, 2]))
        n_min = 2 if codim == 1 else 3
        n = int(rng.integers(n_min, 13))
        while q ** (n - codim) > 1 << 16:
            n -= 1
        H = random_full_rank(rng, f, codim, n)
        code = LinearCode.from_parity_check(f, H)
        cls = classify_codim1(code) if codim == 1 else classify_codim2(code)
        exact = profile(code)
        checks += 1
        if cls.profile.distances != exact.distances:
            failures += 1
    for kind, expected in zip(PARITY_FAMILIES, "abccd"):
        f = GF(5)
        n = {"unit": 4, "adjacent_pair": 4, "alternating": 6,
             "alternating_tail": 5, "vandermonde": 4}[kind]
        cls = classify_codim2(parity_family(kind, f, n))
        checks += 1
        if cls.case != expected:
            failures += 1
    return SuiteResult("classification", checks, failures)


def suite_amds_certificates(qs=(3, 5, 7), n_values=(4, 7, 12, 25, 50)) -> SuiteResult:
    """Certified [2n, 2n-2] codes; small instances re-checked by enumeration."""
    checks = failures = 0
    for q in qs:
        f = GF(q)
        for n in n_values:
            for b in range(1, n - 1):
                code, cert = build_amds(f, n, b)
                checks += 1
                if not (cert.d_b == b + 1 and cert.singleton == b + 2
                        and code.n == 2 * n and code.k == 2 * n - 2):
                    failures += 1
            if q ** (2 * n - 2) <= 1 << 14:
                code, _ = build_amds(f, n, 1)
                exact = profile(code)
                for b in range(1, n - 1):
                    checks += 1
                    if exact.distance(b) != b + 1:
                        failures += 1
    return SuiteResult("amds-certificates", checks, failures)


def suite_profile_invariants(seed: int, trials: int) -> SuiteResult:
    """Singleton and monotonicity assertions fire on every constructed profile."""
    rng = np.random.default_rng(seed)
    checks = failures = 0
    for _ in range(trials):
        q = int(rng.choice([2, 3, 5]))
        f = GF(q)
        n = int(rng.integers(1, 9))
        k = int(rng.integers(1, n + 1))
        if q ** k > 1 << 14:
            continue
        code = random_code(rng, f, n, k)
        checks += 1
        try:
            profile(code)  # validates on construction
        except ValueError:
            failures += 1
    return SuiteResult("profile-invariants", checks, failures)


def run_all(seed: int = 42, trials: int = 200) -> list[SuiteResult]:
    t = max(1, trials)
    return [
        suite_field_axioms(),
        suite_hole_formula(seed, 5 * t),
        suite_weight_monotonicity(seed + 1, 5 * t),
        suite_structured_block_vectors(seed + 2, t),
        suite_product_bounds(seed + 3, max(1, t // 4)),
        suite_uv_bounds(seed + 4, max(1, t // 4)),
        suite_reed_muller(),
        suite_classification(seed + 5, t),
        suite_amds_certificates(n_values=(4, 7, 12)),
        suite_profile_invariants(seed + 6, t),
    ]
