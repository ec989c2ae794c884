import itertools

import numpy as np
import pytest

from bsymbol import (GF, BSymbolProfile, EnumerationCapError, LinearCode,
                     b_distance, b_support, b_weight, b_weight_via_holes,
                     estimate_min_b_distance, exhaustive_b_profile, holes,
                     is_successive, iter_codeword_batches, min_b_distance,
                     profile, window_weight_table)


# ----------------------------------------------------------------------
# supports and weights
# ----------------------------------------------------------------------

def test_b_support_examples():
    assert b_support([1, 0, 0, 0], 2) == {1, 4}
    assert b_support([0, 0, 0, 0], 3) == set()
    assert b_support([1, 0, 1, 0], 2) == {1, 2, 3, 4}


def test_b_support_range_checks():
    with pytest.raises(ValueError):
        b_support([1, 0], 3)
    with pytest.raises(ValueError):
        b_support([1, 0], 0)


def test_b_weight_examples():
    assert b_weight([1, 0, 0, 0], 2) == 2
    v = [1, 2, 1, 2]
    for b in range(1, 5):
        assert b_weight(v, b) == 4  # full Hamming support saturates every b
    # over GF(3), the weight-2 word (1,-1,0,0) has w_3 = 4
    assert b_weight([1, 2, 0, 0], 3) == 4


def test_b_distance():
    f = GF(3)
    assert b_distance(f, [1, 1, 0, 0], [0, 0, 0, 0], 3) == 4
    assert b_distance(f, [1, 2, 1, 0], [1, 2, 1, 0], 2) == 0
    with pytest.raises(ValueError):
        b_distance(f, [1, 0], [1, 0, 0], 1)


# ----------------------------------------------------------------------
# holes
# ----------------------------------------------------------------------

def test_holes_examples():
    hs = holes({1, 4}, 6)
    assert set(hs.holes) == {(2, 3), (5, 6)}
    assert holes(range(1, 7), 6).holes == ()
    assert holes(set(), 6).holes == ()
    assert holes({2}, 5).holes == ((3, 4, 5, 1),)


def test_holes_partition_and_flanks():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(1, 15))
        g = int(rng.integers(0, n + 1))
        J = set(int(v) + 1 for v in rng.permutation(n)[:g])
        hs = holes(J, n)
        flat = [p for h in hs.holes for p in h]
        if 0 < len(J) < n:
            # holes are disjoint and cover the complement exactly
            assert sorted(flat) == sorted(set(range(1, n + 1)) - J)
            for h in hs.holes:
                before = (h[0] - 2) % n + 1
                after = h[-1] % n + 1
                assert before in J and after in J
        else:
            assert hs.holes == ()


def test_is_successive():
    assert is_successive({3, 4, 5}, 8)
    assert not is_successive({1, 3}, 4)
    assert is_successive({8, 1, 2}, 8)  # wraps
    assert is_successive(set(), 4)
    assert is_successive(range(1, 5), 4)


def test_b_weight_via_holes_examples():
    assert b_weight_via_holes([1, 0, 1, 0], 2) == 4  # 2 + 1 + 1
    assert b_weight_via_holes([1, 0, 0, 0], 2) == 2  # 1 + (b-1)
    # cyclically consecutive support: w_b = min(w_1 + b - 1, n)
    x = [0, 0, 1, 1, 1, 0, 0, 0]
    for b in range(1, 9):
        assert b_weight_via_holes(x, b) == min(3 + b - 1, 8)


def test_hole_formula_equals_window_definition_exhaustive_gf2():
    for n in range(1, 11):
        for bits in itertools.product((0, 1), repeat=n):
            x = np.array(bits)
            for b in range(1, n + 1):
                assert b_weight(x, b) == b_weight_via_holes(x, b)


def test_hole_formula_equals_window_definition_random():
    rng = np.random.default_rng(4)
    for _ in range(300):
        q = int(rng.choice([3, 4, 5]))
        n = int(rng.integers(1, 17))
        x = rng.integers(0, q, size=n)
        for b in range(1, n + 1):
            assert b_weight(x, b) == b_weight_via_holes(x, b)


def test_window_weight_table_matches_naive():
    rng = np.random.default_rng(6)
    X = rng.integers(0, 3, size=(40, 9))
    table = window_weight_table(X)
    for r in range(40):
        for b in range(1, 10):
            assert table[r, b - 1] == b_weight(X[r], b)


def test_weight_monotone_and_capped():
    rng = np.random.default_rng(8)
    for _ in range(100):
        n = int(rng.integers(2, 14))
        x = rng.integers(0, 2, size=n)
        w = [b_weight(x, b) for b in range(1, n + 1)]
        nh = len(holes([i + 1 for i in range(n) if x[i]], n).holes)
        for b in range(1, n + 1):
            assert w[0] <= w[b - 1] <= min(w[0] + (b - 1) * nh, n)
        assert all(w[i] <= w[i + 1] for i in range(n - 1))


# ----------------------------------------------------------------------
# LinearCode and exact distances
# ----------------------------------------------------------------------

def sum_zero_generator(q, n):
    G = np.zeros((n - 1, n), dtype=int)
    G[:, 0] = 1
    for i in range(n - 1):
        G[i, i + 1] = q - 1
    return G


def test_linear_code_construction():
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 4))
    assert (c.n, c.k) == (4, 3)
    with pytest.raises(ValueError):
        LinearCode(f, [[1, 2, 0], [2, 1, 0]])  # dependent rows
    with pytest.raises(ValueError):
        LinearCode(f, [[0, 3, 0]])  # entry out of range
    zero = LinearCode(f, np.zeros((0, 4), dtype=int))
    assert zero.k == 0
    with pytest.raises(ValueError):
        min_b_distance(zero, 1)


def test_parity_check_and_contains():
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 5))
    H = c.parity_check
    assert H.shape == (1, 5)
    assert not f.matmul(H, c.generator.T).any()
    assert c.contains([1, 2, 0, 0, 0])
    assert not c.contains([1, 1, 0, 0, 0])


def test_from_parity_check_round_trip():
    f = GF(2)
    H = np.array([[1, 1, 0, 0], [0, 0, 1, 1]])
    c = LinearCode.from_parity_check(f, H)
    assert (c.n, c.k) == (4, 2)
    words = [w for batch in iter_codeword_batches(c) for w in batch]
    assert sorted(map(tuple, words)) == [(0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1)]


def test_full_space_distances():
    for q, n in [(2, 5), (3, 4)]:
        f = GF(q)
        c = LinearCode(f, np.eye(n, dtype=int))
        assert exhaustive_b_profile(c) == list(range(1, n + 1))
        p = profile(c)
        assert all(flag == "MDS" for flag in p.flags)


def test_worked_sum_zero_code_distances():
    f = GF(3)
    c1 = LinearCode(f, sum_zero_generator(3, 4))
    assert min_b_distance(c1, 3) == 4
    assert exhaustive_b_profile(c1) == [2, 3, 4, 4]


def test_worked_product_code_d3():
    from bsymbol import product_code, uv_spec
    f = GF(3)
    c1 = LinearCode(f, sum_zero_generator(3, 4))
    C = product_code(uv_spec(c1, c1))
    assert (C.n, C.k) == (8, 6)
    assert min_b_distance(C, 3) == 4
    assert profile(C).flag(3) == "AMDS"


def test_min_b_distance_against_naive_enumeration():
    # independent oracle: direct span walk plus the window definition
    rng = np.random.default_rng(10)
    for _ in range(25):
        q = int(rng.choice([2, 3]))
        f = GF(q)
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, min(3, n) + 1))
        while True:
            G = rng.integers(0, q, size=(k, n))
            try:
                code = LinearCode(f, G)
                break
            except ValueError:
                continue
        words = set()
        for msg in itertools.product(range(q), repeat=k):
            if any(msg):
                w = np.zeros(n, dtype=int)
                for l, m in enumerate(msg):
                    w = f.add_arr(w, f.mul_arr(np.full(n, m), code.generator[l]))
                words.add(tuple(int(v) for v in w))
        for b in range(1, n + 1):
            naive = min(b_weight(np.array(w), b) for w in words)
            assert min_b_distance(code, b) == naive


def test_distance_invariant_under_rotation_and_scaling():
    rng = np.random.default_rng(12)
    f = GF(5)
    for _ in range(10):
        n = int(rng.integers(3, 7))
        k = int(rng.integers(1, 4))
        while True:
            try:
                code = LinearCode(f, rng.integers(0, 5, size=(k, n)))
                break
            except ValueError:
                continue
        base = exhaustive_b_profile(code)
        shift = int(rng.integers(1, n))
        rotated = LinearCode(f, np.roll(code.generator, shift, axis=1))
        assert exhaustive_b_profile(rotated) == base
        lam = int(rng.integers(1, 5))
        scaled = LinearCode(f, f.mul_arr(code.generator, lam))
        assert exhaustive_b_profile(scaled) == base


def test_d_n_short_circuit_ignores_cap():
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 6))
    assert min_b_distance(c, 6, cap=2) == 6  # no enumeration needed
    with pytest.raises(EnumerationCapError):
        min_b_distance(c, 2, cap=2)


def test_cap_env_override(monkeypatch):
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 5))
    monkeypatch.setenv("BSYM_CAP", "3")
    with pytest.raises(EnumerationCapError):
        exhaustive_b_profile(c)
    monkeypatch.setenv("BSYM_CAP", "100000")
    assert exhaustive_b_profile(c) == [2, 3, 4, 5, 5]


def test_enumeration_is_partition_independent():
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 5))
    total = (3 ** 4 - 1) // 2
    seen = {}
    for batch_size in (1, 7, 1 << 15):
        words = [tuple(map(int, w))
                 for blk in iter_codeword_batches(c, batch=batch_size) for w in blk]
        assert len(words) == total
        assert all(any(w) for w in words)
        seen[batch_size] = words
    assert seen[1] == seen[7] == seen[1 << 15]


def test_estimate_bounds_exact():
    f = GF(3)
    c = LinearCode(f, sum_zero_generator(3, 5))
    for b in range(1, 6):
        est = estimate_min_b_distance(c, b, samples=300, seed=0)
        exact = min_b_distance(c, b)
        assert est >= exact
    # dense sampling of a tiny code hits the optimum (frozen seed)
    assert estimate_min_b_distance(c, 3, samples=500, seed=0) == min_b_distance(c, 3)
    # no samples: minimum over the reduced generator rows only
    rows_only = min(b_weight(r, 2) for r in c.generator)
    assert estimate_min_b_distance(c, 2, samples=0) == rows_only
    # full space: echelon rows have weight 1, so the estimate is b
    full = LinearCode(f, np.eye(4, dtype=int))
    assert estimate_min_b_distance(full, 3, samples=0) == 3


# ----------------------------------------------------------------------
# profiles
# ----------------------------------------------------------------------

def test_profile_of_split_parity_code():
    f = GF(2)
    c = LinearCode.from_parity_check(f, np.array([[1, 1, 0, 0], [0, 0, 1, 1]]))
    p = profile(c)
    assert p.distances == (2, 3, 4, 4)
    # d_b = b + 1 sits one under the bound until it caps at n
    assert p.flags == ("AMDS", "AMDS", "MDS", "MDS")


def test_profile_dict_schema():
    f = GF(3)
    p = profile(LinearCode(f, sum_zero_generator(3, 4)))
    d = p.to_dict()
    assert d == {"schema": 1, "q": 3, "n": 4, "k": 3,
                 "d": [2, 3, 4, 4], "flags": ["MDS", "MDS", "MDS", "MDS"]}


def test_profile_validation_rejects_bad_data():
    with pytest.raises(ValueError):
        BSymbolProfile.from_distances(2, 4, 2, [2, 3, 4, 5])  # d_4 > n
    with pytest.raises(ValueError):
        BSymbolProfile.from_distances(2, 4, 2, [3, 2, 3, 4])  # decreasing
    with pytest.raises(ValueError):
        BSymbolProfile(2, 4, 2, (2, 3, 4, 4), ("MDS", "MDS", "MDS", "MDS"))  # wrong flags
    with pytest.raises(ValueError):
        BSymbolProfile.from_distances(2, 5, 2, [2, 2, 3, 4, 5])  # d_3 = 3 < b at b = 3? no: equals b; use a real violation
    # a window weight can never undercut b itself
    with pytest.raises(ValueError):
        BSymbolProfile.from_distances(2, 5, 2, [1, 1, 2, 3, 4])


def test_profile_validation_accepts_legal_profiles():
    p = BSymbolProfile.from_distances(2, 4, 2, [2, 3, 3, 4])
    assert p.flags == ("AMDS", "AMDS", "neither", "MDS")
    p2 = BSymbolProfile.from_distances(2, 4, 2, [1, 2, 3, 4])
    assert p2.flags == ("neither", "AMDS", "AMDS", "MDS")
