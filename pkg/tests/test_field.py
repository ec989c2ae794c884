import numpy as np
import pytest

from bsymbol import GF, Field, FieldError, field_from_order
from bsymbol.field import _find_irreducible, is_prime


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)]


def poly_eval(coeffs, x, p):
    """Evaluate a GF(p)[X] polynomial at x, plain integer arithmetic."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def test_prime_field_basics():
    f = GF(3)
    assert f.q == 3
    assert f.add(1, 2) == 0
    assert f.inv(2) == 2  # 2*2 = 4 = 1 mod 3
    assert f.sub(0, 1) == 2
    assert f.from_int(-1) == 2


def test_gf4_modulus_is_the_unique_irreducible_quadratic():
    f = GF(2, 2)
    assert f.modulus_poly == (1, 1, 1)  # x^2 + x + 1
    # oracle: x^2+x+1 is the only monic quadratic over GF(2) without roots
    candidates = [(c0, c1, 1) for c0 in range(2) for c1 in range(2)]
    rootless = [c for c in candidates if all(poly_eval(c, x, 2) for x in range(2))]
    assert rootless == [(1, 1, 1)]


def test_gf4_x_times_x():
    f = GF(2, 2)
    # 'x' encodes as 2; x*x reduces to x+1 = 3 under x^2+x+1
    assert f.mul(2, 2) == 3


def test_moduli_have_no_roots():
    # degree <= 3 irreducibility is equivalent to rootlessness
    for p, e in [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)]:
        f = GF(p, e)
        assert all(poly_eval(f.modulus_poly, x, p) != 0 for x in range(p))


def test_modulus_irreducible_by_factor_search():
    # exhaustive divisor scan for a degree-4 modulus
    f = GF(2, 4)
    mod = f.modulus_poly
    for d in (1, 2):
        for tail in range(2 ** d):
            g = [(tail >> j) & 1 for j in range(d)] + [1]
            # long division remainder
            r = list(mod)
            for i in range(len(r) - 1, d - 1, -1):
                if r[i]:
                    for j in range(d + 1):
                        r[i - d + j] ^= g[j]
            assert any(r[:d]), f"{g} divides the modulus"


def test_constructor_errors():
    with pytest.raises(FieldError):
        Field(4, 1)  # not prime
    with pytest.raises(FieldError):
        Field(2, 0)
    with pytest.raises(FieldError):
        Field(2, 17)  # 2^17 over the order cap
    with pytest.raises(FieldError):
        GF(2).inv(0)


def test_elements_in_order():
    assert list(GF(3).elements_in_order()) == [0, 1, 2]
    assert list(GF(2).elements_in_order()) == [0, 1]
    assert list(GF(2, 2).elements_in_order()) == [0, 1, 2, 3]
    for p, e in SMALL_FIELDS:
        elems = list(GF(p, e).elements_in_order())
        assert elems[0] == 0 and len(set(elems)) == p ** e


@pytest.mark.parametrize("p,e", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, e):
    f = GF(p, e)
    elems = list(f.elements_in_order())
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in elems:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in elems:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,e", [(2, 3), (2, 4), (3, 2), (5, 2)])
def test_table_mul_matches_polynomial_mul(p, e):
    f = GF(p, e)
    for a in range(f.q):
        for b in range(f.q):
            assert f.mul(a, b) == f.mul_direct(a, b)


def test_vector_ops_match_scalar_ops():
    rng = np.random.default_rng(7)
    for p, e in SMALL_FIELDS:
        f = GF(p, e)
        a = rng.integers(0, f.q, size=50)
        b = rng.integers(0, f.q, size=50)
        assert [f.add(int(x), int(y)) for x, y in zip(a, b)] == list(f.add_arr(a, b))
        assert [f.sub(int(x), int(y)) for x, y in zip(a, b)] == list(f.sub_arr(a, b))
        assert [f.mul(int(x), int(y)) for x, y in zip(a, b)] == list(f.mul_arr(a, b))
        assert [f.neg(int(x)) for x in a] == list(f.neg_arr(a))


def test_matmul_matches_naive():
    rng = np.random.default_rng(11)
    for p, e in [(3, 1), (2, 2), (5, 1)]:
        f = GF(p, e)
        A = rng.integers(0, f.q, size=(4, 3))
        B = rng.integers(0, f.q, size=(3, 5))
        C = f.matmul(A, B)
        for i in range(4):
            for j in range(5):
                acc = 0
                for l in range(3):
                    acc = f.add(acc, f.mul(int(A[i, l]), int(B[l, j])))
                assert C[i, j] == acc


def test_pow():
    f = GF(3, 2)
    for a in range(1, f.q):
        assert f.pow(a, f.q - 1) == 1
        assert f.pow(a, 0) == 1
        acc = 1
        for k in range(1, 5):
            acc = f.mul(acc, a)
            assert f.pow(a, k) == acc


def test_gf_factory_is_cached_and_deterministic():
    assert GF(2, 4) is GF(2, 4)
    assert Field(2, 4).modulus_poly == GF(2, 4).modulus_poly
    assert _find_irreducible(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1


def test_field_from_order():
    assert field_from_order(9) is GF(3, 2)
    assert field_from_order(7) is GF(7)
    assert field_from_order(16) is GF(2, 4)
    with pytest.raises(FieldError):
        field_from_order(12)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
