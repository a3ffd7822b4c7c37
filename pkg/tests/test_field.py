import pickle
import random

import numpy as np
import pytest

from crcodes.field import GF, MAX_FIELD_ORDER, canonical_modulus, prime_power

from helpers import oracle_ops


def _pp_oracle(q):
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, t = 0, q
    while t % p == 0:
        t //= p
        m += 1
    return (p, m) if t == 1 else None


def test_prime_power_matches_trial_division():
    for q in range(-3, 300):
        assert prime_power(q) == _pp_oracle(q), q


def test_canonical_moduli():
    # non-leading coefficients, low degree first
    assert canonical_modulus(2, 2) == (1, 1)
    assert canonical_modulus(2, 3) == (1, 1, 0)
    assert canonical_modulus(3, 2) == (1, 0)


def test_canonical_modulus_has_no_roots():
    # degree 2 and 3 polynomials are irreducible iff they have no roots
    for p, m in ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)):
        coeffs = canonical_modulus(p, m)
        for x in range(p):
            val = pow(x, m, p)
            for i, c in enumerate(coeffs):
                val = (val + c * pow(x, i, p)) % p
            assert val % p != 0


@pytest.mark.parametrize("q", [4, 8, 9])
def test_extension_tables_match_polynomial_oracle(q):
    f = GF.of(q)
    add, mul = oracle_ops(q)
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == add(a, b)
            assert f.mul(a, b) == mul(a, b)


def test_prime_field_ops():
    f = GF.of(7)
    for a in range(7):
        for b in range(7):
            assert f.add(a, b) == (a + b) % 7
            assert f.mul(a, b) == (a * b) % 7
            assert f.sub(a, b) == (a - b) % 7
        assert f.neg(a) == (-a) % 7


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 49])
def test_inverse_and_group_order(q):
    f = GF.of(q)
    for a in range(1, q):
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, q - 1) == 1
        assert f.div(f.mul(a, 3 % q or 1), 3 % q or 1) == a


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27])
def test_field_axioms_sampled(q):
    rng = random.Random(0)
    f = GF.of(q)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.sub(a, b) == f.add(a, f.neg(b))


def test_pow_negative_exponent():
    f = GF.of(9)
    for a in range(1, 9):
        assert f.pow(a, -1) == f.inv(a)
        assert f.pow(a, -3) == f.inv(f.pow(a, 3))
    with pytest.raises(ZeroDivisionError):
        f.pow(0, -1)


def test_sqrt_of_minus_one():
    assert GF.of(2).sqrt_of_minus_one() == 1
    assert GF.of(3).sqrt_of_minus_one() is None
    assert GF.of(4).sqrt_of_minus_one() == 1
    assert GF.of(5).sqrt_of_minus_one() == 2
    assert GF.of(7).sqrt_of_minus_one() is None
    assert GF.of(13).sqrt_of_minus_one() == 5
    f = GF.of(9)
    a = f.sqrt_of_minus_one()
    assert a is not None and f.mul(a, a) == f.neg(1)


def test_dot_requires_equal_lengths():
    f = GF.of(3)
    assert f.dot((1, 2, 1), (2, 2, 2)) == (2 + 4 + 2) % 3
    with pytest.raises(ValueError):
        f.dot((1, 2), (1, 2, 0))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_vector_ops_match_scalar_ops(q):
    rng = np.random.default_rng(0)
    f = GF.of(q)
    a = rng.integers(0, q, size=(6, 5))
    b = rng.integers(0, q, size=(6, 5))
    v = rng.integers(0, q, size=5)
    va = f.vadd(a, b)
    vn = f.vneg(a)
    vm = f.vmul(a, b)
    for i in range(6):
        for j in range(5):
            assert va[i, j] == f.add(int(a[i, j]), int(b[i, j]))
            assert vn[i, j] == f.neg(int(a[i, j]))
            assert vm[i, j] == f.mul(int(a[i, j]), int(b[i, j]))
    vd = f.vdot(a, v)
    for i in range(6):
        assert vd[i] == f.dot([int(x) for x in a[i]], [int(x) for x in v])


def test_vmul_scalar_broadcast():
    f = GF.of(4)
    row = np.array([0, 1, 2, 3])
    out = f.vmul(np.asarray(3), row)
    assert list(out) == [f.mul(3, int(x)) for x in row]


def test_of_caches_and_compares():
    assert GF.of(9) is GF.of(9)
    assert GF(9) == GF.of(9)
    assert hash(GF(9)) == hash(GF.of(9))
    assert GF.of(4) != GF.of(5)
    assert GF.of(4) != "GF(4)"


def test_pickle_round_trip_preserves_identity():
    f = GF.of(9)
    assert pickle.loads(pickle.dumps(f)) is f


@pytest.mark.parametrize("q", [-1, 0, 1, 6, 10, 12, 100])
def test_invalid_orders_rejected(q):
    with pytest.raises(ValueError):
        GF(q)


def test_order_cap():
    with pytest.raises(ValueError):
        GF(1 << 17)
    assert MAX_FIELD_ORDER == 1 << 16
