import random

import pytest

from lgr_exc.diagrams import enumerate_block, includes, pad, subdiagrams, twist
from lgr_exc.kclass import (
    KClass,
    chi,
    chi_equivariant,
    euler_pairing,
    euler_pairing_equivariant,
    gram_matrix,
    kclass_E,
    kclass_F,
    rank,
    twist_kclass,
)


def test_pairing_examples():
    for n in range(1, 5):
        zero = (0,) * n
        assert euler_pairing(zero, zero, 0, n) == 1
        for t in range(1, n + 1):
            assert euler_pairing(zero, zero, t, n) == 0
        assert euler_pairing(pad((1,), n), pad((1,), n), 0, n) == 1


def test_equivariant_examples():
    n = 3
    for mu in enumerate_block(3, 2):
        assert euler_pairing_equivariant(mu, mu, n) == 1
    assert euler_pairing_equivariant((1, 0, 0), (2, 0, 0), n) == 0
    # Ext^1_G(S^2 U*, O) is one-dimensional
    assert euler_pairing_equivariant((2, 0, 0), (0, 0, 0), n) == -1


def test_equivariant_vanishes_off_inclusion():
    n = 3
    labels = [pad(l, n) for l in enumerate_block(3, 3)]
    for a in labels:
        for b in labels:
            if not includes(b, a):
                assert euler_pairing_equivariant(a, b, n) == 0


def test_gram_small():
    labels, m = gram_matrix(1, 1, 2)
    assert labels == [(0, 0), (1, 0)]
    assert m[0][0] == m[1][1] == 1 and m[0][1] == 0
    with pytest.raises(ValueError):
        gram_matrix(3, 3, 4)


def test_gram_unitriangular_small():
    for n in range(1, 4):
        for h in range(0, n + 1):
            for w in range(0, n + 2 - h):
                labels, m = gram_matrix(h, w, n)
                for i in range(len(labels)):
                    assert m[i][i] == 1
                    for j in range(i + 1, len(labels)):
                        # ordered by size: later labels are never inside earlier ones
                        assert m[i][j] == 0


def test_kclass_examples():
    assert kclass_E((), 0, 0, 3) == KClass.of((), 3)
    for n in range(1, 5):
        for t in range(1, n + 1):
            assert kclass_E((1,) * t, t, 1, n) == KClass.of((1,) * t, n)
    e2 = kclass_E((2,), 1, 2, 2)
    assert set(e2.terms) <= {(0, 0), (1, 0), (2, 0)}
    assert e2.terms[(2, 0)] == 1
    assert e2.terms == {(2, 0): 1, (0, 0): 1}


def test_defining_property():
    for n in range(1, 5):
        for h in range(0, n + 1):
            for w in range(0, n + 2 - h):
                for lam in enumerate_block(h, w):
                    e = kclass_E(lam, h, w, n)
                    assert e.terms[pad(lam, n)] == 1
                    for mu in subdiagrams(lam):
                        want = 1 if mu == lam else 0
                        assert chi_equivariant(e, KClass.of(mu, n)) == want


def test_kclass_F_rank_twist():
    assert kclass_F((), 0, 0, 3) == KClass.of((), 3)
    assert rank(KClass.of((1,), 4)) == 4
    f = kclass_F((2,), 1, 2, 2)
    assert f.terms == {(0, -2): 1, (0, 0): 1}
    assert rank(f) == rank(kclass_E((2,), 1, 2, 2))
    assert twist_kclass(KClass.of((1,), 2), 3) == KClass.of((4, 3), 2)


def test_special_ext5_class():
    e = kclass_E((2, 2), 2, 2, 5)
    assert chi(twist_kclass(e, 2), e) == -1


def test_twist_equivariance():
    rng = random.Random(3)
    for n in (2, 3):
        for _ in range(25):
            a = tuple(sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True))
            b = tuple(sorted((rng.randint(-2, 2) for _ in range(n)), reverse=True))
            t = rng.randint(-3, 3)
            assert euler_pairing(twist(a, t), twist(b, t), 0, n) == euler_pairing(a, b, 0, n)
            assert euler_pairing(a, b, t, n) == euler_pairing(twist(a, t), b, 0, n)


def test_serre_duality_small():
    rng = random.Random(11)
    for n in (2, 3):
        sign = (-1) ** (n * (n + 1) // 2)
        for _ in range(30):
            a = tuple(sorted((rng.randint(-3, 3) for _ in range(n)), reverse=True))
            b = tuple(sorted((rng.randint(-3, 3) for _ in range(n)), reverse=True))
            assert euler_pairing(a, b, 0, n) == sign * euler_pairing(b, twist(a, -(n + 1)), 0, n)


def test_bilinear():
    n = 3
    x = KClass(n, {(1, 0, 0): 2, (0, 0, 0): -1})
    y = KClass(n, {(2, 1, 0): 1, (1, 1, 0): 3})
    z = KClass(n, {(1, 1, 1): -2})
    assert chi(x + z, y) == chi(x, y) + chi(z, y)
    assert chi(x, y.scale(-3)) == -3 * chi(x, y)


def test_kclass_arithmetic():
    x = KClass(2, {(1, 0): 1})
    assert not (x - x)
    assert (x + x).terms == {(1, 0): 2}
    with pytest.raises(ValueError):
        KClass(2, {(0, 1): 1})
    with pytest.raises(ValueError):
        x + KClass(3, {})
