from math import comb

import pytest

from lgr_exc.certificate import FAIL, NECESSARY
from lgr_exc.diagrams import lambda_prime, strip
from lgr_exc.kclass import KClass, kclass_E, twist_kclass
from lgr_exc.staircase import (
    StairComplex,
    StairTerm,
    admissible_staircases,
    build_staircase,
    euler_class,
    replace_multiplicity,
    splice,
    verify_exactness_probe,
)
from lgr_exc.verify import eq54_complex


def test_example_331_shape():
    c = build_staircase((3, 3, 1), 3, 3, 5)
    assert len(c) == 5
    assert [t.position for t in c.terms] == [-4, -3, -2, -1, 0]
    assert [t.multiplicity for t in c.terms] == [1, 132, 110, 44, 1]
    assert [t.nu for t in c.terms[1:4]] == [5, 3, 2]
    assert c.terms[0].obj == ((4, 2), -1)
    assert c.terms[-1].obj == ((3, 3, 1), 0)


def test_single_row():
    for n in range(1, 6):
        c = build_staircase((n,), 1, n, n)
        assert len(c) == n + 2
        assert c.terms[0].obj == ((), -1)
        assert [t.obj for t in c.terms[1:-1]] == [(strip((j,)), 0) for j in range(n)]


def test_tautological_column():
    for n in range(1, 6):
        c = build_staircase((1,) * n, n, 1, n)
        assert len(c) == 3
        assert c.terms[0].obj == ((2,) * (n - 1), -1)
        assert c.terms[1].obj == ((), 0) and c.terms[1].multiplicity == comb(2 * n, n) - (comb(2 * n, n - 2) if n >= 2 else 0)


def test_leftmost_term_is_twisted_lambda_prime():
    for n in range(1, 5):
        for lam, h, w in admissible_staircases(n):
            c = build_staircase(lam, h, w, n)
            lp = strip(lambda_prime(lam, h, w))
            assert c.terms[0].kclass == twist_kclass(kclass_E(lp, h - 1, w + 1, n), -1)


def test_multiplicities_are_fundamental_dims():
    for n in range(1, 6):
        for lam, h, w in admissible_staircases(n):
            for t in build_staircase(lam, h, w, n).terms[1:-1]:
                nu = t.nu
                assert t.multiplicity == comb(2 * n, nu) - (comb(2 * n, nu - 2) if nu >= 2 else 0)


def test_needs_matching_block():
    with pytest.raises(ValueError):
        build_staircase((3, 3, 1), 3, 3, 4)


def test_probe_exactness_small():
    for n in range(1, 4):
        for lam, h, w in admissible_staircases(n):
            for tw in (0, 1):
                cert = verify_exactness_probe(build_staircase(lam, h, w, n, tw), jobs=1)
                assert cert.status == NECESSARY, cert.to_json()


def test_corrupted_complex_fails_with_witness():
    c = build_staircase((3,), 1, 3, 3)
    bad = replace_multiplicity(c, 1, c.terms[1].multiplicity + 1)
    cert = verify_exactness_probe(bad, jobs=1)
    assert cert.status == FAIL
    assert cert.witnesses and all(w["chi"] != 0 for w in cert.witnesses)


def test_splice_eq54():
    c = eq54_complex()
    assert len(c) == 7
    assert [t.position for t in c.terms] == list(range(-6, 1))
    assert c.terms[0].obj == ((2, 2), 0) and c.terms[-1].obj == ((2, 2), 2)
    assert [t.multiplicity for t in c.terms] == [1, 132, 44, 10, 110, 44, 1]


def test_splice_mismatch():
    c = build_staircase((2,), 1, 2, 2)
    with pytest.raises(ValueError, match="interface"):
        splice(c, c)


def test_splice_telescopes():
    # splicing drops the shared term, so the Euler class is a signed sum of the two pieces' classes
    left = build_staircase((3, 1, 1), 3, 3, 5, 1)
    right = build_staircase((2, 2), 4, 2, 5, 2)
    whole = splice(left, right)
    sign = -1 if len(right) % 2 else 1
    assert euler_class(whole) == euler_class(right) + euler_class(left).scale(sign)


def test_euler_class_single_term():
    x = KClass.of((1,), 2)
    c = StairComplex(2, (StairTerm(0, 3, x, "V (x) U*"),))
    assert euler_class(c) == x.scale(3)
    c = StairComplex(2, (StairTerm(-1, 3, x, "V (x) U*"),))
    assert euler_class(c) == x.scale(-3)


def test_complex_validation():
    x = KClass.of((), 2)
    with pytest.raises(ValueError):
        StairComplex(2, (StairTerm(0, 1, x, "O"), StairTerm(0, 1, x, "O")))
    with pytest.raises(ValueError):
        StairComplex(2, (StairTerm(0, 0, x, "O"),))
