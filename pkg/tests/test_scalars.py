import random
from fractions import Fraction as F

import pytest

from hopfgalois.scalars import (
    QuadUnit,
    balanced_residue,
    rational_sqrt,
    scalar_vp,
    vp,
)


def test_vp_examples():
    assert vp(2592, 3) == 4
    assert vp(1, 7) == 0
    assert vp(F(-288, 7), 3) == 2
    assert vp(0, 5) == float("inf")
    assert vp(F(1, 9), 3) == -2


def test_vp_requires_prime():
    with pytest.raises(ValueError):
        vp(10, 4)


def test_vp_multiplicativity_random():
    rng = random.Random(1)
    for _ in range(200):
        x = F(rng.randint(-500, 500) or 1, rng.randint(1, 60))
        y = F(rng.randint(-500, 500) or 1, rng.randint(1, 60))
        for p in (3, 5, 7):
            assert vp(x * y, p) == vp(x, p) + vp(y, p)
            if x + y != 0:
                lhs = vp(x + y, p)
                assert lhs >= min(vp(x, p), vp(y, p))
                if vp(x, p) != vp(y, p):
                    assert lhs == min(vp(x, p), vp(y, p))


def test_rational_sqrt():
    assert rational_sqrt(F(49, 4)) == F(7, 2)
    assert rational_sqrt(4) == 2
    assert rational_sqrt(7) is None
    assert rational_sqrt(-4) is None


def test_balanced_residue():
    assert balanced_residue(2, 3) == -1
    assert balanced_residue(F(1, 2), 3) == -1  # 1/2 = 2 mod 3
    assert balanced_residue(3, 9) == 3
    assert balanced_residue(7, 9) == -2
    assert balanced_residue(5, 2) == 1  # balanced range (-1, 1]
    with pytest.raises(ValueError):
        balanced_residue(F(1, 3), 9)


def test_quadunit_rejects_square():
    with pytest.raises(ValueError):
        QuadUnit(0, 1, 4)


def test_quadunit_norm_form_random():
    rng = random.Random(2)
    for a in (F(7), F(1, 13), F(-1, 41), F(-3, 13)):
        t = QuadUnit.gen(a)
        assert t * t == a
        for _ in range(50):
            x = F(rng.randint(-20, 20), rng.randint(1, 9))
            y = F(rng.randint(-20, 20), rng.randint(1, 9))
            v = QuadUnit(x, y, a)
            assert v * v.conj() == x * x - a * y * y
            if v:
                assert v * v.inverse() == 1


def test_quadunit_power_and_div():
    t = QuadUnit.gen(F(7))
    assert t**-2 == F(1, 7)
    assert (1 + t) / (1 + t) == 1
    assert 2 / (t) == 2 * t / 7


def test_scalar_vp_monomials():
    t = QuadUnit.gen(F(7))
    assert scalar_vp(F(18), 3) == 2
    assert scalar_vp(9 * t, 3) == 2
    with pytest.raises(ValueError):
        scalar_vp(1 + t, 3)
