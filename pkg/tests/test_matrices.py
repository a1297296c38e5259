import random
from fractions import Fraction as F

import pytest

from hopfgalois.matrices import Matrix
from hopfgalois.numberfield import NumberField
from hopfgalois.poly import MultiPoly, Poly
from hopfgalois.scalars import QuadUnit


def test_det_examples():
    assert Matrix.identity(4).det() == 1
    tri = Matrix([[F(1), 0, -1], [0, F(3), 0], [0, 0, F(3)]])
    assert tri.det() == 9
    d1, d2 = MultiPoly.gens(2)
    assert Matrix([[d1, d1], [d2, -d2]]).det() == -2 * d1 * d2
    with pytest.raises(ValueError):
        Matrix([[1, 2, 3]]).det()


def test_det_random_multiplicative():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = Matrix([[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)])
        b = Matrix([[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)])
        assert (a @ b).det() == a.det() * b.det()


def test_det_quadunit_matches_cofactor_structure():
    t = QuadUnit.gen(F(7))
    m = Matrix([[1 + t, t], [2 * t, 1 - t]])
    # (1+t)(1-t) - 2t*t = 1 - 7 - 14 = -20
    assert m.det() == -20


def test_inverse_roundtrip_random():
    rng = random.Random(7)
    done = 0
    while done < 20:
        n = rng.randint(1, 5)
        m = Matrix([[F(rng.randint(-6, 6)) for _ in range(n)] for _ in range(n)])
        if m.det() == 0:
            continue
        assert m @ m.inverse() == Matrix.identity(n)
        done += 1
    with pytest.raises(ZeroDivisionError):
        Matrix([[F(1), F(1)], [F(1), F(1)]]).inverse()


def test_nf_entry_determinant_uses_cofactor():
    nf = NumberField(Poly.from_ints([3, 0, 0, 1]))
    a = nf.gen()
    m = Matrix([[a, nf.one()], [nf.element([3]), a * a]])
    assert m.det() == a**3 - 3  # = -6


def test_kronecker():
    assert Matrix.identity(2).kronecker(Matrix.identity(3)) == Matrix.identity(6)
    a = Matrix([[F(1), F(2)], [F(3), F(4)]])
    assert a.kronecker(Matrix([[F(1)]])) == a
    k = a.kronecker(Matrix([[F(1), F(0)], [F(0), F(1)]]))
    assert k.nrows == 4 and k[0, 0] == 1 and k[0, 2] == 2 and k[1, 3] == 2


def test_charpoly():
    m = Matrix([[F(1), 0, -1], [0, F(3), 0], [0, 0, F(3)]])
    # (x-1)(x-3)^2 = x^3 - 7x^2 + 15x - 9
    assert m.charpoly() == [F(-9), F(15), F(-7), F(1)]
    t = QuadUnit.gen(F(7))
    m2 = Matrix([[t, 0 * t], [0 * t, -t]])
    c0, c1, c2 = m2.charpoly()
    assert c0 == -7 and c1 == 0 and c2 == 1


def test_stack_and_apply():
    a = Matrix([[F(1), F(2)]])
    b = Matrix([[F(3), F(4)]])
    assert a.stack(b).nrows == 2
    assert a.apply_to_vector((F(1), F(1))) == (F(3),)
