import random
from fractions import Fraction as F

import pytest

from hopfgalois.numberfield import NumberField
from hopfgalois.padic import (
    EisensteinField,
    NonResidueError,
    PrecisionError,
    find_integral_roots,
    hensel_sqrt_unit,
    lift_quadratic_factors,
    nf_sqrt,
    rational_reconstruct,
)
from hopfgalois.poly import Poly


def test_hensel_sqrt_examples():
    assert hensel_sqrt_unit(1, 7).value == 1
    assert hensel_sqrt_unit(4, 5, 10).value == 2
    r = hensel_sqrt_unit(7, 3, 5)
    assert r.value % 3 == 1 and (r.value * r.value - 7) % 3**5 == 0


def test_hensel_sqrt_all_residues():
    for p in (3, 5, 7, 11):
        for n in (4, 9):
            for c in range(1, p):
                if pow(c, (p - 1) // 2, p) == 1:
                    s = hensel_sqrt_unit(c, p, n)
                    assert (s.value * s.value - c) % p**n == 0
                    assert 1 <= s.value % p <= (p - 1) // 2
                else:
                    with pytest.raises(NonResidueError):
                        hensel_sqrt_unit(c, p, n)


def test_hensel_sqrt_preconditions():
    with pytest.raises(ValueError):
        hensel_sqrt_unit(5, 5)
    with pytest.raises(ValueError):
        hensel_sqrt_unit(3, 2)


def test_rational_reconstruct_examples():
    m = 5**20
    assert rational_reconstruct(1, m) == 1
    assert rational_reconstruct(pow(6, -1, m) * (-30) % m, m) == -5
    assert rational_reconstruct(pow(42, -1, m) % m, m, 10**4) == F(1, 42)


def test_rational_reconstruct_roundtrip():
    rng = random.Random(8)
    m = 3**40
    for _ in range(200):
        q = F(rng.randint(-10**6, 10**6), rng.choice([1, 2, 7, 11, 10**3 + 1]))
        image = q.numerator * pow(q.denominator, -1, m) % m
        assert rational_reconstruct(image, m) == q


def test_rational_reconstruct_failure():
    with pytest.raises(PrecisionError):
        rational_reconstruct(2, 25, 3)  # modulus too small for the bound
    with pytest.raises(PrecisionError):
        # no rational of height <= 2 is congruent to this residue mod 3^20
        rational_reconstruct(pow(7, -1, 3**20) * 5 % 3**20, 3**20, 2)


RADICAL = Poly.from_ints([3, 0, 0, 1])


def test_nf_sqrt_examples():
    nf = NumberField(RADICAL)
    a = nf.gen()
    c = (-3 * a * a) * F(-3)
    s = nf_sqrt(c, 3)
    assert s * s == c and s in (3 * a, -3 * a)
    # fixture pins the sign
    pinned = nf_sqrt(c, 3, fixture=-3 * a)
    assert pinned == -3 * a
    with pytest.raises(ValueError):
        nf_sqrt(c, 3, fixture=a)


def test_nf_sqrt_oddness_and_nonresidue():
    nf = NumberField(RADICAL)
    a = nf.gen()
    with pytest.raises(ValueError):
        nf_sqrt(a, 3)  # odd valuation
    with pytest.raises(NonResidueError):
        nf_sqrt(nf.element([2]), 3)  # 2 is not a square mod 3


def test_nf_sqrt_roundtrip_random_units():
    rng = random.Random(9)
    fields = [NumberField(RADICAL), NumberField(Poly.from_ints([30, 75, -10, -15, 0, 1]))]
    count = 0
    for nf in fields:
        p = 3 if nf.degree == 3 else 5
        while count < (50 if nf.degree == 3 else 100):
            u = nf.element([F(rng.randint(-9, 9)) for _ in range(nf.degree)])
            if u.is_zero():
                continue
            s = nf_sqrt(u * u, p)
            assert s in (u, -u)
            count += 1
        count = 0


def test_lift_quadratic_factors_p3():
    nf = NumberField(RADICAL)
    a = nf.gen()
    pairs = lift_quadratic_factors(RADICAL, 3)
    assert pairs == [(-a, a * a)]
    e2 = NumberField(Poly.from_ints([3, 0, 3, 1]))
    a2 = e2.gen()
    pairs = lift_quadratic_factors(Poly.from_ints([3, 0, 3, 1]), 3)
    assert pairs == [(-(a2 + 3), a2 * a2 + 3 * a2)]


@pytest.mark.parametrize(
    "g_ints",
    [
        [30, 75, -10, -15, 0, 1],
        [20, 50, -35, 0, 0, 1],
        [60, 150, 125, 50, 10, 1],
    ],
)
def test_lift_quadratic_factors_p5_multiplies_back(g_ints):
    g = Poly.from_ints(g_ints)
    nf = NumberField(g)
    a = nf.gen()
    one = nf.one()
    pairs = lift_quadratic_factors(g, 5)
    assert len(pairs) == 2
    prod = Poly([-a, one])
    for a_i, b_i in pairs:
        prod = prod * Poly([b_i, -a_i, one])
    assert prod == Poly([nf.element([c]) for c in g.coeffs])


def test_lift_quadratic_factors_fixture_mode():
    g = Poly.from_ints([30, 75, -10, -15, 0, 1])
    pairs = lift_quadratic_factors(g, 5)
    again = lift_quadratic_factors(g, 5, fixtures=pairs)
    assert again == pairs
    nf = NumberField(g)
    bad = [(pairs[0][0] + 1, pairs[0][1]), pairs[1]]
    with pytest.raises(ValueError):
        lift_quadratic_factors(g, 5, fixtures=bad)


def test_find_integral_roots_synthetic():
    # (y - a^2)(y - 2 a^2)(y - (a^2+3)) over the radical cubic field
    nf = NumberField(RADICAL)
    a2 = nf.gen() ** 2
    targets = [a2, 2 * a2, a2 + 3]
    poly = Poly([nf.one()])
    for r in targets:
        poly = poly * Poly([-r, nf.one()])
    field = EisensteinField(3, RADICAL, 30)
    roots = find_integral_roots(list(poly.coeffs), field, nf)
    assert sorted(map(str, roots)) == sorted(map(str, targets))


def test_eisenstein_field_division():
    field = EisensteinField(5, Poly.from_ints([30, 75, -10, -15, 0, 1]), 20)
    alpha = field.gen()
    x = field.from_int_coords((7, 3, 0, 1, 0)) * alpha**3
    back = x.div_alpha_power(3)
    assert (back * alpha**3 - x).is_zero_at_precision()
    u = field.from_int_coords((2, 1, 4, 0, 3))
    assert (u * u.unit_inverse() - field.one()).is_zero_at_precision()
