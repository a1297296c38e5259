import random
from fractions import Fraction as F

import pytest

from hopfgalois.hnf import (
    RankDeficiencyError,
    hnf_reduce,
    hnf_reduce_z,
    index_of,
    is_p_integral,
    lattice_equal,
)
from hopfgalois.matrices import Matrix
from hopfgalois.scalars import vp


def _m(rows):
    return Matrix([[F(x) for x in row] for row in rows])


RADICAL_ACTION = _m(
    [[1, 0, 2], [0, 0, 0], [0, 0, 0], [0, 0, 0], [1, -3, -1], [0, 0, 0],
     [0, 0, 0], [0, 0, 0], [1, 3, -1]]
)


def test_reduce_printed_examples():
    res = hnf_reduce(RADICAL_ACTION, 3)
    assert res.matrix == _m([[1, 0, -1], [0, 3, 0], [0, 0, 3]])
    assert res.pivots == (0, 1, 1) and res.index == 2 and res.scale == 1
    singular = _m(
        [[1, 0, 2], [0, 0, 0], [0, 0, 0], [0, 3, -3], [1, 9, -1], [0, 2, 0],
         [0, -3, 9], [0, -30, 0], [1, -9, -1]]
    )
    assert hnf_reduce(singular, 3).matrix == _m([[1, 0, -1], [0, 1, 0], [0, 0, 3]])
    stacked_identity = _m([[1, 0], [0, 1], [0, 0], [0, 0]])
    assert hnf_reduce(stacked_identity, 5).matrix == Matrix.identity(2)


def test_transform_certificate():
    res = hnf_reduce(RADICAL_ACTION, 3)
    um = res.transform @ RADICAL_ACTION
    assert Matrix(um.rows[:3]) == res.matrix
    assert not any(any(row) for row in um.rows[3:])
    # the transformation is invertible over Z_(3)
    assert vp(res.transform.det(), 3) == 0


def test_rank_deficiency_and_bad_denominator():
    with pytest.raises(RankDeficiencyError):
        hnf_reduce(_m([[1, 1], [1, 1], [0, 0]]), 3)
    with pytest.raises(RankDeficiencyError):
        hnf_reduce(_m([[1, 2]]), 3)


def test_scale_factored_out():
    res = hnf_reduce(Matrix([[F(1, 3), 0], [0, F(2)], [0, 0]]), 3)
    assert res.scale == F(1, 3)
    assert res.matrix == Matrix([[F(1, 3), 0], [0, F(1)]])


def test_idempotence_and_left_invariance_500():
    rng = random.Random(10)
    for trial in range(500):
        p = rng.choice((3, 5))
        n = rng.randint(1, 6)
        m_rows = n + rng.randint(0, 3)
        mat = None
        while mat is None:
            cand = Matrix(
                [[F(rng.randint(-9, 9)) for _ in range(n)] for _ in range(m_rows)]
            )
            try:
                res = hnf_reduce(cand, p)
                mat = cand
            except (RankDeficiencyError, ValueError):
                continue
        # idempotence
        padded = Matrix(res.matrix.rows + [[F(0)] * n for _ in range(m_rows - n)])
        again = hnf_reduce(padded, p)
        assert again.matrix == res.matrix
        # left invariance under a random unimodular-over-Z_(p) transformation
        u = Matrix.identity(m_rows)
        for _ in range(6):
            kind = rng.randint(0, 2)
            i, j = rng.randrange(m_rows), rng.randrange(m_rows)
            rows = [list(r) for r in u.rows]
            if kind == 0 and i != j:
                rows[i], rows[j] = rows[j], rows[i]
            elif kind == 1:
                unit = F(rng.choice([1, -1, 2, -2]))
                if vp(unit, p) == 0:
                    rows[i] = [unit * x for x in rows[i]]
            elif i != j:
                c = F(rng.randint(-3, 3))
                rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
            u = Matrix(rows)
        transformed = hnf_reduce(u @ mat, p)
        assert transformed.matrix == res.matrix, f"trial {trial}"
        assert transformed.index == res.index


def test_index_well_defined_against_other_reduced_matrices():
    rng = random.Random(11)
    for _ in range(50):
        p = 3
        n = rng.randint(2, 4)
        mat = Matrix([[F(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n + 1)])
        try:
            res = hnf_reduce(mat, p)
        except RankDeficiencyError:
            continue
        # another valid reduced matrix: scale a row by a p-unit
        other_rows = [list(r) for r in res.matrix.rows]
        other_rows[rng.randrange(n)] = [2 * x for x in other_rows[rng.randrange(n)]]
        other = Matrix(other_rows)
        if other.det() == 0:
            continue
        if lattice_equal(res.matrix, other, p):
            assert index_of(other, p) == res.index
            # determinants differ by a p-unit
            assert vp(other.det(), p) == vp(res.matrix.det(), p)


def test_lattice_equal_examples():
    assert lattice_equal(_m([[1, 2], [0, 3]]), _m([[1, -1], [0, 3]]), 3)
    assert not lattice_equal(_m([[1, 0], [0, 3]]), Matrix.identity(2), 3)
    d = _m([[1, 0, -1], [0, 3, 0], [0, 0, 3]])
    scaled = Matrix([[2 * x for x in d.rows[0]]] + d.rows[1:])
    assert lattice_equal(d, scaled, 3)
    with pytest.raises(ValueError):
        lattice_equal(_m([[1, 1], [1, 1]]), Matrix.identity(2), 3)


def test_index_examples():
    assert index_of(_m([[1, 0, 0], [0, 3, 0], [0, 0, 3]]), 3) == 2
    assert index_of(Matrix.identity(5), 3) == 0
    with pytest.raises(ValueError):
        index_of(_m([[0, 0], [0, 0]]), 3)


def test_integer_mode_quadratic_example():
    d = hnf_reduce_z(_m([[1, 1], [0, 0], [0, 0], [1, -1]]))
    assert d == _m([[1, 1], [0, 2]])
    # over Z_(p) with p odd the same matrix reduces to the identity
    assert hnf_reduce(_m([[1, 1], [0, 0], [0, 0], [1, -1]]), 3).matrix == Matrix.identity(2)


def test_is_p_integral():
    assert is_p_integral(_m([[1, F(1, 2)], [3, 0]]), 3)
    assert not is_p_integral(Matrix([[F(1, 3)]]), 3)
