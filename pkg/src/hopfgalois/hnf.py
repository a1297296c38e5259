"""Hermite normal form over Z localized at p, reduced-matrix extraction and
the structure index v_p(det D).

Over Z_(p) every rational with p-free denominator is a unit, so elimination
pivots on minimal p-adic valuation, pivots are normalized to exact powers of
p, and entries above a pivot p^k are reduced to balanced residues in
(-p^k/2, p^k/2] (entries above a pivot 1 become 0).  A plain integer-HNF mode
is included for the base ring Z (quadratic-extension example only).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix
from .scalars import balanced_residue, vp

INF = float("inf")


class RankDeficiencyError(ValueError):
    """The stacked action matrix has deficient column rank."""


@dataclass(frozen=True)
class HNFResult:
    matrix: Matrix  # D: n x n, upper triangular, diagonal p^k
    transform: Matrix  # U: m x m with (U @ M) = D stacked on zeros
    pivots: tuple[int, ...]  # exponents k of the diagonal entries p^k
    index: int  # v_p(det D) = sum of pivots
    scale: Fraction  # power of p factored out to make the input p-integral

    @property
    def basis_coefficients(self) -> Matrix:
        """D^-1; column i holds the coordinates of the i-th basis vector."""
        return self.matrix.inverse()


def _entry_vp(x, p: int):
    return vp(x, p)


def hnf_reduce(m: Matrix, p: int) -> HNFResult:
    """Reduced matrix of a full-column-rank matrix over Z_(p).

    Row operations are invertible over Z_(p): swaps, multiplication by p-adic
    units, and addition of Z_(p)-multiples of other rows.  A power of p is
    factored out first if some entry has p in its denominator.
    """
    nrows, ncols = m.nrows, m.ncols
    if nrows < ncols:
        raise RankDeficiencyError("fewer rows than columns")
    worst = 0
    for row in m.rows:
        for x in row:
            v = _entry_vp(x, p)
            if v is not INF and v < worst:
                worst = v
    scale = Fraction(p) ** worst  # factored-out power of p (1 if already integral)
    mult = Fraction(p) ** (-worst)
    a = [[Fraction(x) * mult for x in row] for row in m.rows]
    u = [
        [Fraction(1) if i == j else Fraction(0) for j in range(nrows)]
        for i in range(nrows)
    ]

    def row_axpy(dst: int, src: int, c: Fraction):
        if not c:
            return
        a[dst] = [x - c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - c * y for x, y in zip(u[dst], u[src])]

    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        best, best_v = None, INF
        for i in range(r, nrows):
            x = a[i][col]
            if x:
                v = _entry_vp(x, p)
                if v < best_v:
                    best, best_v = i, v
        if best is None:
            raise RankDeficiencyError(f"column {col} has no pivot")
        if best_v < 0:
            raise ValueError("entry not p-integral after scaling")
        a[r], a[best] = a[best], a[r]
        u[r], u[best] = u[best], u[r]
        k = int(best_v)
        unit = a[r][col] / Fraction(p) ** k
        inv = 1 / unit
        a[r] = [x * inv for x in a[r]]
        u[r] = [x * inv for x in u[r]]
        for i in range(r + 1, nrows):
            x = a[i][col]
            if x:
                row_axpy(i, r, x / Fraction(p) ** k)
        pivots.append(k)
        r += 1
    # reduce entries above each pivot to balanced residues (0 above pivot 1)
    for col in range(ncols):
        k = pivots[col]
        pk = p**k
        for i in range(col):
            x = a[i][col]
            if not x:
                continue
            if k == 0:
                q = x
            else:
                q = (x - balanced_residue(x, pk)) / pk
            row_axpy(i, col, q)
    d = Matrix([a[i][:ncols] for i in range(ncols)])
    for i in range(ncols, nrows):
        assert not any(a[i]), "nonzero row below the reduced block"
    return HNFResult(
        matrix=d.scale(scale),
        transform=Matrix(u),
        pivots=tuple(pivots),
        index=sum(pivots),
        scale=scale,
    )


def hnf_reduce_z(m: Matrix) -> Matrix:
    """Row Hermite normal form over Z (positive pivots, balanced residues
    above); only needed to replay the quadratic example over Z."""
    nrows, ncols = m.nrows, m.ncols
    a = [[int(Fraction(x)) for x in row] for row in m.rows]
    if any(Fraction(x).denominator != 1 for row in m.rows for x in row):
        raise ValueError("integer matrix required")
    r = 0
    cols = []
    for col in range(ncols):
        while True:
            nonzero = [i for i in range(r, nrows) if a[i][col]]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: abs(a[i][col]))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][col]:
                    q = a[i][col] // a[r][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if [i for i in range(r, nrows) if a[i][col]]:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
            cols.append((r, col))
            r += 1
    for r0, col in cols:
        piv = a[r0][col]
        for i in range(r0):
            x = a[i][col]
            res = balanced_residue(x, piv)
            q = (x - res) // piv
            a[i] = [y - q * z for y, z in zip(a[i], a[r0])]
    return Matrix([[Fraction(x) for x in row] for row in a[:r]])


def is_p_integral(m: Matrix, p: int) -> bool:
    return all(
        _entry_vp(x, p) >= 0 for row in m.rows for x in row
    )


def lattice_equal(d1: Matrix, d2: Matrix, p: int) -> bool:
    """True iff the rows of d1 and d2 span the same Z_(p)-lattice
    (equivalently, the columns of their inverses do)."""
    if d1.nrows != d1.ncols or d2.nrows != d2.ncols:
        raise ValueError("square matrices required")
    if d1.nrows != d2.nrows:
        return False
    try:
        q1 = d1 @ d2.inverse()
        q2 = d2 @ d1.inverse()
    except ZeroDivisionError as exc:
        raise ValueError("singular matrix") from exc
    return is_p_integral(q1, p) and is_p_integral(q2, p)


def index_of(d: Matrix, p: int) -> int:
    """v_p(det D) of a reduced matrix."""
    det = d.det()
    if det == 0:
        raise ValueError("singular matrix")
    v = vp(det, p)
    return int(v)
