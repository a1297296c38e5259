"""Dense exact matrices over duck-typed scalars.

Determinants use fraction-free Bareiss elimination when the scalars support
exact division (Fraction, QuadUnit) and cofactor expansion otherwise
(NFElement, MultiPoly), capped at small sizes as the pipeline never exceeds
10x10.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly
from .scalars import QuadUnit

COFACTOR_LIMIT = 10


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int, zero=Fraction(0)) -> "Matrix":
        return cls([[zero] * n for _ in range(m)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def copy(self) -> "Matrix":
        return Matrix([list(r) for r in self.rows])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def scale(self, c) -> "Matrix":
        return Matrix([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = other.ncols
            out = []
            for r in self.rows:
                row = []
                for j in range(cols):
                    acc = None
                    for k, a in enumerate(r):
                        term = a * other.rows[k][j]
                        acc = term if acc is None else acc + term
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return NotImplemented

    def apply_to_vector(self, vec):
        if self.ncols != len(vec):
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = None
            for a, x in zip(r, vec):
                term = a * x
                acc = term if acc is None else acc + term
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.rows)])

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        sample = self.rows[0][0]
        if isinstance(sample, (int, Fraction, QuadUnit)):
            return self._det_bareiss()
        if n > COFACTOR_LIMIT:
            raise ValueError(f"cofactor determinant capped at {COFACTOR_LIMIT}")
        return self._det_cofactor()

    def _det_bareiss(self):
        n = self.nrows
        a = [list(r) for r in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if not a[k][k]:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0) * prev
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    a[i][j] = num / prev
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d

    def _det_cofactor(self):
        """Expansion over column subsets (dynamic programming on minors)."""
        n = self.nrows
        rows = self.rows
        memo: dict = {}

        def minor(r, cols):
            # determinant of rows r.. using column set `cols` (frozen tuple)
            if len(cols) == 1:
                return rows[r][cols[0]]
            key = (r, cols)
            if key in memo:
                return memo[key]
            acc = None
            for idx, c in enumerate(cols):
                entry = rows[r][c]
                if not entry:
                    continue
                sub = minor(r + 1, cols[:idx] + cols[idx + 1 :])
                term = entry * sub
                if idx % 2:
                    term = -term
                acc = term if acc is None else acc + term
            if acc is None:
                z = rows[r][cols[0]]
                acc = z - z  # typed zero
            memo[key] = acc
            return acc

        return minor(0, tuple(range(n)))

    def inverse(self) -> "Matrix":
        """Gauss-Jordan over a field (Fraction or QuadUnit entries)."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        one = _one_like(a[0][0]) if n else Fraction(1)
        zero = one - one
        inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = None
            for i in range(col, n):
                if a[i][col]:
                    piv = i
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            pivot = a[col][col]
            pinv = _inv_like(pivot)
            a[col] = [x * pinv for x in a[col]]
            inv[col] = [x * pinv for x in inv[col]]
            for i in range(n):
                if i == col or not a[i][col]:
                    continue
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[col])]
                inv[i] = [x - c * y for x, y in zip(inv[i], inv[col])]
        return Matrix(inv)

    def kronecker(self, other: "Matrix") -> "Matrix":
        """Kronecker product; left factor indexes the outer (major) blocks."""
        if not isinstance(other, Matrix):
            raise TypeError("kronecker expects a Matrix")
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                row = []
                for a in r1:
                    for b in r2:
                        row.append(a * b)
                out.append(row)
        return Matrix(out)

    def stack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return Matrix(self.rows + other.rows)

    def charpoly(self):
        """Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) by
        the Faddeev-LeVerrier recurrence; scalars must support division by
        integers."""
        if self.nrows != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        one = _one_like(self.rows[0][0]) if n else Fraction(1)
        zero = one - one
        coeffs = [zero] * (n + 1)
        coeffs[n] = one
        m = Matrix.zeros(n, n, zero)
        ident = Matrix.identity(n, one, zero)
        c_prev = one
        for k in range(1, n + 1):
            m = self @ (m + ident.scale(c_prev))
            tr = zero
            for i in range(n):
                tr = tr + m.rows[i][i]
            c_prev = tr * Fraction(-1, k)
            coeffs[n - k] = c_prev
        return coeffs

    def __repr__(self):
        body = "\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix(\n {body})"


def _one_like(sample):
    if isinstance(sample, QuadUnit):
        return QuadUnit(1, 0, sample.a)
    if isinstance(sample, MultiPoly):
        return MultiPoly.const(sample.nvars, 1)
    if hasattr(sample, "field"):
        return sample.field.one()
    return Fraction(1)


def _inv_like(x):
    if isinstance(x, QuadUnit):
        return x.inverse()
    if hasattr(x, "inverse"):
        return x.inverse()
    return 1 / Fraction(x)
