"""Arithmetic in E = Q[x]/(f) and in the quadratic extension L = E(z).

NFElement coordinates are over the power basis {1, a, ..., a^(p-1)} of a root
a of the monic defining polynomial f.  Coordinates are Fractions on the main
pipeline; the same code also runs with QuadUnit coordinates (needed once the
unit constant t enters uniformizer powers), where inversion is never used.

LElement is a pair u + v*z with z^2 a fixed rational, with multiplication
(u1+v1 z)(u2+v2 z) = (u1 u2 + v1 v2 z^2) + (u1 v2 + u2 v1) z and the
conjugation (u, v) -> (u, -v).
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly
from .scalars import QuadUnit, vp


class NumberField:
    """Q[x]/(f) for monic f with rational coefficients; precomputes the
    reduction table of powers a^deg .. a^(2 deg - 2)."""

    def __init__(self, modulus: Poly, name: str = "a"):
        if not modulus.is_monic():
            raise ValueError("defining polynomial must be monic")
        if modulus.degree < 1:
            raise ValueError("defining polynomial must be non-constant")
        self.modulus = Poly([Fraction(c) for c in modulus.coeffs])
        self.degree = modulus.degree
        self.name = name
        # a^deg = -(lower part); iterate to fill a^deg .. a^(2deg-2)
        n = self.degree
        table = []
        prev = [-Fraction(c) for c in self.modulus.coeffs[:-1]]
        table.append(tuple(prev))
        for _ in range(n - 2):
            nxt = [Fraction(0)] + prev[:-1]
            top = prev[-1]
            if top:
                for i in range(n):
                    nxt[i] += top * table[0][i]
            table.append(tuple(nxt))
            prev = nxt
        self.power_table = tuple(table)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.modulus!r})"

    def element(self, coords) -> "NFElement":
        coords = list(coords)
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NFElement(self, tuple(coords))

    def from_poly(self, poly: Poly) -> "NFElement":
        return self.element((poly % self.modulus).coeffs)

    def zero(self) -> "NFElement":
        return self.element([])

    def one(self) -> "NFElement":
        return self.element([Fraction(1)])

    def gen(self) -> "NFElement":
        return self.element([Fraction(0), Fraction(1)])

    def reduce_product(self, prod):
        """Reduce a raw convolution (length <= 2 deg - 1) into coordinates."""
        n = self.degree
        out = list(prod[:n]) + [Fraction(0)] * (n - len(prod[:n]))
        for k in range(n, len(prod)):
            c = prod[k]
            if c:
                row = self.power_table[k - n]
                for i in range(n):
                    out[i] = out[i] + c * row[i]
        return NFElement(self, tuple(out))


class NFElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(coords)

    def _check(self, other: "NFElement"):
        if self.field != other.field:
            raise ValueError("number-field modulus mismatch")

    def _coerce(self, other):
        if isinstance(other, NFElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QuadUnit)):
            zero = Fraction(0)
            return NFElement(
                self.field, (other,) + (zero,) * (self.field.degree - 1)
            )
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(
            self.field, tuple(a + b for a, b in zip(self.coords, o.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, NFElement):
            self._check(other)
            n = self.field.degree
            prod = [Fraction(0)] * (2 * n - 1)
            for i, a in enumerate(self.coords):
                if not a:
                    continue
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] = prod[i + j] + a * b
            return self.field.reduce_product(prod)
        if isinstance(other, (int, Fraction, QuadUnit)):
            return NFElement(self.field, tuple(a * other for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "NFElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def inverse(self) -> "NFElement":
        """Extended-gcd inverse in Q[x]/(f); requires Fraction coordinates."""
        if self.is_zero():
            raise ZeroDivisionError("inverting 0 in number field")
        a = Poly(self.coords)
        b = self.field.modulus
        # extended Euclid: s*a + t*b = r
        r0, r1 = a, b
        s0, s1 = Poly([Fraction(1)]), Poly([])
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError(
                "non-invertible element: defining polynomial is reducible"
            )
        inv = s0 * (1 / Fraction(r0.coeffs[0]))
        return self.field.from_poly(inv)

    def __truediv__(self, other):
        if isinstance(other, NFElement):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadUnit)):
            o = self._coerce(other)
            return self.coords == o.coords
        if isinstance(other, NFElement):
            return self.field == other.field and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coords))

    def eisenstein_vp(self, p: int) -> int | float:
        """Exact normalized valuation v_E for an Eisenstein defining polynomial:
        min over i of (deg * v_p(coord_i) + i); the terms are distinct mod deg,
        so no cancellation can occur."""
        n = self.field.degree
        vals = [
            n * vp(c, p) + i for i, c in enumerate(self.coords) if c
        ]
        return min(vals) if vals else float("inf")

    def __repr__(self):
        name = self.field.name
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*{name}")
            else:
                terms.append(f"{c}*{name}^{i}")
        return " + ".join(terms) if terms else "0"


class LElement:
    """u + v*z with u, v in E and z^2 = zsq (a fixed rational)."""

    __slots__ = ("u", "v", "zsq")

    def __init__(self, u: NFElement, v: NFElement, zsq):
        if u.field != v.field:
            raise ValueError("number-field modulus mismatch")
        self.u = u
        self.v = v
        self.zsq = Fraction(zsq)

    @classmethod
    def from_e(cls, u: NFElement, zsq) -> "LElement":
        return cls(u, u.field.zero(), zsq)

    @classmethod
    def z(cls, field: NumberField, zsq) -> "LElement":
        return cls(field.zero(), field.one(), zsq)

    def _check(self, other: "LElement"):
        if self.zsq != other.zsq:
            raise ValueError("z^2 mismatch")
        if self.u.field != other.u.field:
            raise ValueError("number-field modulus mismatch")

    def _coerce(self, other):
        if isinstance(other, LElement):
            self._check(other)
            return other
        if isinstance(other, NFElement):
            return LElement.from_e(other, self.zsq)
        if isinstance(other, (int, Fraction, QuadUnit)):
            f = self.u.field
            return LElement.from_e(f.element([other]), self.zsq)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LElement(self.u + o.u, self.v + o.v, self.zsq)

    __radd__ = __add__

    def __neg__(self):
        return LElement(-self.u, -self.v, self.zsq)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadUnit)):
            return LElement(self.u * other, self.v * other, self.zsq)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        u = self.u * o.u + (self.v * o.v) * self.zsq
        v = self.u * o.v + o.u * self.v
        return LElement(u, v, self.zsq)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LElement":
        f = self.u.field
        out = LElement.from_e(f.one(), self.zsq)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def conj(self) -> "LElement":
        return LElement(self.u, -self.v, self.zsq)

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash((self.u, self.v, self.zsq))

    def tensor_coords(self):
        """Coordinates in the tensor basis {1, z, a, a z, ..., a^(p-1), a^(p-1) z}."""
        out = []
        for cu, cv in zip(self.u.coords, self.v.coords):
            out.append(cu)
            out.append(cv)
        return tuple(out)

    @classmethod
    def from_tensor_coords(cls, field: NumberField, zsq, coords) -> "LElement":
        n = field.degree
        if len(coords) != 2 * n:
            raise ValueError("tensor coordinate length mismatch")
        u = field.element([coords[2 * i] for i in range(n)])
        v = field.element([coords[2 * i + 1] for i in range(n)])
        return cls(u, v, zsq)

    def __repr__(self):
        return f"({self.u}) + ({self.v})*z"
