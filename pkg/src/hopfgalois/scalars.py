"""Exact scalar arithmetic: p-adic valuations on Q and the formal quadratic
unit ring Q[t]/(t^2 - a).

Rationals are plain ``fractions.Fraction`` everywhere (always in lowest terms,
positive denominator).  ``INF`` stands for the valuation of 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

INF = float("inf")

RationalLike = int | Fraction


def vp(x, p: int) -> int | float:
    """p-adic valuation of a rational; +inf for 0."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def rational_sqrt(x) -> Fraction | None:
    """Exact square root of a rational, or None if it is not a perfect square."""
    x = Fraction(x)
    if x < 0:
        return None
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def balanced_residue(x, modulus: int) -> int:
    """Representative of x mod `modulus` in the balanced range (-m/2, m/2].

    x may be a Fraction whose denominator is coprime to the modulus.
    """
    x = Fraction(x)
    if x.denominator % modulus == 0 or (
        x.denominator != 1 and _gcd(x.denominator, modulus) != 1
    ):
        raise ValueError(f"denominator of {x} not invertible mod {modulus}")
    r = x.numerator * pow(x.denominator, -1, modulus) % modulus
    if 2 * r > modulus:
        r -= modulus
    return r


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class QuadUnit:
    """Element x + y*t of Q[t]/(t^2 - a) for a fixed non-square rational a.

    Only instantiated with a non-square a, so the ring is a field; division is
    total on nonzero elements.  Used for the unit constants t = sqrt(a) that
    enter uniformizer adjustments and must cancel from all final matrices.
    """

    __slots__ = ("x", "y", "a")

    def __init__(self, x, y, a):
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.a = Fraction(a)
        if rational_sqrt(self.a) is not None:
            raise ValueError(f"t^2 = {self.a} is a rational square; use Fraction")

    @classmethod
    def gen(cls, a) -> "QuadUnit":
        return cls(0, 1, a)

    def _coerce(self, other):
        if isinstance(other, QuadUnit):
            if other.a != self.a:
                raise ValueError("mixed quadratic-unit rings")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadUnit(other, 0, self.a)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadUnit(self.x + o.x, self.y + o.y, self.a)

    __radd__ = __add__

    def __neg__(self):
        return QuadUnit(-self.x, -self.y, self.a)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadUnit(self.x - o.x, self.y - o.y, self.a)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadUnit(
            self.x * o.x + self.a * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadUnit":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of Q[t]/(t^2-a)")
        return QuadUnit(self.x / n, -self.y / n, self.a)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadUnit(1, 0, self.a)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def conj(self) -> "QuadUnit":
        return QuadUnit(self.x, -self.y, self.a)

    def norm(self) -> Fraction:
        return self.x * self.x - self.a * self.y * self.y

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if isinstance(other, QuadUnit):
            return self.a == other.a and self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.a))

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def is_rational(self) -> bool:
        return self.y == 0

    def rational_part(self) -> Fraction:
        if self.y != 0:
            raise ValueError(f"{self} carries a t-component")
        return self.x

    def __repr__(self):
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}*t"
        return f"{self.x}{'+' if self.y > 0 else ''}{self.y}*t"


def as_rational(s) -> Fraction:
    """Collapse a scalar known to be rational (possibly a t-free QuadUnit)."""
    if isinstance(s, QuadUnit):
        return s.rational_part()
    return Fraction(s)


def scalar_vp(s, p: int) -> int | float:
    """Valuation of a rational or of a pure monomial c or c*t (v_p(t) = 0).

    Mixed x + y*t values are rejected here; callers that genuinely need them
    evaluate t through a Hensel square root (module padic).
    """
    if isinstance(s, QuadUnit):
        if s.x == 0:
            return vp(s.y, p)
        if s.y == 0:
            return vp(s.x, p)
        raise ValueError(f"mixed quadratic-unit valuation for {s}; use padic")
    return vp(s, p)
