"""Finite-precision p-adic arithmetic in Z_p and in totally ramified
extensions Q_p[x]/(g) with g Eisenstein, plus the bridges back to exact
arithmetic: Hensel square roots, root finding for the quadratic-factor
resolvent, and rational reconstruction.

Elements of the Eisenstein extension are stored as Q_p-coordinate vectors
over the power basis of a root of g (matching O_E = Z_p[alpha]), each known
modulo p^prec.  The normalized valuation is v(alpha) = 1, v(p) = deg(g);
since g is Eisenstein, v(sum c_i alpha^i) = min_i (deg * v_p(c_i) + i)
exactly (the candidate term valuations are pairwise distinct mod deg).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .numberfield import NFElement, NumberField
from .poly import Poly
from .scalars import QuadUnit, is_prime, vp


class PrecisionError(ArithmeticError):
    """Raised when a computation cannot be completed at the working precision."""


class NonResidueError(ArithmeticError):
    """Square root of a non-residue requested (signals wrong case data)."""


START_PRECISION = 20
MAX_PRECISION = 320


@dataclass(frozen=True)
class PadicInt:
    """Element of Z_p known modulo p^precision."""

    p: int
    value: int
    precision: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p**self.precision)

    def _meet(self, other: "PadicInt") -> int:
        if self.p != other.p:
            raise ValueError("prime mismatch")
        return min(self.precision, other.precision)

    def __add__(self, other):
        if isinstance(other, int):
            other = PadicInt(self.p, other, self.precision)
        n = self._meet(other)
        return PadicInt(self.p, self.value + other.value, n)

    def __mul__(self, other):
        if isinstance(other, int):
            other = PadicInt(self.p, other, self.precision)
        n = self._meet(other)
        return PadicInt(self.p, self.value * other.value, n)

    def __neg__(self):
        return PadicInt(self.p, -self.value, self.precision)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PadicInt) else -PadicInt(self.p, other, self.precision))

    def unit_inverse(self) -> "PadicInt":
        if self.value % self.p == 0:
            raise ZeroDivisionError("not a p-adic unit")
        m = self.p**self.precision
        return PadicInt(self.p, pow(self.value, -1, m), self.precision)

    def valuation(self) -> int | float:
        if self.value == 0:
            return float("inf")
        v, x = 0, self.value
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v


def hensel_sqrt_unit(c, p: int, precision: int = START_PRECISION) -> PadicInt:
    """Square root of a p-adic unit square, normalized so that the residue
    mod p lies in {1, ..., (p-1)/2}.  Newton doubles precision each step."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    c = Fraction(c)
    if vp(c, p) != 0:
        raise ValueError(f"{c} is not a p-adic unit")
    c0 = c.numerator * pow(c.denominator, -1, p**precision) % p**precision
    r0 = None
    for r in range(1, (p - 1) // 2 + 1):
        if (r * r - c0) % p == 0:
            r0 = r
            break
    if r0 is None:
        raise NonResidueError(f"{c} is not a square mod {p}")
    k = 1
    s = r0
    inv2 = pow(2, -1, p**precision)
    while k < precision:
        k = min(2 * k, precision)
        m = p**k
        s = (s + c0 * pow(s, -1, m)) * inv2 % m
    if s % p > (p - 1) // 2:
        s = (-s) % p**precision
    assert (s * s - c0) % p**precision == 0
    return PadicInt(p, s, precision)


def rational_reconstruct(x, modulus=None, bound=None) -> Fraction:
    """Unique rational n/d with |n|, |d| <= bound, gcd(d, p) = 1 and
    n * d^(-1) = x mod p^N, found by half-extended Euclid on (p^N, x)."""
    if isinstance(x, PadicInt):
        bound = modulus if bound is None else bound
        modulus = x.p**x.precision
        x = x.value
    if modulus is None:
        raise ValueError("modulus required")
    if bound is None:
        bound = isqrt(modulus // 2)
    if modulus <= 2 * bound * bound:
        raise PrecisionError(
            f"modulus {modulus} too small for height bound {bound}"
        )
    x %= modulus
    if x == 0:
        return Fraction(0)
    r0, r1 = modulus, x
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 == 0 or abs(t1) > bound:
        raise PrecisionError(f"no rational of height <= {bound} matches")
    if t1 < 0:
        r1, t1 = -r1, -t1
    from math import gcd

    if gcd(r1, t1) != 1 or gcd(t1, modulus) != 1:
        raise PrecisionError("reconstruction yielded a non-reduced candidate")
    return Fraction(r1, t1)


class EisensteinField:
    """Mod-p^prec arithmetic in Z_p[x]/(g) for monic integer Eisenstein g."""

    def __init__(self, p: int, g: Poly, precision: int):
        if not is_prime(p):
            raise ValueError("p must be prime")
        coeffs = [Fraction(c) for c in g.coeffs]
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("modulus must have integer coefficients")
        ints = [int(c) for c in coeffs]
        if ints[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(c % p for c in ints[:-1]) or ints[0] % (p * p) == 0:
            raise ValueError("modulus must be Eisenstein at p")
        self.p = p
        self.degree = g.degree
        self.modulus_ints = tuple(ints)
        self.precision = precision
        self.pn = p**precision
        nf = NumberField(g)
        self.power_table = tuple(
            tuple(int(c) for c in row) for row in nf.power_table
        )
        # W = alpha^deg / p, a unit of the ring of integers
        self.w_coords = tuple(-c // p for c in ints[:-1])

    def zero(self) -> "EisElt":
        return EisElt(self, (0,) * self.degree, self.precision)

    def one(self) -> "EisElt":
        return EisElt(self, (1,) + (0,) * (self.degree - 1), self.precision)

    def gen(self) -> "EisElt":
        return EisElt(
            self, (0, 1) + (0,) * (self.degree - 2), self.precision
        )

    def from_int_coords(self, coords, precision=None) -> "EisElt":
        precision = self.precision if precision is None else precision
        return EisElt(self, tuple(coords), precision)

    def from_nf(self, x: NFElement, precision=None) -> "EisElt":
        """Embed an exact element with p-integral coordinates."""
        precision = self.precision if precision is None else precision
        m = self.p**precision
        coords = []
        for c in x.coords:
            c = Fraction(c)
            if c.denominator % self.p == 0:
                raise ValueError("coordinate has p in its denominator")
            coords.append(c.numerator * pow(c.denominator, -1, m) % m)
        return EisElt(self, tuple(coords), precision)

    def to_nf(self, x: "EisElt", nf: NumberField, bound=None) -> NFElement:
        """Coordinate-wise rational reconstruction back to the number field."""
        m = self.p**x.prec
        coords = [rational_reconstruct(c, m, bound) for c in x.coords]
        return nf.element(coords)


class EisElt:
    __slots__ = ("field", "coords", "prec")

    def __init__(self, field: EisensteinField, coords, prec: int):
        if prec < 1:
            raise PrecisionError("precision exhausted")
        m = field.p**prec
        self.field = field
        self.coords = tuple(c % m for c in coords)
        self.prec = prec

    def _meet(self, other: "EisElt") -> int:
        if self.field is not other.field:
            raise ValueError("field mismatch")
        return min(self.prec, other.prec)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.from_int_coords(
                (other,) + (0,) * (self.field.degree - 1), self.prec
            )
        n = self._meet(other)
        return EisElt(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords)), n
        )

    def __neg__(self):
        return EisElt(self.field, tuple(-a for a in self.coords), self.prec)

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return EisElt(
                self.field, tuple(a * other for a in self.coords), self.prec
            )
        n = self._meet(other)
        deg = self.field.degree
        m = self.field.p**n
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                row = self.field.power_table[k - deg]
                for i in range(deg):
                    out[i] += c * row[i]
        return EisElt(self.field, tuple(c % m for c in out), n)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "EisElt":
        out = EisElt(
            self.field, (1,) + (0,) * (self.field.degree - 1), self.prec
        )
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def valuation(self) -> int:
        """Normalized valuation, capped at degree*prec when indistinguishable
        from 0 at the working precision."""
        deg = self.field.degree
        p = self.field.p
        cap = deg * self.prec
        best = cap
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            v = 0
            while c % p == 0 and v < self.prec:
                c //= p
                v += 1
            best = min(best, deg * v + i)
        return best

    def is_zero_at_precision(self) -> bool:
        return all(c == 0 for c in self.coords)

    def unit_inverse(self) -> "EisElt":
        """Newton inverse; the element must be a unit (valuation 0)."""
        p, deg = self.field.p, self.field.degree
        if self.coords[0] % p == 0:
            raise ZeroDivisionError("not a unit of the ring of integers")
        # inverse mod p: g = x^deg mod p, so invert the power series
        c0_inv = pow(self.coords[0], -1, p)
        inv = [c0_inv] + [0] * (deg - 1)
        for i in range(1, deg):
            acc = 0
            for j in range(1, i + 1):
                acc += self.coords[j] * inv[i - j]
            inv[i] = (-c0_inv * acc) % p
        v = EisElt(self.field, tuple(inv), 1)
        k = 1
        while k < self.prec:
            k = min(2 * k, self.prec)
            v = EisElt(self.field, v.coords, k)
            x = EisElt(self.field, self.coords, k)
            v = v * (EisElt(self.field, (2,) + (0,) * (deg - 1), k) - x * v)
        return v

    def div_alpha_power(self, k: int) -> "EisElt":
        """Exact division by alpha^k (requires valuation >= k); loses
        ceil(k/deg)-ish p-digits of precision."""
        if k == 0:
            return self
        deg = self.field.degree
        p = self.field.p
        m, r = divmod(k, deg)
        x = self
        drop = m
        if r:
            alpha = self.field.gen()
            x = x * alpha ** (deg - r)
            drop += 1
        if drop:
            w = EisElt(self.field, self.field.w_coords, x.prec)
            x = x * w.unit_inverse() ** drop
            q = p**drop
            if any(c % q for c in x.coords):
                raise PrecisionError("inexact division by alpha power")
            x = EisElt(self.field, tuple(c // q for c in x.coords), x.prec - drop)
        return x

    def sqrt_unit(self) -> "EisElt":
        """Hensel square root of a unit; residue must be a square mod p."""
        p, deg = self.field.p, self.field.degree
        if self.coords[0] % p == 0:
            raise ValueError("sqrt_unit needs a unit argument")
        r0 = None
        for r in range(1, (p - 1) // 2 + 1):
            if (r * r - self.coords[0]) % p == 0:
                r0 = r
                break
        if r0 is None:
            raise NonResidueError("unit part is not a square in the residue field")
        s = EisElt(self.field, (r0,) + (0,) * (deg - 1), self.prec)
        inv2 = pow(2, -1, p**self.prec)
        # Newton: s <- (s + x/s) / 2, quadratic convergence on v(s^2 - x)
        for _ in range(2 * self.prec.bit_length() + 8):
            err = s * s - self
            if err.is_zero_at_precision():
                break
            s_new = (s + self * s.unit_inverse()) * inv2
            if s_new.coords == s.coords:
                break
            s = s_new
        else:
            raise PrecisionError("square-root Newton iteration stalled")
        return s

    def __repr__(self):
        return f"EisElt({list(self.coords)} mod {self.field.p}^{self.prec})"


def _poly_eval_eis(coeffs: list[EisElt], x: EisElt) -> EisElt:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def _newton_polygon_integer_slopes(coeffs_nf: list[NFElement], p: int) -> list[int]:
    """Non-negative integer slopes of the lower Newton polygon of a monic
    polynomial over E (slopes give candidate valuations of integral roots)."""
    pts = []
    for i, c in enumerate(coeffs_nf):
        v = c.eisenstein_vp(p)
        if v != float("inf"):
            pts.append((i, v))
    # lower convex hull from the left; slope of each edge is -(root valuation)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = set()
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        num, den = y1 - y2, x2 - x1
        if num >= 0 and num % den == 0:
            slopes.add(num // den)
    return sorted(slopes)


def _newton_lift(
    coeffs: list[EisElt], x: EisElt, target: int, deg: int
) -> EisElt | None:
    """Quadratically convergent lift of a simple root once the criterion
    v(f(x)) > 2 v(f'(x)) holds; None when it does not (cluster unresolved)."""
    der = [c * i for i, c in enumerate(coeffs)][1:]
    last_vf = -1
    for _ in range(64):
        fx = _poly_eval_eis(coeffs, x)
        if fx.is_zero_at_precision():
            return x
        vf = fx.valuation()
        if vf >= target:
            return x
        dfx = _poly_eval_eis(der, x)
        kappa = dfx.valuation()
        if kappa >= deg * (dfx.prec - 1) or vf <= 2 * kappa or vf <= last_vf:
            return None
        last_vf = vf
        try:
            step = fx.div_alpha_power(kappa)
            unit = dfx.div_alpha_power(kappa)
            x = x - step * unit.unit_inverse()
        except (PrecisionError, ZeroDivisionError):
            return None
    return None


def _shift_poly_nf(coeffs: list[NFElement], c: NFElement) -> list[NFElement]:
    """Coefficients of f(c + w) as a polynomial in w (exact, Horner form)."""
    zero = 0 * coeffs[0]
    out: list[NFElement] = []
    for coeff in reversed(coeffs):
        # out <- out * (c + w) + coeff
        n = len(out)
        nxt = []
        for i in range(n + 1):
            term = zero
            if i < n:
                term = term + out[i] * c
            if i > 0:
                term = term + out[i - 1]
            nxt.append(term)
        nxt[0] = nxt[0] + coeff
        out = nxt
    return out


def find_integral_roots(
    coeffs_nf: list[NFElement],
    field: EisensteinField,
    nf: NumberField,
    _depth: int = 0,
) -> list[NFElement]:
    """Exactly verified roots in E (integral over Z_p) of a polynomial with
    integral coefficients: recursive Newton-polygon refinement.

    For each non-negative integer slope m the substitution y = alpha^m w
    (content stripped) makes the candidate roots units, so they sit over the
    <= deg roots of the residue polynomial mod alpha; each residue root is
    Newton lifted when already simple enough, and otherwise the exact shift
    f(r0 + w) is recursed on.  Rational reconstruction plus exact evaluation
    gates every returned root.
    """
    if _depth > 60:
        raise PrecisionError("root clusters did not separate (depth cap)")
    p = field.p
    alpha_nf = nf.gen()
    deg = field.degree
    target = deg * (field.precision - 4)
    found: list[NFElement] = []

    def residue_of(x: NFElement) -> int:
        c0 = Fraction(x.coords[0])
        return c0.numerator * pow(c0.denominator, -1, p) % p

    for m in _newton_polygon_integer_slopes(coeffs_nf, p):
        scaled = [c * alpha_nf ** (i * m) for i, c in enumerate(coeffs_nf)]
        shift = min(c.eisenstein_vp(p) for c in scaled if not c.is_zero())
        inv = alpha_nf.inverse() ** int(shift)
        scaled = [c * inv for c in scaled]
        residue_poly = [residue_of(c) if not c.is_zero() else 0 for c in scaled]
        embedded = [field.from_nf(c) for c in scaled]
        for r0 in range(1, p):
            if sum(c * pow(r0, i, p) for i, c in enumerate(residue_poly)) % p:
                continue
            w_candidates: list[NFElement] = []
            cand = field.from_int_coords((r0,) + (0,) * (deg - 1))
            lifted = _newton_lift(embedded, cand, target, deg)
            if lifted is not None:
                try:
                    w_candidates.append(field.to_nf(lifted, nf))
                except PrecisionError:
                    lifted = None
            if lifted is None:
                # unresolved cluster: shift exactly and refine recursively
                shifted = _shift_poly_nf(scaled, nf.element([r0]))
                for sub in find_integral_roots(shifted, field, nf, _depth + 1):
                    if sub.eisenstein_vp(p) >= 1:
                        w_candidates.append(sub + r0)
            for w in w_candidates:
                if not _poly_eval_eis_nf(scaled, w).is_zero():
                    continue
                root = alpha_nf**m * w
                if root not in found:
                    found.append(root)
    return [r for r in found if _poly_eval_eis_nf(coeffs_nf, r).is_zero()]


def nf_vp(x: NFElement, p: int) -> int | float:
    return x.eisenstein_vp(p)


def nf_sqrt(
    c: NFElement,
    p: int,
    fixture: NFElement | None = None,
    start_precision: int = START_PRECISION,
) -> NFElement:
    """Exact square root in E of an element of even valuation whose unit part
    is a square, via Hensel lifting and rational reconstruction, verified by
    exact multiplication.  Sign follows the fixture when given, otherwise the
    first nonzero coordinate is made positive."""
    if c.is_zero():
        raise ValueError("square root of zero requested")
    nf = c.field
    v = c.eisenstein_vp(p)
    if v % 2:
        raise ValueError(f"valuation {v} is odd; no square root in E")
    alpha = nf.gen()
    unit = c * alpha.inverse() ** v
    g = Poly(nf.modulus.coeffs)
    prec = start_precision
    while prec <= MAX_PRECISION:
        field = EisensteinField(p, g, prec)
        s_unit_p = field.from_nf(unit).sqrt_unit()
        try:
            s_unit = field.to_nf(s_unit_p, nf)
        except PrecisionError:
            prec *= 2
            continue
        s = s_unit * alpha ** (v // 2)
        if s * s == c:
            break
        prec *= 2
    else:
        raise PrecisionError(
            f"square-root reconstruction failed up to precision {MAX_PRECISION}"
        )
    if fixture is not None:
        if s == fixture:
            return s
        if -s == fixture:
            return fixture
        raise ValueError("computed square root does not match the pinned value")
    for coord in s.coords:
        if coord:
            return -s if coord < 0 else s
    return s


def lift_quadratic_factors(
    g: Poly,
    p: int,
    fixtures: list[tuple[NFElement, NFElement]] | None = None,
    start_precision: int = 2 * START_PRECISION,
):
    """Exact quadratics x^2 - A_i x + B_i with g = (x - alpha) * prod P_i over
    E = Q[x]/(g), verified by exact polynomial multiplication.

    Degree 3 is plain division.  Degree 5 locates B_1 + B_2 as a root in E of
    the cubic resolvent of the quartic cofactor (p-adic descent + rational
    reconstruction), then solves the Vieta system.  `fixtures` (exact (A_i,
    B_i) pairs) short-circuits the search and is verified the same way.
    """
    nf = NumberField(g)
    alpha = nf.gen()
    one = nf.one()
    # cofactor g / (x - alpha) by synthetic division
    cof: list[NFElement] = []
    acc = nf.zero()
    for c in reversed(g.coeffs):
        acc = acc * alpha + c
        cof.append(acc)
    assert cof[-1].is_zero(), "alpha is not a root of g"
    f1 = list(reversed(cof[:-1]))  # degree p-1, monic

    def verify(pairs):
        prod = Poly([one])
        for a_i, b_i in pairs:
            prod = prod * Poly([b_i, -a_i, one])
        prod = prod * Poly([-alpha, one])
        target = Poly([nf.element([c]) for c in g.coeffs])
        return prod == target

    if fixtures is not None:
        if not verify(fixtures):
            raise ValueError("pinned quadratic factors fail exact verification")
        return list(fixtures)

    if g.degree == 3:
        pairs = [(-f1[1], f1[0])]
        if not verify(pairs):
            raise ValueError("cubic cofactor verification failed")
        return pairs

    if g.degree != 5:
        raise ValueError("only degrees 3 and 5 are supported")

    c0, c1, c2, c3 = f1[0], f1[1], f1[2], f1[3]
    # cubic resolvent with roots B_1 + B_2 over the three pairings
    res = [
        -(c0 * c3 * c3 + c1 * c1 - 4 * c0 * c2),
        c1 * c3 - 4 * c0,
        -c2,
        one,
    ]
    prec = start_precision
    while prec <= MAX_PRECISION:
        field = EisensteinField(p, g, prec)
        try:
            taus = find_integral_roots(res, field, nf)
        except PrecisionError:
            prec *= 2
            continue
        for tau in taus:
            try:
                disc = tau * tau - 4 * c0
                s = nf_sqrt(disc, p)
            except (ValueError, NonResidueError, PrecisionError):
                continue
            b1 = (tau + s) * Fraction(1, 2)
            b2 = (tau - s) * Fraction(1, 2)
            if b1 == b2:
                continue
            a1 = (c3 * b1 - c1) / (b2 - b1)
            a2 = -c3 - a1
            pairs = [(a1, b1), (a2, b2)]
            if verify(pairs):
                return pairs
        prec *= 2
    raise PrecisionError(
        f"quadratic-factor lifting failed up to precision {MAX_PRECISION}"
    )


def _poly_eval_eis_nf(coeffs: list[NFElement], x: NFElement) -> NFElement:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def quadunit_vp(q: QuadUnit, p: int, precision: int = START_PRECISION * 4):
    """Valuation of x + y*t evaluated through the Hensel square root t of a
    (a must be a unit square mod p, as it always is for the catalog).

    Returns the pair of valuations for the two embeddings t -> +/-sqrt(a);
    they coincide whenever v_p(x) != v_p(y).
    """
    if q.x == 0 and q.y == 0:
        return (float("inf"), float("inf"))
    if q.y == 0:
        return (vp(q.x, p), vp(q.x, p))
    if q.x == 0:
        return (vp(q.y, p), vp(q.y, p))
    v_x, v_y = vp(q.x, p), vp(q.y, p)
    if v_x != v_y:
        v = min(v_x, v_y)
        return (v, v)
    # unit parts may cancel: evaluate t numerically, raising precision until
    # a nonzero residue appears (the value is exactly 0 only if x^2 = a y^2,
    # impossible for non-square a)
    x_u = q.x / Fraction(p) ** v_x
    y_u = q.y / Fraction(p) ** v_x
    while precision <= MAX_PRECISION:
        t = hensel_sqrt_unit(q.a, p, precision)
        m = p**precision
        x_img = x_u.numerator * pow(x_u.denominator, -1, m) % m
        y_img = y_u.numerator * pow(y_u.denominator, -1, m) % m
        out = []
        for sign in (1, -1):
            val = (x_img + sign * t.value * y_img) % m
            if val == 0:
                out = None
                break
            v, x = 0, val
            while x % p == 0:
                x //= p
                v += 1
            out.append(v_x + v)
        if out is not None:
            return tuple(out)
        precision *= 2
    raise PrecisionError("mixed quadratic-unit value vanishes at max precision")
