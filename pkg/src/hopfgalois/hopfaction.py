"""From the Gram matrix of a Hopf action to a basis of the associated order
and the freeness test.

Pipeline: the Gram matrix G holds the values <w_i, gamma_j> of a Hopf algebra
basis W acting on a field basis B; rewriting each value in coordinates over B
stacks into the n^2 x n matrix of the action M; a reduced matrix D of M over
Z_(p) yields the associated-order basis v_i = sum_l (D^-1)_{li} w_l; an
integral element beta generates O_L freely over the order iff
v_p(det M_beta) equals the index v_p(det D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .hnf import HNFResult, hnf_reduce, is_p_integral
from .matrices import Matrix
from .numberfield import LElement, NFElement, NumberField
from .poly import MultiPoly
from .scalars import QuadUnit, as_rational, scalar_vp


@dataclass(frozen=True)
class HopfBasis:
    labels: tuple[str, ...]

    @classmethod
    def degree_p(cls, p: int) -> "HopfBasis":
        return cls(tuple(f"w{i + 1}" for i in range(p)))

    @classmethod
    def quadratic(cls) -> "HopfBasis":
        return cls(("eta1", "eta2"))

    @classmethod
    def induced(cls, p: int) -> "HopfBasis":
        return cls(
            tuple(
                f"w{i + 1}*eta{l + 1}" for i in range(p) for l in range(2)
            )
        )

    @property
    def size(self) -> int:
        return len(self.labels)


class PowerBasis:
    """Field basis {1, a, ..., a^(p-1)} of E; coordinatizes NFElements."""

    def __init__(self, nf: NumberField):
        self.nf = nf
        self.labels = tuple(
            "1" if i == 0 else (nf.name if i == 1 else f"{nf.name}^{i}")
            for i in range(nf.degree)
        )

    def coords_of(self, value: NFElement):
        if not isinstance(value, NFElement) or value.field != self.nf:
            raise ValueError("value does not live in this power basis")
        return value.coords


class TensorBasis:
    """Basis {1, z, a, a z, ..., a^(p-1), a^(p-1) z} of L = E(z)."""

    def __init__(self, nf: NumberField, zsq):
        self.nf = nf
        self.zsq = Fraction(zsq)
        labels = []
        for i in range(nf.degree):
            base = "1" if i == 0 else (nf.name if i == 1 else f"{nf.name}^{i}")
            labels.append(base)
            labels.append("z" if i == 0 else f"{base}*z")
        self.labels = tuple(labels)

    def coords_of(self, value: LElement):
        if not isinstance(value, LElement) or value.zsq != self.zsq:
            raise ValueError("value does not live in this tensor basis")
        return value.tensor_coords()


class GammaPowerBasis:
    """Basis {1, gamma, ..., gamma^(2p-1)}; coordinates are obtained from
    tensor coordinates through the inverse change-of-basis matrix."""

    def __init__(self, tensor: TensorBasis, change: Matrix):
        self.tensor = tensor
        self.change = change
        self.change_inv = change.inverse()
        n = change.nrows
        self.labels = ("1", "g") + tuple(f"g^{k}" for k in range(2, n))

    def coords_of(self, value: LElement):
        return self.change_inv.apply_to_vector(self.tensor.coords_of(value))


@dataclass(frozen=True)
class GramMatrix:
    basis_h: HopfBasis
    basis_l: object  # PowerBasis | TensorBasis | GammaPowerBasis
    entries: Matrix  # n x n matrix of field values

    @property
    def size(self) -> int:
        return self.entries.nrows

    def entry_coords(self, i: int, j: int):
        return self.basis_l.coords_of(self.entries[i, j])


@dataclass(frozen=True)
class ActionMatrix:
    basis_h: HopfBasis
    blocks: tuple[Matrix, ...]  # block j holds coordinates of <w_i, gamma_j>

    @property
    def size(self) -> int:
        return len(self.blocks)

    def stacked(self) -> Matrix:
        rows = []
        for block in self.blocks:
            rows.extend(block.rows)
        return Matrix(rows)


@dataclass(frozen=True)
class AssocOrderBasis:
    basis_h: HopfBasis
    coefficients: Matrix  # D^-1; column i = coordinates of v_i over W

    def rendered(self) -> tuple[str, ...]:
        out = []
        for j in range(self.coefficients.ncols):
            col = self.coefficients.column(j)
            denom = 1
            for c in col:
                denom = denom * Fraction(c).denominator // _gcd(
                    denom, Fraction(c).denominator
                )
            terms = []
            for coeff, label in zip(col, self.basis_h.labels):
                n = Fraction(coeff) * denom
                if n == 0:
                    continue
                if n == 1:
                    terms.append(label)
                elif n == -1:
                    terms.append(f"-{label}")
                else:
                    terms.append(f"{n}*{label}")
            body = "+".join(terms).replace("+-", "-")
            if denom == 1:
                out.append(body)
            elif len(terms) == 1:
                out.append(f"{body}/{denom}")
            else:
                out.append(f"({body})/{denom}")
        return tuple(out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def gram_to_action(gram: GramMatrix) -> ActionMatrix:
    """Stack the coordinate blocks M_j: row n(j-1)+k, column i holds the k-th
    coordinate of <w_i, gamma_j>.  Entries must be rational once expressed in
    the field basis (any leftover quadratic-unit part is an error)."""
    n = gram.size
    blocks = []
    for j in range(n):
        block = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            coords = gram.entry_coords(i, j)
            for k in range(n):
                block[k][i] = as_rational(coords[k])
        blocks.append(Matrix(block))
    return ActionMatrix(basis_h=gram.basis_h, blocks=tuple(blocks))


def change_basis_right(gram: GramMatrix, change: Matrix, new_basis) -> GramMatrix:
    """G(H_W, L_B') = G(H_W, L_B) P for the change-of-basis matrix P whose
    column j holds the B-coordinates of the j-th new basis vector."""
    n = gram.size
    if change.nrows != n or change.ncols != n:
        raise ValueError("change-of-basis matrix has wrong shape")
    entries = gram.entries @ change
    return GramMatrix(basis_h=gram.basis_h, basis_l=new_basis, entries=entries)


def assoc_order_basis(
    action: ActionMatrix, p: int
) -> tuple[AssocOrderBasis, HNFResult]:
    """Reduce the stacked action matrix and read the associated-order basis
    off the columns of D^-1; the re-expressed action matrix must be
    p-integral (defining property of the associated order)."""
    result = hnf_reduce(action.stacked(), p)
    dinv = result.basis_coefficients
    for block in action.blocks:
        if not is_p_integral(block @ dinv, p):
            raise ArithmeticError(
                "basis candidate fails integrality: reduction is inconsistent"
            )
    return AssocOrderBasis(basis_h=action.basis_h, coefficients=dinv), result


def beta_matrix(action: ActionMatrix, beta) -> Matrix:
    """M_beta = sum_j beta_j M_j for an element beta given in B-coordinates."""
    if len(beta) != action.size:
        raise ValueError("coordinate length mismatch")
    n = action.size
    acc = None
    for b, block in zip(beta, action.blocks):
        term = Matrix([[x * b for x in row] for row in block.rows])
        acc = term if acc is None else acc + term
    return acc if acc is not None else Matrix.zeros(n, n)


def det_valuation(det, p: int):
    """v_p of an exact determinant value (rational, or a pure monomial in the
    quadratic unit t; mixed values go through the Hensel evaluation)."""
    if isinstance(det, QuadUnit) and det.x != 0 and det.y != 0:
        from .padic import quadunit_vp

        lo, hi = quadunit_vp(det, p)
        if lo != hi:
            raise ArithmeticError(
                "valuation depends on the embedding of t; case data is wrong"
            )
        return lo
    return scalar_vp(det, p)


def is_free_generator(action: ActionMatrix, beta, index: int, p: int) -> bool:
    """beta (integral coordinates over the integral basis B) generates O_L
    freely over the associated order iff v_p(det M_beta) = index."""
    det = beta_matrix(action, beta).det()
    if not det:
        return False
    return det_valuation(det, p) == index


def find_generator(
    action: ActionMatrix,
    index: int,
    p: int,
    budget: int = 20000,
    candidates: tuple = (),
):
    """Search for a free generator: the all-ones vector first, then the
    per-case candidates, then small exhaustive coordinates.  Returns the
    first hit or None (freeness is then undecided by search)."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    n = action.size
    tried = 0
    seen = set()

    def attempt(vec):
        nonlocal tried
        vec = tuple(Fraction(v) for v in vec)
        if vec in seen or not any(vec):
            return None
        seen.add(vec)
        tried += 1
        if is_free_generator(action, vec, index, p):
            return vec
        return None

    hit = attempt((1,) * n)
    if hit:
        return hit
    for cand in candidates:
        if tried >= budget:
            return None
        hit = attempt(tuple(cand))
        if hit:
            return hit
    # structured fallbacks: sign-alternating, then all-ones with one slot tweaked
    hit = attempt(tuple((-1) ** i for i in range(n)))
    if hit:
        return hit
    for i in range(n):
        for d in (0, 2, -1, -2):
            if tried >= budget:
                return None
            vec = [1] * n
            vec[i] = d
            hit = attempt(tuple(vec))
            if hit:
                return hit
    for raw in product((0, 1, -1, 2, -2), repeat=n):
        if tried >= budget:
            return None
        hit = attempt(raw)
        if hit:
            return hit
    return None


SYMBOLIC_SIZE_LIMIT = 6


def symbolic_determinant(action: ActionMatrix) -> MultiPoly:
    """det M_beta with formal coordinates beta_1..beta_n, fully expanded;
    refused above 6x6 (use numeric evaluation instead)."""
    n = action.size
    if n > SYMBOLIC_SIZE_LIMIT:
        raise ValueError(
            f"symbolic determinant limited to n <= {SYMBOLIC_SIZE_LIMIT}"
        )
    gens = MultiPoly.gens(n)
    m = beta_matrix(action, gens)
    return m.det()
