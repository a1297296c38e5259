"""Exact computation of associated orders and freeness of rings of integers
for the Hopf Galois structures of dihedral degree-2p extensions of Q_p and
their degree-p subextensions (full case data for p in {3, 5})."""

from .scalars import QuadUnit, vp
from .poly import MultiPoly, Poly
from .numberfield import LElement, NFElement, NumberField
from .matrices import Matrix

__version__ = "0.1.0"

__all__ = [
    "QuadUnit",
    "vp",
    "Poly",
    "MultiPoly",
    "NumberField",
    "NFElement",
    "LElement",
    "Matrix",
    "__version__",
]
