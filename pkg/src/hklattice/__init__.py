"""Exact integer and rational lattice computations for a family of
hyperkaehler fourfolds: the rank-23 even lattice of signature (3, 20) on
degree-2 cohomology, the induced lattice in degree-4 cohomology with its
five-torsion quotient, Hodge-class lattices attached to a polarization,
a minimal-cohomology-class criterion, the fixed space of a deformation
operator equation, cubic-fourfold models, and blow-up correspondences.

Everything is exact: Python integers and ``fractions.Fraction`` throughout,
no floating point. The hot kernels (Hermite/Smith reduction, fraction-free
elimination) have a compiled twin selected at import; see
``hklattice.kernels``.
"""

from .kernels import IMPLEMENTATION

__version__ = "0.1.0"

__all__ = ["IMPLEMENTATION", "__version__"]
