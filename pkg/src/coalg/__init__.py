"""Exact-arithmetic toolkit for finite-dimensional coalgebras.

Subpackages cover exact linear algebra over Q and F_p, structure-constant
algebras and coalgebras, wedge products with dual-route cross-checking,
vanishing-space topologies and section algebras, comodules and cotensor
products, the polynomial finite-dual tower, and a seeded verification
suite exposed through the ``coalg`` command-line tool.
"""

from .fields import GF, QQ, field_from_tag
from .linalg import Matrix, Subspace

__all__ = ["GF", "QQ", "field_from_tag", "Matrix", "Subspace"]

__version__ = "0.1.0"
