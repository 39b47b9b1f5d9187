"""Exact enumeration and verification of Genocchi-family combinatorics.

Dellac configurations, (normalized) Dumont permutations, Dellac histories,
q-Gandhi polynomials and the statistic-preserving bijections between them.
"""

from genocchi.errors import IntegrityError

__version__ = "0.1.0"

__all__ = ["IntegrityError", "__version__"]
