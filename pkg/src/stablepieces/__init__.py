"""Combinatorics of stable pieces in wonderful group compactifications:
exact Weyl group arithmetic, the twisted order on piece indices, closure
and cell-decomposition computations, and brute-force verification twins.
"""

from .cartan import CartanDatum, RootSystem, datum_from_type
from .pieces import PieceIndex
from .session import Session
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "DiagramAutomorphism",
    "PieceIndex",
    "RootSystem",
    "Session",
    "WeylElement",
    "WeylGroup",
    "__version__",
]
