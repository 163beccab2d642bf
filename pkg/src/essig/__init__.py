"""Essential signatures for highest-weight modules of types B_n and D_n."""
from __future__ import annotations

from .root_system import AlgebraType, B, D, Signature, Weight, positive_roots
from .weyl import weyl_dim

__all__ = ["AlgebraType", "B", "D", "Signature", "Weight", "positive_roots", "weyl_dim"]
__version__ = "0.1.0"
