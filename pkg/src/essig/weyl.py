"""Weyl's dimension formula for B_n and D_n in exact arithmetic."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .root_system import AlgebraType, Weight, WeightError, positive_roots


def rho(alg: AlgebraType) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * alg.rank
    for r in positive_roots(alg):
        for j, c in enumerate(r):
            out[j] += Fraction(c, 2)
    return tuple(out)


def weyl_dim(alg: AlgebraType, weight: Weight | Sequence[int]) -> int:
    """dim V(lambda) = prod over positive roots of (lambda+rho, a) / (rho, a).

    ``weight`` is either a Weight or a tuple of fundamental coefficients.
    The Euclidean form on epsilon coordinates is used; its scale cancels.
    """
    if not isinstance(weight, Weight):
        weight = Weight.from_fund(alg, weight)
    if not weight.is_dominant():
        raise WeightError(f"weight {weight.eps} is not dominant integral for {alg}")
    r = rho(alg)
    shifted = [a + b for a, b in zip(weight.eps, r)]
    num = Fraction(1)
    den = Fraction(1)
    for root in positive_roots(alg):
        num *= sum(c * x for c, x in zip(root, shifted))
        den *= sum(c * x for c, x in zip(root, r))
    dim = num / den
    if dim.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {dim}")
    return int(dim)
