"""Exact sparse vectors and coordinate-list matrices over the rationals.

Vectors are plain dicts ``index -> coefficient`` with no stored zeros.
Coefficients stay Python ints whenever possible and fall back to Fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Vector = dict[int, Scalar]


def normalize(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def exact_div(x: Scalar, d: int) -> Scalar:
    if isinstance(x, int) and x % d == 0:
        return x // d
    return normalize(Fraction(x) / d)


def vec_div(v: Mapping[int, Scalar], d: int) -> Vector:
    if d == 1:
        return dict(v)
    return {i: exact_div(c, d) for i, c in v.items()}


def vec_scale(v: Mapping[int, Scalar], c: Scalar) -> Vector:
    if c == 0:
        return {}
    return {i: normalize(x * c) for i, x in v.items()}


def vec_add(a: Mapping[int, Scalar], b: Mapping[int, Scalar], cb: Scalar = 1) -> Vector:
    out = dict(a)
    for i, x in b.items():
        y = out.get(i, 0) + cb * x
        if y:
            out[i] = normalize(y)
        else:
            out.pop(i, None)
    return out


def primitive_int_vector(v: Mapping[int, Scalar]) -> dict[int, int]:
    """Scale a rational vector to a primitive integer vector (positive leading entry)."""
    if not v:
        return {}
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    out = {i: int(x * den) for i, x in v.items()}
    g = 0
    for x in out.values():
        g = gcd(g, x)
    lead = out[min(out)]
    if lead < 0:
        g = -g
    return {i: x // g for i, x in out.items()}


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable coordinate-list matrix stored column-wise."""

    nrows: int
    ncols: int
    cols: tuple[tuple[tuple[int, Scalar], ...], ...]

    @classmethod
    def from_coo(cls, entries: Iterable[tuple[int, int, Scalar]], nrows: int, ncols: int) -> "SparseMatrix":
        acc: dict[int, dict[int, Scalar]] = {}
        for r, c, v in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            col = acc.setdefault(c, {})
            col[r] = col.get(r, 0) + v
        cols = []
        for c in range(ncols):
            col = acc.get(c, {})
            cols.append(tuple(sorted((r, normalize(v)) for r, v in col.items() if v)))
        return cls(nrows, ncols, tuple(cols))

    @classmethod
    def zero(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple(() for _ in range(n)))

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        for c, col in enumerate(self.cols):
            for r, v in col:
                yield r, c, v

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, v: Mapping[int, Scalar]) -> Vector:
        out: dict[int, Scalar] = {}
        for c, x in v.items():
            for r, m in self.cols[c]:
                out[r] = out.get(r, 0) + m * x
        return {r: normalize(y) for r, y in out.items() if y}

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_coo(((c, r, v) for r, c, v in self.entries()), self.ncols, self.nrows)

    def scaled(self, factor: Scalar) -> "SparseMatrix":
        if factor == 0:
            raise ValueError("scaling by zero destroys the operator")
        return SparseMatrix(self.nrows, self.ncols,
                            tuple(tuple((r, normalize(v * factor)) for r, v in col) for col in self.cols))

    def to_json(self) -> list[list]:
        out = []
        for r, c, v in self.entries():
            v = Fraction(v)
            out.append([r, c, v.numerator, v.denominator])
        return out
