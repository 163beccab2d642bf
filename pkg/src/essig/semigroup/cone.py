"""Integer points of the lifting cone for D_n -> D_{n+1} and their decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class ConePoint:
    """k_1..k_{n+1} and the exponents s-_i, s+_i of the roots e_i -/+ e_{n+1}."""
    k: tuple[int, ...]
    sminus: tuple[int, ...]
    splus: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.sminus)
        if len(self.splus) != n or len(self.k) != n + 1:
            raise ValueError("cone point needs n+1 weight entries and n entries per sign")

    @property
    def n(self) -> int:
        return len(self.sminus)

    @classmethod
    def zero(cls, n: int) -> "ConePoint":
        return cls((0,) * (n + 1), (0,) * n, (0,) * n)

    @classmethod
    def unit(cls, n: int, k=(), sminus=(), splus=()) -> "ConePoint":
        """Point with 1 at the given 1-based positions."""
        def vec(length, idx):
            v = [0] * length
            for i in idx:
                v[i - 1] += 1
            return tuple(v)
        return cls(vec(n + 1, k), vec(n, sminus), vec(n, splus))

    def _zip(self, other, sign):
        return ConePoint(tuple(a + sign * b for a, b in zip(self.k, other.k)),
                         tuple(a + sign * b for a, b in zip(self.sminus, other.sminus)),
                         tuple(a + sign * b for a, b in zip(self.splus, other.splus)))

    def __add__(self, other: "ConePoint") -> "ConePoint":
        return self._zip(other, 1)

    def __sub__(self, other: "ConePoint") -> "ConePoint":
        return self._zip(other, -1)

    def is_zero(self) -> bool:
        return not any(self.k) and not any(self.sminus) and not any(self.splus)

    def svec(self) -> tuple[int, ...]:
        return self.sminus + self.splus


def cone_violations(pt: ConePoint) -> list[str]:
    """Names of the cone inequalities (and sign conditions) that pt violates."""
    n = pt.n
    k = (None,) + pt.k
    sm = (None,) + pt.sminus + (0,)
    sp = (None,) + pt.splus + (0,)
    bad = []
    if min(pt.k + pt.sminus + pt.splus) < 0:
        bad.append("nonnegative")
    for i in range(1, n):
        if sp[i] > k[i]:
            bad.append(f"s+_{i} <= k_{i}")
        if sm[i] + sp[i] - sp[i + 1] > k[i]:
            bad.append(f"s-_{i} + s+_{i} - s+_{i + 1} <= k_{i}")
    if sp[n - 1] + sm[n - 1] + sm[n] > k[n - 1] + k[n]:
        bad.append(f"s+_{n - 1} + s-_{n - 1} + s-_{n} <= k_{n - 1} + k_{n}")
    if sm[n] > k[n]:
        bad.append(f"s-_{n} <= k_{n}")
    if sp[n] > k[n + 1]:
        bad.append(f"s+_{n} <= k_{n + 1}")
    return bad


def in_cone(pt: ConePoint) -> bool:
    return not cone_violations(pt)


def cone_integer_generators(n: int) -> list[tuple[str, ConePoint]]:
    """The 4n labelled lattice vectors generating the integer points of the cone."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    u = lambda **kw: ConePoint.unit(n, **kw)
    gens = [(f"1.{i}", u(k=[i])) for i in range(1, n + 2)]
    gens += [(f"2.{i}", u(k=[i], splus=[i])) for i in range(1, n)]
    gens += [(f"3.{i}", u(k=[i], sminus=[i])) for i in range(1, n + 1)]
    gens += [(f"4.{i}", u(k=[i], splus=[i], sminus=[i - 1])) for i in range(2, n)]
    gens.append(("5", u(k=[n + 1], splus=[n])))
    gens.append(("6", u(k=[n + 1, n], splus=[n], sminus=[n - 1])))
    return gens


def cone_decompose(pt: ConePoint) -> list[tuple[str, ConePoint]]:
    """Peel generator vectors off pt greedily, top index first.

    Every intermediate point is checked to stay in the cone; a failure means
    the input was outside the cone or the generating list is incomplete.
    """
    bad = cone_violations(pt)
    if bad:
        raise ConeError(f"point outside the cone: {', '.join(bad)}")
    n = pt.n
    gens = dict(cone_integer_generators(n))
    out: list[tuple[str, ConePoint]] = []
    cur = pt

    def take(label: str) -> None:
        nonlocal cur
        cur = cur - gens[label]
        bad = cone_violations(cur)
        if bad:
            raise ConeError(f"subtracting vector {label} left the cone: {', '.join(bad)}")
        out.append((label, gens[label]))

    def tight(i: int) -> bool:
        # s-_{i-1} + s+_{i-1} - s+_i = k_{i-1}
        return cur.sminus[i - 2] + cur.splus[i - 2] - cur.splus[i - 1] == cur.k[i - 2]

    while cur.sminus[n - 1] > 0:
        take(f"3.{n}")
    while cur.splus[n - 1] > 0 and not tight(n):
        take("5")
    while cur.splus[n - 1] > 0:
        take("6")
    while cur.k[n - 1] > 0:
        take(f"1.{n}")
    while cur.k[n] > 0:
        take(f"1.{n + 1}")
    for i in range(n - 1, 0, -1):
        while cur.sminus[i - 1] > 0:
            take(f"3.{i}")
        while cur.splus[i - 1] > 0 and (i == 1 or not tight(i)):
            take(f"2.{i}")
        while cur.splus[i - 1] > 0:
            take(f"4.{i}")
        while cur.k[i - 1] > 0:
            take(f"1.{i}")
    if not cur.is_zero():
        raise ConeError(f"decomposition stalled at {cur}")
    return out


def cone_points(n: int, bound: int) -> Iterator[ConePoint]:
    """All integer cone points with every coordinate at most bound."""
    from itertools import product
    rng = range(bound + 1)
    for k in product(rng, repeat=n + 1):
        for sm in product(rng, repeat=n):
            for sp in product(rng, repeat=n):
                pt = ConePoint(k, sm, sp)
                if in_cone(pt):
                    yield pt
