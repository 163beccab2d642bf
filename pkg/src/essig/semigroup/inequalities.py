"""Linear inequality systems cutting out essential signatures.

Each form reads  sum_j a_j p_j <= sum_i b_i k_i  over the exponents p and the
fundamental coefficients k. Two systems are provided:

* ``explicit``: the closed list of forms in terms of p^{+-}_{i,j} (and s_i
  for B_n, with p^{+-}_{i,i} = s_i / 2; all B_n forms are doubled so the
  arithmetic stays integral);
* ``recursive``: the D_2 system (p_1 <= k_1, p_2 <= k_2, k >= 0) pulled back
  through the projections rank by rank, plus the lifting-cone conditions.

Integer points at fixed k are enumerated by depth-first search with bounds
obtained from linear programming.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import floor
from typing import Iterator, Sequence

import numpy as np
from scipy.optimize import linprog

from ..root_system import AlgebraType, Signature, pair_root_index, short_root_index
from .projection import psi_weight_b, psi_weight_d

Vec = tuple[int, ...]


class UnboundedSystemError(ValueError):
    pass


@dataclass(frozen=True)
class Inequality:
    label: str
    lhs: Vec  # coefficients of the exponents
    rhs: Vec  # coefficients of k

    def slack(self, k: Sequence[int], p: Sequence[int]) -> int:
        return sum(b * x for b, x in zip(self.rhs, k)) - sum(a * x for a, x in zip(self.lhs, p))

    def holds(self, k: Sequence[int], p: Sequence[int]) -> bool:
        return self.slack(k, p) >= 0

    def key(self) -> tuple[Vec, Vec]:
        return self.lhs, self.rhs


@dataclass(frozen=True)
class InequalitySystem:
    alg: AlgebraType
    name: str
    forms: tuple[Inequality, ...]

    def violations(self, k: Sequence[int], p: Sequence[int]) -> list[str]:
        return [f.label for f in self.forms if not f.holds(k, p)]

    def holds(self, k: Sequence[int], p: Sequence[int]) -> bool:
        return all(f.holds(k, p) for f in self.forms)

    def __len__(self) -> int:
        return len(self.forms)


class _FormBuilder:
    """Accumulates one form; B_n forms are kept at twice their size."""

    def __init__(self, alg: AlgebraType) -> None:
        self.alg = alg
        self.scale = 2 if alg.kind == "B" else 1
        self.lhs = [0] * alg.num_positive_roots
        self.rhs = [0] * alg.rank

    def p(self, i: int, j: int, sign: int, c: int = 1) -> "_FormBuilder":
        if i == j:
            if self.alg.kind != "B":
                raise ValueError("diagonal exponents exist only for B_n")
            # p^{+-}_{i,i} = s_i / 2
            self.lhs[short_root_index(self.alg, i)] += c * self.scale // 2
        else:
            self.lhs[pair_root_index(self.alg, i, j, sign)] += c * self.scale
        return self

    def pm(self, i: int, j: int, c: int = 1) -> "_FormBuilder":
        return self.p(i, j, 1, c).p(i, j, -1, c)

    def s(self, i: int, c: int = 1) -> "_FormBuilder":
        self.lhs[short_root_index(self.alg, i)] += c * self.scale
        return self

    def k(self, i: int, c: int = 1) -> "_FormBuilder":
        self.rhs[i - 1] += c * self.scale
        return self

    def done(self, label: str) -> Inequality:
        return Inequality(label, tuple(self.lhs), tuple(self.rhs))


def _tail(f: _FormBuilder, i: int, i2: int, start: int, n: int, sign: int = -1) -> _FormBuilder:
    # sum_{m=start}^{n} (p^+_{i,m} + p^-_{i,m} + sign * (p^+_{i2,m} + p^-_{i2,m}))
    for m in range(start, n + 1):
        f.pm(i, m)
        f.pm(i2, m, sign)
    return f


def explicit_system(alg: AlgebraType) -> InequalitySystem:
    n = alg.rank
    b = alg.kind == "B"
    forms = []
    F = lambda: _FormBuilder(alg)

    def short_diff(f: _FormBuilder, i: int) -> _FormBuilder:
        return f.s(i).s(i + 1, -1) if b else f

    for i in range(1, n - 1):
        for j in range(i + 2, n + 1):
            f = short_diff(F(), i).p(i, j, 1)
            forms.append(_tail(f, i, i + 1, j + 1, n).k(i).done(f"1[i={i},j={j}]"))
            f = short_diff(F(), i).p(i + 1, j, -1)
            forms.append(_tail(f, i, i + 1, j, n).k(i).done(f"2[i={i},j={j}]"))
    for i in range(1, n):
        f = short_diff(F(), i).p(i, i + 1, -1)
        forms.append(_tail(f, i, i + 1, i + 2, n).k(i).done(f"3[i={i}]"))
    for i in range(1, n - 1):
        if b:
            f = F().s(i).p(i + 1, i + 2, -1)
            f = _tail(f, i, i + 2, i + 2, n)
        else:
            f = F().p(i, i + 2, -1).p(i, i + 2, 1).p(i + 1, i + 2, -1)
            f = _tail(f, i, i + 2, i + 3, n)
        forms.append(f.k(i).k(i + 1).done(f"4[i={i}]"))
    if b:
        for i in range(1, n):
            f = _tail(F().s(i).p(i, i + 1, -1, -1), i, i + 1, i + 1, n, sign=1)
            f.k(i).k(n)
            for j in range(i + 1, n):
                f.k(j, 2)
            forms.append(f.done(f"5[i={i}]"))
        for i in range(1, n + 1):
            forms.append(F().s(i).k(i).done(f"6[i={i}]"))
    else:
        for i in range(1, n - 1):
            f = _tail(F().p(i, i + 1, 1), i, i + 1, i + 2, n, sign=1)
            f.k(i).k(n - 1).k(n)
            for j in range(i + 1, n - 1):
                f.k(j, 2)
            forms.append(f.done(f"5[i={i}]"))
        forms.append(F().p(n - 1, n, 1).k(n).done("6"))
    return InequalitySystem(alg, "explicit", tuple(forms))


def _linear_map(fn, nk: int, ns: int) -> tuple[list[Vec], list[Vec]]:
    """Columns of k' = A k + B s for a linear weight map fn(k, s)."""
    zero_k, zero_s = (0,) * nk, (0,) * ns
    a_cols = [fn(tuple(int(i == j) for i in range(nk)), zero_s) for j in range(nk)]
    b_cols = [fn(zero_k, tuple(int(i == j) for i in range(ns))) for j in range(ns)]
    return a_cols, b_cols


def _pull_back(lower: InequalitySystem, alg: AlgebraType, fn, ns: int,
               extra: list[Inequality]) -> InequalitySystem:
    n = alg.rank
    a_cols, b_cols = _linear_map(fn, n, ns)
    forms = []
    for f in lower.forms:
        rhs = tuple(sum(c * x for c, x in zip(f.rhs, col)) for col in a_cols)
        s_part = tuple(-sum(c * x for c, x in zip(f.rhs, col)) for col in b_cols)
        forms.append(Inequality(f"pulled {f.label}", f.lhs + s_part, rhs))
    forms += extra
    forms += [Inequality(f"k_{i + 1} >= 0", (0,) * alg.num_positive_roots,
                         tuple(int(j == i) for j in range(n))) for i in range(n)]
    return InequalitySystem(alg, "recursive", tuple(_dedupe(forms)))


def _dedupe(forms: list[Inequality]) -> list[Inequality]:
    seen, out = set(), []
    for f in forms:
        if f.key() not in seen:
            seen.add(f.key())
            out.append(f)
    return out


def _unit(length: int, i: int, c: int = 1) -> list[int]:
    v = [0] * length
    v[i] += c
    return v


@lru_cache(maxsize=None)
def recursive_system(alg: AlgebraType) -> InequalitySystem:
    n = alg.rank
    if alg.kind == "D" and n == 2:
        forms = [Inequality("p1 <= k1", (1, 0), (1, 0)), Inequality("p2 <= k2", (0, 1), (0, 1)),
                 Inequality("k1 >= 0", (0, 0), (1, 0)), Inequality("k2 >= 0", (0, 0), (0, 1))]
        return InequalitySystem(alg, "recursive", tuple(forms))
    N = alg.num_positive_roots
    if alg.kind == "B":
        lower = recursive_system(AlgebraType("D", n))
        base = n * (n - 1)
        extra = [Inequality(f"s_{i} <= k_{i}", tuple(_unit(N, base + i - 1)),
                            tuple(_unit(n, i - 1))) for i in range(1, n + 1)]
        return _pull_back(lower, alg, psi_weight_b, n, extra)
    m = n - 1
    lower = recursive_system(AlgebraType("D", m))
    base = m * (m - 1)
    sm = lambda i: base + i - 1
    sp = lambda i: base + m + i - 1

    def form(label, lhs_terms, rhs_terms):
        lhs, rhs = [0] * N, [0] * n
        for idx, c in lhs_terms:
            lhs[idx] += c
        for i, c in rhs_terms:
            rhs[i - 1] += c
        return Inequality(label, tuple(lhs), tuple(rhs))

    extra = []
    for i in range(1, m):
        extra.append(form(f"s+_{i} <= k_{i}", [(sp(i), 1)], [(i, 1)]))
        extra.append(form(f"s-_{i} + s+_{i} - s+_{i + 1} <= k_{i}",
                          [(sm(i), 1), (sp(i), 1), (sp(i + 1), -1)], [(i, 1)]))
    extra.append(form(f"s+_{m - 1} + s-_{m - 1} + s-_{m} <= k_{m - 1} + k_{m}",
                      [(sp(m - 1), 1), (sm(m - 1), 1), (sm(m), 1)], [(m - 1, 1), (m, 1)]))
    extra.append(form(f"s-_{m} <= k_{m}", [(sm(m), 1)], [(m, 1)]))
    extra.append(form(f"s+_{m} <= k_{m + 1}", [(sp(m), 1)], [(m + 1, 1)]))

    def fn(k, s):
        return psi_weight_d(k, s[:m], s[m:])

    return _pull_back(lower, alg, fn, 2 * m, extra)


def inequality_system(alg: AlgebraType, which: str = "explicit") -> InequalitySystem:
    if which == "explicit":
        return explicit_system(alg)
    if which == "recursive":
        return recursive_system(alg)
    raise ValueError(f"unknown inequality system {which!r}")


def membership_by_inequalities(alg: AlgebraType, sig: Signature, which: str = "explicit") -> bool:
    if sig.alg != alg:
        raise ValueError("signature belongs to another algebra")
    return inequality_system(alg, which).holds(sig.highest, sig.exponents)


def _bounds(A: np.ndarray, c: np.ndarray) -> list[int]:
    nvar = A.shape[1]
    ub = []
    for j in range(nvar):
        obj = np.zeros(nvar)
        obj[j] = -1.0
        res = linprog(obj, A_ub=A, b_ub=c, bounds=[(0, None)] * nvar, method="highs")
        if res.status == 3:
            raise UnboundedSystemError(f"exponent {j} is unbounded")
        if res.status == 2:
            return [-1] * nvar  # infeasible
        if res.status != 0:
            raise RuntimeError(f"linear program failed: {res.message}")
        ub.append(floor(-res.fun + 1e-7))
    return ub


def integer_points(system: InequalitySystem, k: Sequence[int]) -> Iterator[Vec]:
    """All non-negative integer exponent tuples p with system.holds(k, p), in lexicographic order."""
    k = tuple(k)
    forms = [(f.lhs, sum(b * x for b, x in zip(f.rhs, k))) for f in system.forms]
    if any(not any(lhs) and c < 0 for lhs, c in forms):
        return
    forms = [(lhs, c) for lhs, c in forms if any(lhs)]
    N = system.alg.num_positive_roots
    if not forms:
        raise UnboundedSystemError("no constraints on the exponents")
    A = np.array([lhs for lhs, _ in forms], dtype=float)
    c = np.array([c for _, c in forms], dtype=float)
    ub = _bounds(A, c)
    if min(ub) < 0:
        return
    rows = [(lhs, rhs) for lhs, rhs in forms]
    p = [0] * N

    def feasible(j: int) -> bool:
        # with p_0..p_j fixed, can the remaining variables still satisfy every form?
        for lhs, rhs in rows:
            low = 0
            for t in range(N):
                a = lhs[t]
                if not a:
                    continue
                if t <= j:
                    low += a * p[t]
                elif a < 0:
                    low += a * ub[t]
            if low > rhs:
                return False
        return True

    def walk(j: int):
        if j == N:
            yield tuple(p)
            return
        for v in range(ub[j] + 1):
            p[j] = v
            if feasible(j):
                yield from walk(j + 1)
        p[j] = 0

    yield from walk(0)


def point_set(system: InequalitySystem, k: Sequence[int]) -> frozenset[Vec]:
    return frozenset(integer_points(system, k))
