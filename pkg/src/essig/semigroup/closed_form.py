"""Recursive closed-form essential sets for generator weights.

D_2 is the base. A D_{n+1} set is assembled from D_n sets by padding the
exponents for the new roots e_i -/+ e_{n+1} and adding shifted unit vectors;
B_n sets come from D_n sets through the short roots e_1..e_n the same way.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..essential_oracle import EssentialSet, make_essential_set
from ..root_system import (AlgebraType, DEFAULT_LEX, LexDirection, Signature, WeightError,
                     hat_fund, unit_fund)

log = logging.getLogger(__name__)

Exps = tuple[int, ...]


class NotAGeneratorError(WeightError):
    pass


def _wname(k: Sequence[int]) -> str:
    parts = [f"{c if c > 1 else ''}w{i + 1}" for i, c in enumerate(k) if c]
    return "+".join(parts) or "0"


@dataclass(frozen=True)
class GeneratorSet:
    alg: AlgebraType
    weights: tuple[tuple[int, ...], ...]

    def __contains__(self, k) -> bool:
        return tuple(k) in self.weights

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def names(self) -> list[str]:
        return [_wname(k) for k in self.weights]

    def restrict(self, keep: Sequence[tuple[int, ...]]) -> "GeneratorSet":
        keep = set(map(tuple, keep))
        return GeneratorSet(self.alg, tuple(w for w in self.weights if w in keep))


def generators(alg: AlgebraType) -> GeneratorSet:
    """omega_1..omega_n, then 2w_{n-1}, 2w_n, w_{n-1}+w_n for D; 2w_n for B."""
    n = alg.rank
    ws = [unit_fund(n, i) for i in range(1, n + 1)]
    if alg.kind == "D":
        ws += [unit_fund(n, n - 1, 2), unit_fund(n, n, 2), hat_fund(alg, n - 1)]
    else:
        ws.append(unit_fund(n, n, 2))
    return GeneratorSet(alg, tuple(ws))


@dataclass(frozen=True)
class Component:
    """One term of a closed-form union: a lower-rank set plus a shift."""
    source: str
    shift: Exps
    exponents: frozenset[Exps]


@dataclass(frozen=True)
class ClosedForm:
    alg: AlgebraType
    highest: tuple[int, ...]
    components: tuple[Component, ...]

    @property
    def exponents(self) -> frozenset[Exps]:
        out: set[Exps] = set()
        for c in self.components:
            out |= c.exponents
        return frozenset(out)

    @property
    def overlap(self) -> int:
        """Number of tuples counted more than once across the components."""
        return sum(len(c.exponents) for c in self.components) - len(self.exponents)

    def overlapping_pairs(self) -> list[tuple[int, int, int]]:
        out = []
        for a in range(len(self.components)):
            for b in range(a + 1, len(self.components)):
                common = len(self.components[a].exponents & self.components[b].exponents)
                if common:
                    out.append((a, b, common))
        return out


def _pad(s: frozenset[Exps], extra: int) -> frozenset[Exps]:
    z = (0,) * extra
    return frozenset(e + z for e in s)


def _shift(s: frozenset[Exps], vec: Exps) -> frozenset[Exps]:
    return frozenset(tuple(a + b for a, b in zip(e, vec)) for e in s)


def _unit_vec(length: int, *idx: int) -> Exps:
    v = [0] * length
    for i in idx:
        if i is not None:
            v[i] += 1
    return tuple(v)


def _d2_set(k: tuple[int, ...]) -> frozenset[Exps]:
    return frozenset((p1, p2) for p1 in range(k[0] + 1) for p2 in range(k[1] + 1))


def _is_zero(k) -> bool:
    return not any(k)


@lru_cache(maxsize=None)
def _closed(kind: str, n: int, k: tuple[int, ...]) -> ClosedForm:
    alg = AlgebraType(kind, n)
    if _is_zero(k):
        zero = frozenset({(0,) * alg.num_positive_roots})
        return ClosedForm(alg, k, (Component("0", (0,) * alg.num_positive_roots, zero),))
    if kind == "D" and n == 2:
        return ClosedForm(alg, k, (Component(_wname(k), (0, 0), _d2_set(k)),))
    if k not in generators(alg):
        raise NotAGeneratorError(f"{_wname(k)} is not a generator weight of {alg}")
    if kind == "B":
        terms = _b_terms(n, k)
    else:
        terms = _d_terms(n - 1, k)
    return ClosedForm(alg, k, tuple(terms))


def _component(kind: str, lower_n: int, lower_k: tuple[int, ...], width: int,
               shift: Exps) -> Component:
    base = _closed("D", lower_n, lower_k).exponents
    extra = width - len(next(iter(base)))
    return Component(f"D{lower_n}:{_wname(lower_k)}", shift, _shift(_pad(base, extra), shift))


def _b_terms(n: int, k: tuple[int, ...]) -> list[Component]:
    lower = AlgebraType("D", n)
    N = n * n
    sh = lambda p: n * (n - 1) + p - 1  # index of the short root e_p
    terms = []
    if k == unit_fund(n, n, 2):
        terms.append(_component("B", n, hat_fund(lower, n - 1), N, _unit_vec(N, sh(n))))
        terms.append(_component("B", n, unit_fund(n, n - 1, 2), N, _unit_vec(N, sh(n), sh(n))))
        terms.append(_component("B", n, unit_fund(n, n, 2), N, (0,) * N))
        return terms
    p = k.index(1) + 1
    terms.append(_component("B", n, hat_fund(lower, p), N, (0,) * N))
    terms.append(_component("B", n, unit_fund(n, p - 1), N, _unit_vec(N, sh(p))))
    return terms


def _d_terms(n: int, k: tuple[int, ...]) -> list[Component]:
    """Components of a D_{n+1} generator set in terms of D_n sets."""
    lower = AlgebraType("D", n)
    N = (n + 1) * n
    base = n * (n - 1)

    def m(i: int):  # e_i - e_{n+1}; e_0 - e_{n+1} stands for no shift
        return base + i - 1 if i >= 1 else None

    def pl(i: int):  # e_i + e_{n+1}
        return base + n + i - 1

    z = (0,) * N
    u = lambda *idx: _unit_vec(N, *idx)
    w = lambda i, mult=1: unit_fund(n, i, mult)
    top = n + 1
    if k == hat_fund(AlgebraType("D", top), n):
        return [
            _component("D", n, w(n, 2), N, z),
            _component("D", n, w(n - 1, 2), N, u(m(n), pl(n))),
            _component("D", n, hat_fund(lower, n - 1), N, u(m(n))),
            _component("D", n, hat_fund(lower, n - 1), N, u(pl(n))),
            _component("D", n, w(n - 2), N, u(m(n - 1), pl(n))),
        ]
    if k in (unit_fund(top, n, 2), unit_fund(top, top, 2)):
        idx = m(n) if k == unit_fund(top, n, 2) else pl(n)
        return [
            _component("D", n, w(n, 2), N, z),
            _component("D", n, hat_fund(lower, n - 1), N, u(idx)),
            _component("D", n, w(n - 1, 2), N, u(idx, idx)),
        ]
    if k in (unit_fund(top, n), unit_fund(top, top)):
        idx = m(n) if k == unit_fund(top, n) else pl(n)
        return [
            _component("D", n, w(n), N, z),
            _component("D", n, w(n - 1), N, u(idx)),
        ]
    p = k.index(1) + 1  # p < n
    return [
        _component("D", n, hat_fund(lower, p), N, z),
        _component("D", n, w(p - 1), N, u(m(p))),
        _component("D", n, w(p - 1), N, u(pl(p))),
        _component("D", n, w(p - 2), N, u(m(p - 1), pl(p))),
    ]


def closed_form(alg: AlgebraType, highest: Sequence[int]) -> ClosedForm:
    """Closed-form description (with its components) of a generator's essential set."""
    k = tuple(highest)
    if len(k) != alg.rank:
        raise WeightError(f"{alg} weights need {alg.rank} coefficients")
    cf = _closed(alg.kind, alg.rank, k)
    if cf.overlap:
        log.debug("%s %s: components overlap in %d tuples %s", alg, _wname(k), cf.overlap,
                  cf.overlapping_pairs())
    return cf


def closed_form_exponents(alg: AlgebraType, highest: Sequence[int]) -> frozenset[Exps]:
    return _closed(alg.kind, alg.rank, tuple(highest)).exponents


def closed_form_essential(alg: AlgebraType, highest: Sequence[int],
                          lex: LexDirection = DEFAULT_LEX) -> EssentialSet:
    cf = closed_form(alg, highest)
    return make_essential_set(alg, cf.highest, cf.exponents, lex, overlap=cf.overlap,
                              method="closed")


def generator_signatures(alg: AlgebraType, highest: Sequence[int]) -> list[Signature]:
    hw = tuple(highest)
    return [Signature(alg, hw, e) for e in sorted(closed_form_exponents(alg, hw))]


def sub_generators(alg: AlgebraType, which: str) -> GeneratorSet:
    """The two D_n generator subsets sharing w_1..w_{n-2} and w_{n-1}+w_n.

    ``which="minus"`` adds w_{n-1} and 2w_{n-1}; ``which="plus"`` adds w_n and 2w_n.
    """
    if alg.kind != "D":
        raise ValueError("generator subsets are defined for type D only")
    n = alg.rank
    idx = {"minus": n - 1, "plus": n}.get(which)
    if idx is None:
        raise ValueError(f"unknown subset {which!r}")
    ws = [unit_fund(n, i) for i in range(1, n - 1)]
    ws += [hat_fund(alg, n - 1), unit_fund(n, idx), unit_fund(n, idx, 2)]
    return GeneratorSet(alg, tuple(ws))
