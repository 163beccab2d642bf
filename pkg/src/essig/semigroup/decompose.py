"""Decompositions of signatures into generator essential signatures.

A part is a pair (weight, exponents) with the weight a generator and the
exponents in that generator's closed-form essential set. Decompositions are
multisets of parts, stored as sorted tuples.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from ..essential_oracle import oracle_essential
from ..root_system import AlgebraType, Signature
from ..weyl import weyl_dim
from .closed_form import GeneratorSet, closed_form_exponents, generators, sub_generators

log = logging.getLogger(__name__)

Vec = tuple[int, ...]
Part = tuple[Vec, Vec]
Parts = tuple[Part, ...]


class NotDecomposableError(ValueError):
    pass


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _leq(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def part_sum(parts: Iterable[Part], alg: AlgebraType) -> Part:
    k = (0,) * alg.rank
    p = (0,) * alg.num_positive_roots
    for w, e in parts:
        k, p = _add(k, w), _add(p, e)
    return k, p


@dataclass(frozen=True)
class Decomposition:
    alg: AlgebraType
    parts: Parts

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    @property
    def total(self) -> Signature:
        k, p = part_sum(self.parts, self.alg)
        return Signature(self.alg, k, p)

    def signatures(self) -> list[Signature]:
        return [Signature(self.alg, w, e) for w, e in self.parts]

    def __len__(self) -> int:
        return len(self.parts)


class Decomposer:
    """Memoized search for decompositions over a fixed generator set."""

    def __init__(self, gens: GeneratorSet) -> None:
        self.gens = gens
        self.alg = gens.alg
        self.sets = {g: sorted(closed_form_exponents(self.alg, g)) for g in gens}
        self._all: dict[Part, frozenset[Parts]] = {}
        self._one: dict[Part, Parts | None] = {}

    def is_part(self, weight: Vec, exps: Vec) -> bool:
        return weight in self.gens and exps in closed_form_exponents(self.alg, weight)

    def _choices(self, k: Vec, p: Vec) -> Iterator[Part]:
        # some part has to cover the first nonzero weight coefficient
        i = next(j for j, c in enumerate(k) if c)
        for g in self.gens:
            if g[i] and _leq(g, k):
                for e in self.sets[g]:
                    if _leq(e, p):
                        yield g, e

    def all(self, k: Vec, p: Vec) -> frozenset[Parts]:
        key = (k, p)
        hit = self._all.get(key)
        if hit is not None:
            return hit
        if not any(k):
            res = frozenset({()}) if not any(p) else frozenset()
        else:
            out = set()
            for g, e in self._choices(k, p):
                for rest in self.all(_sub(k, g), _sub(p, e)):
                    out.add(tuple(sorted(rest + ((g, e),))))
            res = frozenset(out)
        self._all[key] = res
        return res

    def first(self, k: Vec, p: Vec) -> Parts | None:
        key = (k, p)
        if key in self._one:
            return self._one[key]
        res: Parts | None = None
        if not any(k):
            res = () if not any(p) else None
        else:
            for g, e in self._choices(k, p):
                rest = self.first(_sub(k, g), _sub(p, e))
                if rest is not None:
                    res = tuple(sorted(rest + ((g, e),)))
                    break
        self._one[key] = res
        return res

    def decompositions(self, sig: Signature) -> list[Decomposition]:
        return [Decomposition(self.alg, d) for d in sorted(self.all(sig.highest, sig.exponents))]

    def find(self, sig: Signature) -> Decomposition | None:
        d = self.first(sig.highest, sig.exponents)
        return None if d is None else Decomposition(self.alg, d)


_DECOMPOSERS: dict[GeneratorSet, Decomposer] = {}


def decomposer(gens: GeneratorSet) -> Decomposer:
    d = _DECOMPOSERS.get(gens)
    if d is None:
        d = _DECOMPOSERS[gens] = Decomposer(gens)
    return d


def find_decomposition(sig: Signature, gens: GeneratorSet | None = None) -> Decomposition | None:
    return decomposer(gens or generators(sig.alg)).find(sig)


def decompositions(sig: Signature, gens: GeneratorSet | None = None) -> list[Decomposition]:
    return decomposer(gens or generators(sig.alg)).decompositions(sig)


# ---------------------------------------------------------------------------
# admissible operations and the rewrite graph

def admissible_rewrites(d: Decomposition, gens: GeneratorSet | None = None) -> list[Decomposition]:
    """Decompositions reachable from d by one admissible operation.

    Pair to pair, pair to single and single to pair replacements are all
    covered; every replacement part is a generator essential signature.
    """
    dec = decomposer(gens or generators(d.alg))
    parts = list(d.parts)
    out: set[Parts] = set()
    picks = [(i,) for i in range(len(parts))] + list(combinations(range(len(parts)), 2))
    for idx in picks:
        rest = tuple(p for j, p in enumerate(parts) if j not in idx)
        k, p = part_sum((parts[j] for j in idx), d.alg)
        for repl in dec.all(k, p):
            if 1 <= len(repl) <= 2 and len(repl) + len(idx) > 2:
                new = tuple(sorted(rest + repl))
                if new != d.parts:
                    out.add(new)
    return [Decomposition(d.alg, x) for x in sorted(out)]


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def rewrite_components(decs: Sequence[Parts], alg: AlgebraType) -> int:
    """Connected components of the admissible-operation graph on decs.

    Two decompositions are one operation apart exactly when removing a
    sub-multiset of size 1 or 2 from each leaves the same remainder and the
    removed pieces have the same sum (and are not both single parts). Keys
    (remainder, removed sum) therefore bucket the edges.
    """
    uf = _UnionFind(len(decs))
    buckets: dict[tuple, int] = {}
    for node, d in enumerate(decs):
        for size in (1, 2):
            for idx in combinations(range(len(d)), size):
                rest = tuple(p for j, p in enumerate(d) if j not in idx)
                key = (rest, part_sum((d[j] for j in idx), alg))
                other = buckets.setdefault(key, node)
                if other != node:
                    uf.union(node, other)
    return len({uf.find(i) for i in range(len(decs))})


@dataclass(frozen=True)
class StarResult:
    signature: Signature
    decompositions: int
    components: int

    @property
    def connected(self) -> bool:
        return self.components == 1


def check_property_star(sig: Signature, gens: GeneratorSet | None = None) -> StarResult:
    dec = decomposer(gens or generators(sig.alg))
    decs = sorted(dec.all(sig.highest, sig.exponents))
    if not decs:
        raise NotDecomposableError(f"{sig} has no decomposition over the generators")
    return StarResult(sig, len(decs), rewrite_components(decs, sig.alg))


def verify_property_star(alg: AlgebraType, gens: GeneratorSet | None, sig: Signature) -> bool:
    if sig.alg != alg:
        raise ValueError("signature belongs to another algebra")
    return check_property_star(sig, gens).connected


# ---------------------------------------------------------------------------
# counting, representability and saturation

def sum_set(a: Iterable[Vec], b: Iterable[Vec]) -> frozenset[Vec]:
    b = list(b)
    return frozenset(_add(x, y) for x in a for y in b)


def weight_partitions(k: Vec, gens: Sequence[Vec]) -> list[tuple[Vec, ...]]:
    """Multisets of generator weights summing to k."""
    gens = sorted(gens)
    out = []

    def walk(rem: Vec, start: int, acc: list[Vec]) -> None:
        if not any(rem):
            out.append(tuple(acc))
            return
        for j in range(start, len(gens)):
            g = gens[j]
            if _leq(g, rem):
                acc.append(g)
                walk(_sub(rem, g), j, acc)
                acc.pop()

    walk(tuple(k), 0, [])
    return out


def representable_set(alg: AlgebraType, k: Vec, gens: GeneratorSet | None = None) -> frozenset[Vec]:
    """Exponent tuples of weight-k signatures that are sums of generator essentials."""
    gens = gens or generators(alg)
    out: set[Vec] = set()
    for combo in weight_partitions(tuple(k), list(gens)):
        acc: frozenset[Vec] = frozenset({(0,) * alg.num_positive_roots})
        for g in combo:
            acc = sum_set(acc, closed_form_exponents(alg, g))
        out |= acc
    return frozenset(out)


def shared_subset(alg: AlgebraType, a: Vec, b: Vec) -> str | None:
    """Name of a generator subset containing both weights ("minus"/"plus"), if any."""
    if alg.kind != "D":
        return "all"
    for which in ("minus", "plus"):
        sub = sub_generators(alg, which)
        if a in sub and b in sub:
            return which
    return None


@dataclass(frozen=True)
class DoubleStarResult:
    alg: AlgebraType
    first: Vec
    second: Vec
    sum_count: int
    representable_count: int
    dim: int
    subset: str | None

    @property
    def counting_holds(self) -> bool:
        return self.sum_count == self.dim

    @property
    def representable_holds(self) -> bool:
        return self.representable_count == self.dim

    @property
    def passed(self) -> bool:
        """The counting identity where both weights share a generator subset,
        otherwise representability over the full generator set."""
        return self.counting_holds if self.subset is not None else self.representable_holds

    def to_json(self) -> dict:
        return {"pair": [list(self.first), list(self.second)], "sum_count": self.sum_count,
                "representable_count": self.representable_count, "dim": self.dim,
                "shared_subset": self.subset, "passed": self.passed}


def check_property_double_star(alg: AlgebraType, a: Vec, b: Vec,
                               gens: GeneratorSet | None = None) -> DoubleStarResult:
    gens = gens or generators(alg)
    a, b = tuple(a), tuple(b)
    lam = _add(a, b)
    s = sum_set(closed_form_exponents(alg, a), closed_form_exponents(alg, b))
    rep = representable_set(alg, lam, gens)
    return DoubleStarResult(alg, a, b, len(s), len(rep), weyl_dim(alg, lam), shared_subset(alg, a, b))


def verify_property_double_star(alg: AlgebraType, gens: GeneratorSet | None, a: Vec, b: Vec) -> bool:
    return check_property_double_star(alg, a, b, gens).passed


def excluded_pair(alg: AlgebraType, a: Vec, b: Vec) -> bool:
    """Pairs whose sum is itself a generator weight, left out of the counting sweep.

    Every signature of such a sum is already a generator signature, so there
    is nothing to represent. For B_n this is exactly (w_n, w_n); for D_n it
    is the three spin pairs among w_{n-1}, w_n.
    """
    return _add(tuple(a), tuple(b)) in generators(alg)


def generator_pairs(alg: AlgebraType) -> list[tuple[Vec, Vec]]:
    g = list(generators(alg))
    return [(g[i], g[j]) for i in range(len(g)) for j in range(i, len(g))]


@dataclass
class SaturationReport:
    alg: AlgebraType
    bound: int
    points: int = 0
    weights: int = 0
    failures: list[Signature] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def dominant_weights(n: int, bound: int) -> Iterator[Vec]:
    """Dominant weights with coefficient sum at most bound, by increasing degree."""
    def walk(i: int, rem: int, acc: list[int]):
        if i == n:
            yield tuple(acc)
            return
        for c in range(rem + 1):
            acc.append(c)
            yield from walk(i + 1, rem - c, acc)
            acc.pop()
    for total in range(bound + 1):
        for k in walk(0, total, []):
            if sum(k) == total:
                yield k


def check_saturation(alg: AlgebraType, bound: int, gens: GeneratorSet | None = None,
                     system: str = "explicit") -> SaturationReport:
    from .inequalities import inequality_system, integer_points

    gens = gens or generators(alg)
    dec = decomposer(gens)
    ineq = inequality_system(alg, system)
    rep = SaturationReport(alg, bound)
    for k in dominant_weights(alg.rank, bound):
        rep.weights += 1
        for p in integer_points(ineq, k):
            rep.points += 1
            if dec.first(k, p) is None:
                rep.failures.append(Signature(alg, k, p))
    return rep


def verify_saturation(alg: AlgebraType, gens: GeneratorSet | None, bound: int) -> bool:
    return check_saturation(alg, bound, gens).passed


@dataclass
class DaggerReport:
    alg: AlgebraType
    checked: int = 0
    failures: list[Signature] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_dagger(alg: AlgebraType, weights: Iterable[Vec] | None = None,
                 use_oracle: bool = False) -> DaggerReport:
    """Every representable signature of each weight splits within one subset."""
    if alg.kind != "D":
        raise ValueError("the subset split is defined for type D only")
    minus = decomposer(sub_generators(alg, "minus"))
    plus = decomposer(sub_generators(alg, "plus"))
    if weights is None:
        weights = [_add(a, b) for a, b in generator_pairs(alg)]
    rep = DaggerReport(alg)
    for k in weights:
        exps = (oracle_essential(alg, k).exponent_set() if use_oracle
                else representable_set(alg, k))
        for p in sorted(exps):
            rep.checked += 1
            if minus.first(k, p) is None and plus.first(k, p) is None:
                rep.failures.append(Signature(alg, k, p))
    return rep


def verify_dagger(alg: AlgebraType, weights: Iterable[Vec] | None = None) -> bool:
    return check_dagger(alg, weights).passed
