"""Essential signatures computed directly from their definition.

A signature is essential when v(sigma) is not in the span of v(tau) for
smaller tau of the same highest weight. Vectors of distinct weights are
independent, so elimination runs separately inside each weight class.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .rep_modules import ModuleRealization, RealizationError, divided_power_step, realize
from .root_system import (AlgebraType, DEFAULT_LEX, LexDirection, Signature, Weight,
                    exponent_key, export_header, positive_roots)
from .sparse import Scalar, Vector, primitive_int_vector
from .weyl import weyl_dim

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EssentialSet:
    alg: AlgebraType
    highest: tuple[int, ...]
    signatures: tuple[Signature, ...]
    lex: LexDirection = DEFAULT_LEX
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def highest_weight(self) -> Weight:
        return Weight.from_fund(self.alg, self.highest)

    def exponent_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(s.exponents for s in self.signatures)

    def __len__(self) -> int:
        return len(self.signatures)

    def __contains__(self, item) -> bool:
        if isinstance(item, Signature):
            return item.highest == self.highest and item.exponents in self.exponent_set()
        return tuple(item) in self.exponent_set()

    def json_lines(self) -> Iterator[dict]:
        for s in self.signatures:
            yield {"weight": list(self.highest), "exponents": list(s.exponents)}

    def header(self) -> dict:
        h = export_header(self.alg, self.lex)
        h["weight"] = list(self.highest)
        h["count"] = len(self.signatures)
        return h


def make_essential_set(alg: AlgebraType, highest: Sequence[int], exponents,
                       lex: LexDirection = DEFAULT_LEX, **meta) -> EssentialSet:
    hw = tuple(highest)
    ordered = sorted(set(tuple(e) for e in exponents), key=lambda e: exponent_key(alg, e, lex))
    return EssentialSet(alg, hw, tuple(Signature(alg, hw, e) for e in ordered), lex, meta)


class EchelonBasis:
    """Fraction-free row echelon form; each row's pivot is its lowest index."""

    def __init__(self) -> None:
        self.rows: list[tuple[int, dict[int, int]]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector) -> dict[int, int]:
        v = primitive_int_vector(vec)
        for pivot, row in self.rows:
            c = v.get(pivot)
            if not c:
                continue
            a = row[pivot]
            out = {i: a * x for i, x in v.items()}
            for i, x in row.items():
                y = out.get(i, 0) - c * x
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
            v = primitive_int_vector(out)
        return v

    def add(self, vec: Vector) -> bool:
        """Insert vec; True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        # keep rows sorted by pivot so a reduction never reintroduces an earlier pivot
        pos = 0
        while pos < len(self.rows) and self.rows[pos][0] < pivot:
            pos += 1
        self.rows.insert(pos, (pivot, v))
        return True


def enumerate_nonzero_signatures(m: ModuleRealization) -> Iterator[tuple[tuple[int, ...], Vector]]:
    """All exponent tuples with v(sigma) != 0, together with v(sigma).

    Depth-first over roots alpha_N, ..., alpha_1; a branch stops as soon as
    the divided power vanishes, which is final for that operator.
    """
    N = m.alg.num_positive_roots
    exps = [0] * N

    def walk(j: int, vec: Vector):
        if j < 0:
            yield tuple(exps), vec
            return
        p = 0
        cur = vec
        while cur:
            exps[j] = p
            yield from walk(j - 1, cur)
            p += 1
            cur = divided_power_step(m, j, cur, p)
        exps[j] = 0

    yield from walk(N - 1, m.highest_vector())


def nonzero_signatures(m: ModuleRealization) -> Iterator[Signature]:
    hw = m.highest_weight
    for exps, _ in enumerate_nonzero_signatures(m):
        yield Signature(m.alg, hw, exps)


def _weight_class_key(roots, exps) -> tuple[int, ...]:
    n = len(roots[0])
    acc = [0] * n
    for p, r in zip(exps, roots):
        if p:
            for i, c in enumerate(r):
                acc[i] += p * c
    return tuple(acc)


def _eliminate_class(items: list[tuple[tuple, tuple[int, ...], Vector]]) -> list[tuple[int, ...]]:
    items.sort(key=lambda t: t[0])
    basis = EchelonBasis()
    return [exps for _, exps, vec in items if basis.add(vec)]


def _eliminate_chunk(chunk):
    return [_eliminate_class(items) for items in chunk]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("ESSIG_THREADS", "1")))
    except ValueError:
        return 1


def essential_set(m: ModuleRealization, lex: LexDirection = DEFAULT_LEX,
                  check_dimension: bool = True, workers: int | None = None,
                  batch_by_weight: bool = True) -> EssentialSet:
    """Essential signatures of the module generated by m's highest vector.

    With ``batch_by_weight=False`` a single elimination over all nonzero
    signatures in increasing order is used instead (slow; for cross-checks).
    """
    alg = m.alg
    roots = positive_roots(alg)
    classes: dict[tuple[int, ...], list] = {}
    total = 0
    for exps, vec in enumerate_nonzero_signatures(m):
        total += 1
        key = _weight_class_key(roots, exps) if batch_by_weight else ()
        classes.setdefault(key, []).append((exponent_key(alg, exps, lex), exps, vec))
    groups = [classes[k] for k in sorted(classes)]
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(groups) > 1:
        chunks = [groups[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_eliminate_chunk, chunks))
        kept = [e for res in results for cls in res for e in cls]
    else:
        kept = [e for items in groups for e in _eliminate_class(items)]
    es = make_essential_set(alg, m.highest_weight, kept, lex,
                            nonzero=total, weight_classes=len(groups), module=m.name)
    if check_dimension:
        expected = weyl_dim(alg, m.highest_weight)
        if len(es) != expected:
            raise RealizationError(
                f"{m.name}: found {len(es)} essential signatures but dim V{m.highest_weight} = "
                f"{expected}; the highest vector does not generate an irreducible module")
    log.debug("%s: %d nonzero signatures, %d classes, %d essential", m.name, total, len(groups), len(es))
    return es


def oracle_essential(alg: AlgebraType, highest: Sequence[int], lex: LexDirection = DEFAULT_LEX,
                     workers: int | None = None) -> EssentialSet:
    """Essential set of V(highest) computed on a freshly built realization."""
    return essential_set(realize(alg, highest), lex=lex, workers=workers)
