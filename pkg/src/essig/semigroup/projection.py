"""Projection of B_n and D_{n+1} signatures to D_n, and the inverse lifts.

psi forgets the exponents of the new roots (e_i for B_n, e_i -/+ e_{n+1} for
D_{n+1}) and recomputes the highest weight so that l'_i = l_i - (sum of the
forgotten exponents at position i) in epsilon coordinates.

A lift is certified by building an explicit decomposition into generator
essential signatures: the new-root exponents are split into lattice vectors of
the lifting cone, the lower signature is decomposed over one of the two D_n
generator subsets, and the pieces are matched by projected weight.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..root_system import AlgebraType, Signature
from .closed_form import closed_form_exponents, generators, sub_generators
from .cone import ConeError, ConePoint, cone_decompose, cone_violations
from .decompose import decomposer

Vec = tuple[int, ...]


class NotInImageError(ValueError):
    pass


class LiftError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weight maps

def psi_weight_b(k: Sequence[int], s: Sequence[int]) -> Vec:
    n = len(k)
    out = [k[i] - s[i] + s[i + 1] for i in range(n - 1)]
    out.append(k[n - 2] - s[n - 2] + k[n - 1] - s[n - 1])
    return tuple(out)


def psi_weight_d(k: Sequence[int], sminus: Sequence[int], splus: Sequence[int]) -> Vec:
    n = len(sminus)
    s = [a + b for a, b in zip(sminus, splus)]
    out = [k[i] - s[i] + s[i + 1] for i in range(n - 1)]
    out.append(k[n - 2] + k[n - 1] + k[n] - s[n - 1] - s[n - 2])
    return tuple(out)


def split_b(sig: Signature) -> tuple[Vec, Vec]:
    """(long-root exponents, short-root exponents) of a B_n signature."""
    n = sig.alg.rank
    cut = n * (n - 1)
    return sig.exponents[:cut], sig.exponents[cut:]


def split_d(sig: Signature) -> tuple[Vec, Vec, Vec]:
    """(D_n exponents, s-, s+) of a D_{n+1} signature."""
    n = sig.alg.rank - 1
    cut = n * (n - 1)
    e = sig.exponents
    return e[:cut], e[cut:cut + n], e[cut + n:]


def psi_project_b(sig: Signature) -> Signature:
    if sig.alg.kind != "B":
        raise ValueError("expected a B_n signature")
    n = sig.alg.rank
    lower, s = split_b(sig)
    k2 = psi_weight_b(sig.highest, s)
    if min(k2) < 0:
        raise NotInImageError(f"projected weight {k2} is not dominant")
    return Signature(AlgebraType("D", n), k2, lower)


def psi_project_d(sig: Signature) -> Signature:
    if sig.alg.kind != "D" or sig.alg.rank < 3:
        raise ValueError("expected a D_{n+1} signature with n >= 2")
    n = sig.alg.rank - 1
    lower, sm, sp = split_d(sig)
    k2 = psi_weight_d(sig.highest, sm, sp)
    if min(k2) < 0:
        raise NotInImageError(f"projected weight {k2} is not dominant")
    return Signature(AlgebraType("D", n), k2, lower)


def psi_project(sig: Signature) -> Signature:
    return psi_project_b(sig) if sig.alg.kind == "B" else psi_project_d(sig)


# ---------------------------------------------------------------------------
# lifting

@dataclass(frozen=True)
class Lift:
    signature: Signature
    parts: tuple[Signature, ...]
    images: tuple[Signature, ...]
    attempts: int


# an item is (weight, new-root exponents) for one cone generator
Item = tuple[Vec, Vec]


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _b_items(k: Vec, s: Vec) -> list[Item]:
    n = len(k)
    items = []
    for i in range(n):
        w = tuple(1 if j == i else 0 for j in range(n))
        short = tuple(1 if j == i else 0 for j in range(n))
        items += [(w, short)] * s[i]
        items += [(w, (0,) * n)] * (k[i] - s[i])
    return items


def _d_items(k: Vec, sm: Vec, sp: Vec) -> list[Item]:
    return [(v.k, v.svec()) for _, v in cone_decompose(ConePoint(k, sm, sp))]


def _match(target: AlgebraType, items: list[Item], taus: list[tuple[Vec, Vec]],
           psi, zero_lower: Vec) -> list[tuple[Vec, Vec, Vec]] | None:
    """Assign groups of one or two items to the lower parts.

    Returns (group weight, lower exponents, new-root exponents) triples, or
    None when no assignment makes every piece a generator essential signature.
    """
    gens = set(generators(target))

    def member(w: Vec, lower: Vec, svec: Vec) -> bool:
        return w in gens and lower + svec in closed_form_exponents(target, w)

    def groups(pool: Counter) -> Iterator[tuple[Item, ...]]:
        keys = sorted(pool)
        for a, x in enumerate(keys):
            yield (x,)
            for y in keys[a:]:
                if y == x and pool[x] < 2:
                    continue
                if _add(x[0], y[0]) in gens:
                    yield (x, y)

    def walk(pool: Counter, t: int) -> list | None:
        if t == len(taus):
            out = []
            for x, c in pool.items():
                if c and any(psi(x)):
                    return None
                if c and not member(x[0], zero_lower, x[1]):
                    return None
                out += [(x[0], zero_lower, x[1])] * c
            return out
        w_t, e_t = taus[t]
        for grp in groups(+pool):
            gw = grp[0][0] if len(grp) == 1 else _add(grp[0][0], grp[1][0])
            gpsi = psi(grp[0]) if len(grp) == 1 else _add(psi(grp[0]), psi(grp[1]))
            if gpsi != w_t:
                continue
            gs = grp[0][1] if len(grp) == 1 else _add(grp[0][1], grp[1][1])
            if not member(gw, e_t, gs):
                continue
            nxt = pool.copy()
            nxt.subtract(Counter(grp))
            rest = walk(+nxt, t + 1)
            if rest is not None:
                return [(gw, e_t, gs)] + rest
        return None

    return walk(Counter(items), 0)


def _lift(target: AlgebraType, tau: Signature, items: list[Item], psi,
          k: Vec, svec: Vec) -> Lift:
    lower = tau.alg
    subsets = [sub_generators(lower, "minus"), sub_generators(lower, "plus")]
    zero_lower = (0,) * lower.num_positive_roots
    attempts = 0
    for gens in subsets:
        for parts in sorted(decomposer(gens).all(tau.highest, tau.exponents)):
            attempts += 1
            res = _match(target, items, list(parts), psi, zero_lower)
            if res is None:
                continue
            sig_parts = tuple(Signature(target, w, e + s) for w, e, s in res)
            images = tuple(Signature(lower, psi((w, s)), e) for w, e, s in res)
            total = Signature(target, k, tau.exponents + svec)
            acc_k = (0,) * target.rank
            acc_e = (0,) * target.num_positive_roots
            for p in sig_parts:
                acc_k, acc_e = _add(acc_k, p.highest), _add(acc_e, p.exponents)
            if (acc_k, acc_e) != (total.highest, total.exponents):
                raise AssertionError("lift pieces do not add up")
            return Lift(total, sig_parts, images, attempts)
    raise LiftError(f"no decomposition of {tau} could be matched with the cone pieces "
                    f"after {attempts} attempts")


def lift_b(tau: Signature, s: Sequence[int], k: Sequence[int]) -> Lift:
    """The B_n signature over tau with short-root exponents s and weight k."""
    n = tau.alg.rank
    s, k = tuple(s), tuple(k)
    if tau.alg.kind != "D" or len(s) != n or len(k) != n:
        raise LiftError("lift_b needs a D_n signature and n lifting parameters")
    if min(s) < 0 or any(ki < si for ki, si in zip(k, s)):
        raise LiftError(f"need k_i >= s_i >= 0, got k={k}, s={s}")
    if psi_weight_b(k, s) != tau.highest:
        raise LiftError(f"k={k}, s={s} project to {psi_weight_b(k, s)}, not {tau.highest}")
    target = AlgebraType("B", n)
    psi = lambda item: psi_weight_b(item[0], item[1])
    return _lift(target, tau, _b_items(k, s), psi, k, s)


def lift_d(tau: Signature, sminus: Sequence[int], splus: Sequence[int], k: Sequence[int]) -> Lift:
    """The D_{n+1} signature over tau with exponents s-/s+ on e_i -/+ e_{n+1}."""
    n = tau.alg.rank
    sm, sp, k = tuple(sminus), tuple(splus), tuple(k)
    if tau.alg.kind != "D" or len(sm) != n or len(sp) != n or len(k) != n + 1:
        raise LiftError("lift_d needs a D_n signature, 2n lifting parameters and n+1 weights")
    pt = ConePoint(k, sm, sp)
    bad = cone_violations(pt)
    if bad:
        raise LiftError(f"lifting parameters violate {', '.join(bad)}")
    if psi_weight_d(k, sm, sp) != tau.highest:
        raise LiftError(f"parameters project to {psi_weight_d(k, sm, sp)}, not {tau.highest}")
    target = AlgebraType("D", n + 1)

    def psi(item):
        w, sv = item
        return psi_weight_d(w, sv[:n], sv[n:])

    try:
        items = _d_items(k, sm, sp)
    except ConeError as exc:
        raise LiftError(str(exc)) from exc
    return _lift(target, tau, items, psi, k, sm + sp)


def lift(sig_lower: Signature, target: AlgebraType, svec: Sequence[int], k: Sequence[int]) -> Lift:
    if target.kind == "B":
        return lift_b(sig_lower, svec, k)
    n = sig_lower.alg.rank
    return lift_d(sig_lower, svec[:n], svec[n:], k)


def lift_parameters(sig: Signature) -> tuple[Vec, Vec]:
    """(new-root exponents, weight) of sig, i.e. what lift needs besides psi(sig)."""
    if sig.alg.kind == "B":
        return split_b(sig)[1], sig.highest
    _, sm, sp = split_d(sig)
    return sm + sp, sig.highest


def round_trip(sig: Signature) -> Lift:
    svec, k = lift_parameters(sig)
    return lift(psi_project(sig), sig.alg, svec, k)
