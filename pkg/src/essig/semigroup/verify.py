"""Machine-readable verification reports.

Every function returns a JSON-serializable dict with at least ``check``,
``algebra``, ``passed`` and ``counterexample`` (the first failure, or None).
"""
from __future__ import annotations

from typing import Iterable, Sequence

from ..essential_oracle import oracle_essential
from ..root_system import AlgebraType, unit_fund
from ..weyl import weyl_dim
from .closed_form import closed_form, generators
from .cone import ConePoint, cone_decompose, cone_points
from .decompose import (check_dagger, check_property_double_star, check_property_star,
                        check_saturation, excluded_pair, generator_pairs)
from .inequalities import inequality_system, point_set
from .projection import LiftError, NotInImageError, round_trip

Vec = tuple[int, ...]


def _report(check: str, alg: AlgebraType, passed: bool, counterexample=None, **counts) -> dict:
    out = {"check": check, "algebra": str(alg), "passed": bool(passed)}
    out.update(counts)
    out["counterexample"] = counterexample
    return out


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def pair_weights(alg: AlgebraType) -> list[Vec]:
    """Generator weights together with every w_i + w_j (i <= j), sorted."""
    n = alg.rank
    ws = set(generators(alg))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            ws.add(_add(unit_fund(n, i), unit_fund(n, j)))
    return sorted(ws)


def closed_form_report(alg: AlgebraType, weights: Iterable[Sequence[int]] | None = None) -> dict:
    """Closed-form sets against the oracle and against weyl_dim."""
    rows, bad = [], None
    for k in (weights or generators(alg)):
        k = tuple(k)
        cf = closed_form(alg, k)
        oracle = oracle_essential(alg, k).exponent_set()
        dim = weyl_dim(alg, k)
        row = {"weight": list(k), "closed": len(cf.exponents), "oracle": len(oracle), "dim": dim,
               "overlap": cf.overlap, "equal": cf.exponents == oracle}
        rows.append(row)
        if bad is None and not (row["equal"] and len(oracle) == dim):
            bad = {"weight": list(k),
                   "closed_only": [list(e) for e in sorted(cf.exponents - oracle)[:5]],
                   "oracle_only": [list(e) for e in sorted(oracle - cf.exponents)[:5]]}
    return _report("closed-form", alg, bad is None, bad, weights=rows)


def inequalities_report(alg: AlgebraType, weights: Iterable[Sequence[int]] | None = None,
                        systems: Sequence[str] = ("explicit", "recursive")) -> dict:
    rows, bad = [], None
    for k in (weights or pair_weights(alg)):
        k = tuple(k)
        oracle = oracle_essential(alg, k).exponent_set()
        row = {"weight": list(k), "oracle": len(oracle)}
        for name in systems:
            pts = point_set(inequality_system(alg, name), k)
            row[name] = len(pts)
            if bad is None and pts != oracle:
                bad = {"weight": list(k), "system": name,
                       "extra": [list(e) for e in sorted(pts - oracle)[:5]],
                       "missing": [list(e) for e in sorted(oracle - pts)[:5]]}
        rows.append(row)
    return _report("inequalities", alg, bad is None, bad,
                   forms={s: len(inequality_system(alg, s)) for s in systems}, weights=rows)


def star_report(alg: AlgebraType, weights: Iterable[Sequence[int]] | None = None) -> dict:
    """Connectivity of the rewrite graph for every essential signature of each weight."""
    if weights is None:
        weights = sorted({_add(a, b) for a, b in generator_pairs(alg)})
    checked = decs = 0
    bad = None
    for k in weights:
        for sig in oracle_essential(alg, tuple(k)).signatures:
            res = check_property_star(sig)
            checked += 1
            decs += res.decompositions
            if bad is None and not res.connected:
                bad = {"weight": list(sig.highest), "exponents": list(sig.exponents),
                       "decompositions": res.decompositions, "components": res.components}
    return _report("star", alg, bad is None, bad, signatures=checked, decompositions=decs)


def doublestar_report(alg: AlgebraType) -> dict:
    rows, bad, skipped = [], None, []
    for a, b in generator_pairs(alg):
        res = check_property_double_star(alg, a, b)
        row = res.to_json()
        if excluded_pair(alg, a, b):
            row["excluded"] = True
            skipped.append(row)
            continue
        rows.append(row)
        if bad is None and not res.passed:
            bad = row
    return _report("doublestar", alg, bad is None, bad, pairs=rows, excluded=skipped)


def saturation_report(alg: AlgebraType, bound: int, system: str = "explicit") -> dict:
    rep = check_saturation(alg, bound, system=system)
    bad = None
    if rep.failures:
        s = rep.failures[0]
        bad = {"weight": list(s.highest), "exponents": list(s.exponents)}
    return _report("saturation", alg, rep.passed, bad, bound=bound, system=system,
                   weights=rep.weights, points=rep.points, failures=len(rep.failures))


def dagger_report(alg: AlgebraType, use_oracle: bool = True) -> dict:
    rep = check_dagger(alg, use_oracle=use_oracle)
    bad = None
    if rep.failures:
        s = rep.failures[0]
        bad = {"weight": list(s.highest), "exponents": list(s.exponents)}
    return _report("dagger", alg, rep.passed, bad, signatures=rep.checked)


def lift_report(alg: AlgebraType) -> dict:
    """Project and lift back every essential signature of each generator."""
    checked, bad = 0, None
    for k in generators(alg):
        for sig in oracle_essential(alg, k).signatures:
            checked += 1
            try:
                got = round_trip(sig).signature
                ok = got == sig
            except (LiftError, NotInImageError) as exc:
                got, ok = str(exc), False
            if bad is None and not ok:
                bad = {"weight": list(k), "exponents": list(sig.exponents), "got": str(got)}
    return _report("lift", alg, bad is None, bad, signatures=checked)


def cone_report(n: int, bound: int) -> dict:
    checked, bad = 0, None
    for pt in cone_points(n, bound):
        checked += 1
        parts = cone_decompose(pt)
        total = ConePoint.zero(n)
        for _, v in parts:
            total = total + v
        if bad is None and total != pt:
            bad = {"point": [list(pt.k), list(pt.sminus), list(pt.splus)]}
    return {"check": "cone", "rank": n, "bound": bound, "passed": bad is None,
            "points": checked, "counterexample": bad}
