"""Explicit realizations of so(2n+1) and so(2n) modules with exact root operators.

Conventions:

* Standard module: basis e_1..e_n, (e_0 for B), e_{-n}..e_{-1}; the bilinear
  form pairs e_i with e_{-i} and e_0 with itself. Raising operators are
  E_{i,j}-E_{-j,-i} (e_i-e_j), E_{i,-j}-E_{j,-i} (e_i+e_j), E_{i,0}-E_{0,-i} (e_i).
  Lowering operators are their transposes, doubled for the short roots so that
  every pair satisfies [e_a, e_-a] = h_a with mu(h_a) = <mu, a-check>.
* Spin modules: basis of sign vectors; a "+" in slot i means the fermionic
  mode i is occupied. Root operators are quadratic in creation/annihilation
  operators; short roots of B_n use the parity operator.
* Tensor products carry the Leibniz action; only the cyclic span of the
  highest vector is ever used.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Callable, Literal, Mapping, Sequence

from .root_system import (AlgebraType, Root, Signature, WeightError, eps_to_fund,
                    positive_roots)
from .sparse import Scalar, SparseMatrix, Vector, vec_add, vec_div

Eps = tuple[Fraction, ...]


class RealizationError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleRealization:
    alg: AlgebraType
    name: str
    labels: tuple
    weights: tuple[Eps, ...]
    raising: tuple[SparseMatrix, ...]
    lowering: tuple[SparseMatrix, ...]
    highest: int
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.weights) != n:
            raise RealizationError("one weight per basis label required")
        N = self.alg.num_positive_roots
        if len(self.raising) != N or len(self.lowering) != N:
            raise RealizationError(f"{self.alg} needs {N} raising and lowering operators")
        if not 0 <= self.highest < n:
            raise RealizationError("highest vector index out of range")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def highest_weight(self) -> tuple[int, ...]:
        return eps_to_fund(self.alg, self.weights[self.highest])

    @property
    def lowering_ops(self) -> dict[Root, SparseMatrix]:
        return dict(zip(positive_roots(self.alg), self.lowering))

    @property
    def raising_ops(self) -> dict[Root, SparseMatrix]:
        return dict(zip(positive_roots(self.alg), self.raising))

    def highest_vector(self) -> Vector:
        return {self.highest: 1}

    def rescaled(self, factors: Sequence[Scalar]) -> "ModuleRealization":
        """Copy with each lowering operator multiplied by a nonzero factor."""
        if len(factors) != len(self.lowering):
            raise ValueError("one factor per positive root required")
        return replace(self, name=self.name + "*",
                       lowering=tuple(m.scaled(c) for m, c in zip(self.lowering, factors)))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "type": self.alg.kind,
            "rank": self.alg.rank,
            "labels": [_label_json(l) for l in self.labels],
            "weights": [[[x.numerator, x.denominator] for x in w] for w in self.weights],
            "highest": self.highest,
            "roots": [list(r) for r in positive_roots(self.alg)],
            "raising": [m.to_json() for m in self.raising],
            "lowering": [m.to_json() for m in self.lowering],
        }


def _label_json(label):
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    return label


# ---------------------------------------------------------------------------
# standard module and exterior powers

def standard_labels(alg: AlgebraType) -> list[int]:
    n = alg.rank
    labels = list(range(1, n + 1))
    if alg.kind == "B":
        labels.append(0)
    labels.extend(range(-n, 0))
    return labels


def _label_weight(alg: AlgebraType, label: int) -> Eps:
    w = [Fraction(0)] * alg.rank
    if label:
        w[abs(label) - 1] = Fraction(1 if label > 0 else -1)
    return tuple(w)


def _standard_raising_entries(alg: AlgebraType, root: Root) -> list[tuple[int, int, int]]:
    """Raising operator for ``root`` as (row label, column label, value) triples."""
    nz = [i + 1 for i, c in enumerate(root) if c]
    if len(nz) == 1:
        i = nz[0]
        return [(i, 0, 1), (0, -i, -1)]
    i, j = nz
    if root[j - 1] < 0:
        return [(i, j, 1), (-j, -i, -1)]
    return [(i, -j, 1), (j, -i, -1)]


def standard_module(alg: AlgebraType) -> ModuleRealization:
    labels = standard_labels(alg)
    idx = {l: k for k, l in enumerate(labels)}
    d = len(labels)
    raising, lowering = [], []
    for root in positive_roots(alg):
        ent = _standard_raising_entries(alg, root)
        short = sum(abs(c) for c in root) == 1
        raising.append(SparseMatrix.from_coo(((idx[r], idx[c], v) for r, c, v in ent), d, d))
        scale = 2 if short else 1
        lowering.append(SparseMatrix.from_coo(((idx[c], idx[r], scale * v) for r, c, v in ent), d, d))
    return ModuleRealization(alg, f"V_{alg}(w1)", tuple(labels),
                             tuple(_label_weight(alg, l) for l in labels),
                             tuple(raising), tuple(lowering), 0)


def _wedge_operator(op: SparseMatrix, basis: list[tuple[int, ...]],
                    index: dict[tuple[int, ...], int]) -> SparseMatrix:
    entries = []
    for c, b in enumerate(basis):
        for t, a in enumerate(b):
            for r, val in op.cols[a]:
                if r in b and r != a:
                    continue
                new = list(b)
                new[t] = r
                # b is sorted, so inversions only involve the replaced slot
                inv = sum(1 for q, x in enumerate(b) if (q < t and x > r) or (q > t and x < r))
                sign = -1 if inv % 2 else 1
                entries.append((index[tuple(sorted(new))], c, sign * val))
    return SparseMatrix.from_coo(entries, len(basis), len(basis))


def exterior_power_module(alg: AlgebraType, p: int,
                          highest: Literal["plus", "minus"] = "plus") -> ModuleRealization:
    """Lambda^p of the standard module with highest vector e_1 ^ ... ^ e_p.

    For D_n and p = n, ``highest="minus"`` selects e_1 ^ ... ^ e_{n-1} ^ e_{-n},
    which generates V(2 omega_{n-1}); "plus" generates V(2 omega_n).
    """
    n = alg.rank
    if not 1 <= p <= n:
        raise ValueError(f"exterior power degree must lie in 1..{n}, got {p}")
    std = standard_module(alg)
    if p == 1 and highest == "plus":
        return std
    d = std.dim
    basis = list(combinations(range(d), p))
    index = {b: k for k, b in enumerate(basis)}
    labels = tuple(tuple(std.labels[i] for i in b) for b in basis)
    weights = []
    for b in basis:
        w = [Fraction(0)] * n
        for i in b:
            for j, x in enumerate(std.weights[i]):
                w[j] += x
        weights.append(tuple(w))
    hv = tuple(range(p))
    if highest == "minus":
        if alg.kind != "D" or p != n:
            raise ValueError("the 'minus' highest vector exists only for D_n, p = n")
        hv = tuple(range(n - 1)) + (std.labels.index(-n),)
    raising = tuple(_wedge_operator(m, basis, index) for m in std.raising)
    lowering = tuple(_wedge_operator(m, basis, index) for m in std.lowering)
    tag = "" if highest == "plus" else "-"
    return ModuleRealization(alg, f"Lambda^{p}{tag} C({alg})", labels, tuple(weights),
                             raising, lowering, index[hv])


# ---------------------------------------------------------------------------
# spin modules

SignVec = tuple[int, ...]
FermionOp = Callable[[SignVec], list[tuple[int, SignVec]]]


def _jw_sign(s: SignVec, i: int) -> int:
    return -1 if sum(1 for x in s[:i] if x > 0) % 2 else 1


def _create(i: int) -> FermionOp:
    def op(s: SignVec):
        if s[i] > 0:
            return []
        t = list(s)
        t[i] = 1
        return [(_jw_sign(s, i), tuple(t))]
    return op


def _annihilate(i: int) -> FermionOp:
    def op(s: SignVec):
        if s[i] < 0:
            return []
        t = list(s)
        t[i] = -1
        return [(_jw_sign(s, i), tuple(t))]
    return op


def _parity(s: SignVec):
    return [(-1 if sum(1 for x in s if x > 0) % 2 else 1, s)]


def _compose(*ops: FermionOp) -> FermionOp:
    """Product ops[0] * ops[1] * ... acting right-to-left."""
    def op(s: SignVec):
        terms = [(1, s)]
        for f in reversed(ops):
            nxt = []
            for c, v in terms:
                for c2, v2 in f(v):
                    nxt.append((c * c2, v2))
            terms = nxt
        return terms
    return op


def _spin_root_ops(alg: AlgebraType, root: Root) -> tuple[FermionOp, FermionOp, Fraction]:
    """(raising, lowering, scale): the raising operator is scale * up, the lowering (1/scale) * down.

    For B_n the e_i + e_j operators carry a factor 2 so that the spin module
    and the standard module share structure constants; without it tensor
    products of the two would not be representations.
    """
    nz = [i for i, c in enumerate(root) if c]
    if len(nz) == 1:
        i = nz[0]
        return _compose(_create(i), _parity), _compose(_parity, _annihilate(i)), Fraction(1)
    i, j = nz
    if root[j] < 0:
        return _compose(_create(i), _annihilate(j)), _compose(_create(j), _annihilate(i)), Fraction(1)
    scale = Fraction(2) if alg.kind == "B" else Fraction(1)
    return _compose(_create(i), _create(j)), _compose(_annihilate(j), _annihilate(i)), scale


def spin_module(alg: AlgebraType, parity: Literal["full", "even", "odd"]) -> ModuleRealization:
    """Spin (B_n, parity "full") or half-spin (D_n, "even"/"odd") module.

    "even"/"odd" refer to the number of minus signs: even gives V(omega_n),
    odd gives V(omega_{n-1}).
    """
    n = alg.rank
    if alg.kind == "B" and parity != "full":
        raise ValueError("B_n has a single spin module; use parity='full'")
    if alg.kind == "D" and parity not in ("even", "odd"):
        raise ValueError("D_n half-spin modules need parity 'even' or 'odd'")
    basis = sorted(product((1, -1), repeat=n), reverse=True)
    if parity != "full":
        want = 0 if parity == "even" else 1
        basis = [s for s in basis if sum(1 for x in s if x < 0) % 2 == want]
    index = {s: k for k, s in enumerate(basis)}
    weights = tuple(tuple(Fraction(x, 2) for x in s) for s in basis)
    raising, lowering = [], []
    for root in positive_roots(alg):
        up, down, scale = _spin_root_ops(alg, root)
        for fop, store, factor in ((up, raising, scale), (down, lowering, 1 / scale)):
            entries = []
            for c, s in enumerate(basis):
                for coef, t in fop(s):
                    entries.append((index[t], c, coef * factor))
            store.append(SparseMatrix.from_coo(entries, len(basis), len(basis)))
    if parity == "odd":
        hv = (1,) * (n - 1) + (-1,)
    else:
        hv = (1,) * n
    name = f"S({alg})" if parity == "full" else f"S{'+' if parity == 'even' else '-'}({alg})"
    return ModuleRealization(alg, name, tuple(basis), weights, tuple(raising),
                             tuple(lowering), index[hv])


# ---------------------------------------------------------------------------
# trivial module and tensor products

def trivial_module(alg: AlgebraType) -> ModuleRealization:
    N = alg.num_positive_roots
    zero = SparseMatrix.zero(1)
    return ModuleRealization(alg, f"C({alg})", ((),), ((Fraction(0),) * alg.rank,),
                             (zero,) * N, (zero,) * N, 0)


def _tensor_op(a: SparseMatrix, b: SparseMatrix, da: int, db: int) -> SparseMatrix:
    entries = []
    for r, c, v in a.entries():
        for j in range(db):
            entries.append((r * db + j, c * db + j, v))
    for r, c, v in b.entries():
        for i in range(da):
            entries.append((i * db + r, i * db + c, v))
    return SparseMatrix.from_coo(entries, da * db, da * db)


def cyclic_tensor_module(m1: ModuleRealization, m2: ModuleRealization) -> ModuleRealization:
    """V1 (x) V2 with highest vector v1 (x) v2; its cyclic span is V(l1 + l2)."""
    if m1.alg != m2.alg:
        raise ValueError(f"cannot tensor {m1.alg} and {m2.alg} modules")
    if m1.dim == 1 and not any(m.nnz for m in m1.lowering):
        return m2
    if m2.dim == 1 and not any(m.nnz for m in m2.lowering):
        return m1
    d1, d2 = m1.dim, m2.dim
    labels = tuple((a, b) for a in m1.labels for b in m2.labels)
    weights = tuple(tuple(x + y for x, y in zip(wa, wb)) for wa in m1.weights for wb in m2.weights)
    raising = tuple(_tensor_op(a, b, d1, d2) for a, b in zip(m1.raising, m2.raising))
    lowering = tuple(_tensor_op(a, b, d1, d2) for a, b in zip(m1.lowering, m2.lowering))
    return ModuleRealization(m1.alg, f"{m1.name}(x){m2.name}", labels, weights,
                             raising, lowering, m1.highest * d2 + m2.highest)


def building_blocks(alg: AlgebraType, highest: Sequence[int]) -> list[ModuleRealization]:
    """Small modules whose highest weights add up to ``highest``."""
    n = alg.rank
    k = list(highest)
    if len(k) != n or any(x < 0 for x in k):
        raise WeightError(f"need {n} non-negative fundamental coefficients, got {highest}")
    blocks: list[ModuleRealization] = []
    if alg.kind == "B":
        for i in range(1, n):
            blocks += [exterior_power_module(alg, i)] * k[i - 1]
        blocks += [exterior_power_module(alg, n)] * (k[n - 1] // 2)
        blocks += [spin_module(alg, "full")] * (k[n - 1] % 2)
        return blocks
    for i in range(1, n - 1):
        blocks += [exterior_power_module(alg, i)] * k[i - 1]
    a, b = k[n - 2], k[n - 1]
    both = min(a, b)
    blocks += [exterior_power_module(alg, n - 1)] * both
    a -= both
    b -= both
    blocks += [exterior_power_module(alg, n, "minus")] * (a // 2)
    blocks += [spin_module(alg, "odd")] * (a % 2)
    blocks += [exterior_power_module(alg, n, "plus")] * (b // 2)
    blocks += [spin_module(alg, "even")] * (b % 2)
    return blocks


def realize(alg: AlgebraType, highest: Sequence[int]) -> ModuleRealization:
    """A module whose highest vector generates V(highest)."""
    blocks = building_blocks(alg, highest)
    if not blocks:
        return trivial_module(alg)
    m = blocks[0]
    for b in blocks[1:]:
        m = cyclic_tensor_module(m, b)
    if m.highest_weight != tuple(highest):
        raise RealizationError(f"built highest weight {m.highest_weight}, wanted {tuple(highest)}")
    return m


# ---------------------------------------------------------------------------
# signature vectors

def divided_power_step(m: ModuleRealization, root_index: int, vec: Mapping[int, Scalar], t: int) -> Vector:
    """From e^{t-1} v / (t-1)! to e^t v / t! for the lowering operator of a root."""
    return vec_div(m.lowering[root_index].apply(vec), t)


def divided_power(m: ModuleRealization, root_index: int, p: int, vec: Mapping[int, Scalar]) -> Vector:
    out = dict(vec)
    for t in range(1, p + 1):
        if not out:
            break
        out = divided_power_step(m, root_index, out, t)
    return out


def signature_vector(m: ModuleRealization, sig: Signature) -> Vector:
    """v(sigma): divided powers applied to the highest vector, last root first."""
    if sig.alg != m.alg:
        raise ValueError("signature and module belong to different algebras")
    if tuple(sig.highest) != m.highest_weight:
        raise WeightError(f"signature highest weight {sig.highest} != module {m.highest_weight}")
    vec: Vector = m.highest_vector()
    for j in range(len(sig.exponents) - 1, -1, -1):
        p = sig.exponents[j]
        if p:
            vec = divided_power(m, j, p, vec)
            if not vec:
                return {}
    return vec


def plain_power_vector(m: ModuleRealization, root_index: int, p: int, vec: Mapping[int, Scalar]) -> Vector:
    """e^p v / p!, computed by plain powers and one final division."""
    out = dict(vec)
    for _ in range(p):
        out = m.lowering[root_index].apply(out)
    return vec_div(out, factorial(p))


# ---------------------------------------------------------------------------
# structural checks

def check_weight_bookkeeping(m: ModuleRealization) -> None:
    for root, low, up in zip(positive_roots(m.alg), m.lowering, m.raising):
        for r, c, _ in low.entries():
            if tuple(a - b for a, b in zip(m.weights[c], root)) != m.weights[r]:
                raise RealizationError(f"{m.name}: lowering {root} breaks weights at ({r},{c})")
        for r, c, _ in up.entries():
            if tuple(a + b for a, b in zip(m.weights[c], root)) != m.weights[r]:
                raise RealizationError(f"{m.name}: raising {root} breaks weights at ({r},{c})")


def check_highest_vector(m: ModuleRealization) -> None:
    hv = m.highest_vector()
    for root, up in zip(positive_roots(m.alg), m.raising):
        if up.apply(hv):
            raise RealizationError(f"{m.name}: raising operator {root} does not kill the highest vector")


def _coroot_pairing(weight: Eps, root: Root) -> Fraction:
    norm = sum(c * c for c in root)
    return Fraction(2) * sum(w * c for w, c in zip(weight, root)) / norm


def check_commutation(m: ModuleRealization, roots: str = "all") -> None:
    """[e_a, e_-a] acts on each weight vector by <mu, a-check>."""
    selected = range(m.alg.num_positive_roots)
    if roots == "simple":
        from .root_system import simple_roots, root_index
        selected = [root_index(m.alg, r) for r in simple_roots(m.alg)]
    proots = positive_roots(m.alg)
    for j in selected:
        e, f = m.raising[j], m.lowering[j]
        for b in range(m.dim):
            v = {b: 1}
            comm = vec_add(e.apply(f.apply(v)), f.apply(e.apply(v)), -1)
            want = _coroot_pairing(m.weights[b], proots[j])
            expect = {b: want} if want else {}
            if comm != expect:
                raise RealizationError(f"{m.name}: [e,f] for root {proots[j]} wrong on basis {b}")


def _apply_columns(op: SparseMatrix, other: SparseMatrix, d: int) -> list[dict]:
    return [op.apply(dict(other.cols[c])) for c in range(d)]


def structure_constants(m: ModuleRealization) -> dict[tuple[Root, Root], Fraction]:
    """c with [X_a, X_b] = c X_{a+b} for roots a, b (either sign) with a+b a root or zero-free.

    Pairs whose sum is not a root get c = 0 after checking the bracket
    vanishes. Pairs where X_{a+b} acts as zero on m are skipped.
    """
    proots = positive_roots(m.alg)
    ops: dict[Root, SparseMatrix] = {}
    for r, up, low in zip(proots, m.raising, m.lowering):
        ops[r] = up
        ops[tuple(-c for c in r)] = low
    keys = sorted(ops)
    d = m.dim
    out: dict[tuple[Root, Root], Fraction] = {}
    for a in keys:
        for b in keys:
            s = tuple(x + y for x, y in zip(a, b))
            if not any(s) or a >= b:
                continue
            ab = _apply_columns(ops[a], ops[b], d)
            ba = _apply_columns(ops[b], ops[a], d)
            comm = [vec_add(x, y, -1) for x, y in zip(ab, ba)]
            target = ops.get(s)
            if target is None:
                if any(comm):
                    raise RealizationError(f"{m.name}: [X{a}, X{b}] should vanish")
                out[(a, b)] = Fraction(0)
                continue
            if not target.nnz:
                if any(comm):
                    raise RealizationError(f"{m.name}: [X{a}, X{b}] nonzero but X{s} acts as zero")
                continue
            ratio = None
            for c in range(d):
                tcol = dict(target.cols[c])
                if set(tcol) != set(comm[c]):
                    raise RealizationError(f"{m.name}: [X{a}, X{b}] not proportional to X{s}")
                for i, x in tcol.items():
                    q = Fraction(comm[c][i]) / x
                    if ratio is None:
                        ratio = q
                    elif q != ratio:
                        raise RealizationError(f"{m.name}: [X{a}, X{b}] not proportional to X{s}")
            out[(a, b)] = ratio
    return out


def check_brackets(m: ModuleRealization) -> None:
    """Brackets of root operators match those of the standard module.

    Agreement with one reference is what makes tensor products of different
    realizations into representations.
    """
    ref = structure_constants(standard_module(m.alg))
    mine = structure_constants(m)
    for key, c in mine.items():
        if key in ref and ref[key] != c:
            raise RealizationError(f"{m.name}: [X{key[0]}, X{key[1]}] has constant {c}, "
                                   f"standard module has {ref[key]}")
