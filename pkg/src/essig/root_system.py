"""Root systems of types B_n and D_n, weights, signatures and the signature order.

Positive roots are stored as integer tuples in epsilon coordinates and are
numbered recursively:

* D_2: e1-e2, e1+e2
* D_m (m > 2): roots of D_{m-1}, then e_i - e_m (i < m), then e_i + e_m (i < m)
* B_n: roots of D_n, then e_1, ..., e_n

Every exponent tuple in the package uses this layout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Sequence

Root = tuple[int, ...]
LexDirection = Literal["first", "last"]

LAYOUT_VERSION = 1
DEFAULT_LEX: LexDirection = "first"


class InvalidRankError(ValueError):
    pass


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraType:
    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in ("B", "D"):
            raise ValueError(f"unsupported type {self.kind!r}; expected 'B' or 'D'")
        if not isinstance(self.rank, int) or self.rank < 2:
            raise InvalidRankError(f"rank must be an integer >= 2, got {self.rank!r}")

    @property
    def n(self) -> int:
        return self.rank

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        return n * n if self.kind == "B" else n * (n - 1)

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        text = text.strip().upper().replace("_", "")
        return cls(text[0], int(text[1:]))


def B(n: int) -> AlgebraType:
    return AlgebraType("B", n)


def D(n: int) -> AlgebraType:
    return AlgebraType("D", n)


def _unit(n: int, i: int, sign: int = 1) -> list[int]:
    v = [0] * n
    v[i] = sign
    return v


@lru_cache(maxsize=None)
def _d_roots(n: int) -> tuple[Root, ...]:
    # indices are zero-based: root e_i +- e_j has i < j
    if n == 2:
        return ((1, -1), (1, 1))
    prev = tuple(r + (0,) for r in _d_roots(n - 1))
    minus = []
    plus = []
    for i in range(n - 1):
        r = [0] * n
        r[i] = 1
        r[n - 1] = -1
        minus.append(tuple(r))
        r = [0] * n
        r[i] = 1
        r[n - 1] = 1
        plus.append(tuple(r))
    return prev + tuple(minus) + tuple(plus)


def positive_roots(alg: AlgebraType) -> tuple[Root, ...]:
    """Positive roots in the fixed numeration used for all exponent tuples."""
    return _positive_roots(alg.kind, alg.rank)


@lru_cache(maxsize=None)
def _positive_roots(kind: str, n: int) -> tuple[Root, ...]:
    if n < 2:
        raise InvalidRankError(f"rank must be >= 2, got {n}")
    roots = _d_roots(n)
    if kind == "B":
        roots = roots + tuple(tuple(_unit(n, i)) for i in range(n))
    return roots


@lru_cache(maxsize=None)
def _root_index(kind: str, n: int) -> dict[Root, int]:
    return {r: i for i, r in enumerate(_positive_roots(kind, n))}


def root_index(alg: AlgebraType, root: Sequence[int]) -> int:
    return _root_index(alg.kind, alg.rank)[tuple(root)]


def pair_root_index(alg: AlgebraType, i: int, j: int, sign: int) -> int:
    """Index of the root e_i + sign*e_j, with 1-based i < j."""
    r = [0] * alg.rank
    r[i - 1] = 1
    r[j - 1] = sign
    return root_index(alg, r)


def short_root_index(alg: AlgebraType, i: int) -> int:
    """Index of the short root e_i (1-based) of B_n."""
    if alg.kind != "B":
        raise ValueError("short roots exist only in type B")
    return alg.rank * (alg.rank - 1) + i - 1


def root_to_str(root: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(root):
        if c:
            parts.append(("+" if c > 0 else "-") + f"e{i + 1}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------
# weights

def fundamental_weight_eps(alg: AlgebraType, i: int) -> tuple[Fraction, ...]:
    """omega_i (1-based) in epsilon coordinates."""
    n = alg.rank
    if not 1 <= i <= n:
        raise ValueError(f"fundamental weight index {i} out of range 1..{n}")
    half = Fraction(1, 2)
    if i == n:
        return tuple(half for _ in range(n))
    if alg.kind == "D" and i == n - 1:
        return tuple(half for _ in range(n - 1)) + (-half,)
    return tuple(Fraction(1) if j < i else Fraction(0) for j in range(n))


def hat_weight_eps(alg: AlgebraType, p: int) -> tuple[Fraction, ...]:
    """The weight e_1 + ... + e_p (hatted fundamental weight)."""
    n = alg.rank
    if not 0 <= p <= n:
        raise ValueError(f"index {p} out of range 0..{n}")
    return tuple(Fraction(1) if j < p else Fraction(0) for j in range(n))


def fund_to_eps(alg: AlgebraType, k: Sequence[int]) -> tuple[Fraction, ...]:
    n = alg.rank
    if len(k) != n:
        raise WeightError(f"expected {n} fundamental coefficients, got {len(k)}")
    out = [Fraction(0)] * n
    for i, ki in enumerate(k, start=1):
        if ki:
            for j, c in enumerate(fundamental_weight_eps(alg, i)):
                out[j] += ki * c
    return tuple(out)


def eps_to_fund(alg: AlgebraType, eps: Sequence[Fraction]) -> tuple[int, ...]:
    """Coefficients of a weight in the fundamental basis; raises if non-integral."""
    n = alg.rank
    l = [Fraction(x) for x in eps]
    if len(l) != n:
        raise WeightError(f"expected {n} epsilon coordinates, got {len(l)}")
    k = [l[i] - l[i + 1] for i in range(n - 1)]
    if alg.kind == "B":
        k.append(2 * l[n - 1])
    else:
        k.append(l[n - 2] + l[n - 1])
    if any(x.denominator != 1 for x in k):
        raise WeightError(f"weight {tuple(map(str, l))} is not integral")
    return tuple(int(x) for x in k)


@dataclass(frozen=True)
class Weight:
    alg: AlgebraType
    eps: tuple[Fraction, ...]

    @classmethod
    def from_fund(cls, alg: AlgebraType, k: Sequence[int]) -> "Weight":
        return cls(alg, fund_to_eps(alg, k))

    @classmethod
    def from_eps(cls, alg: AlgebraType, eps: Iterable) -> "Weight":
        eps = tuple(Fraction(x) for x in eps)
        if len(eps) != alg.rank:
            raise WeightError("length mismatch")
        if any(x.denominator not in (1, 2) for x in eps):
            raise WeightError("epsilon coordinates must be half-integers")
        return cls(alg, eps)

    @property
    def fund(self) -> tuple[int, ...]:
        return eps_to_fund(self.alg, self.eps)

    def is_dominant(self) -> bool:
        try:
            k = self.fund
        except WeightError:
            return False
        return all(x >= 0 for x in k)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.alg, tuple(a + b for a, b in zip(self.eps, other.eps)))

    def to_json(self) -> list[list[int]]:
        return [[x.numerator, x.denominator] for x in self.eps]


def fundamental_weights(alg: AlgebraType) -> list[Weight]:
    return [Weight(alg, fundamental_weight_eps(alg, i)) for i in range(1, alg.rank + 1)]


def hat_weights(alg: AlgebraType) -> list[Weight]:
    """omega-hat_1, ..., omega-hat_n as fundamental-coefficient weights.

    For D_n the last two entries are omega_{n-1}+omega_n and omega_n; for B_n
    the last entry is 2*omega_n.
    """
    return [Weight(alg, hat_weight_eps(alg, p)) if p < alg.rank or alg.kind == "B"
            else Weight(alg, fundamental_weight_eps(alg, p))
            for p in range(1, alg.rank + 1)]


def hat_fund(alg: AlgebraType, p: int) -> tuple[int, ...]:
    """Fundamental coefficients of omega-hat_p; p = 0 gives the zero weight."""
    n = alg.rank
    k = [0] * n
    if p == 0:
        return tuple(k)
    if alg.kind == "D" and p == n - 1:
        k[n - 2] = k[n - 1] = 1
    elif alg.kind == "B" and p == n:
        k[n - 1] = 2
    else:
        k[p - 1] = 1
    return tuple(k)


def unit_fund(n: int, i: int, mult: int = 1) -> tuple[int, ...]:
    """mult * omega_i as a fundamental-coefficient tuple; i <= 0 gives zero."""
    k = [0] * n
    if i >= 1:
        k[i - 1] = mult
    return tuple(k)


def simple_roots(alg: AlgebraType) -> list[Root]:
    n = alg.rank
    out = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        out.append(tuple(r))
    r = [0] * n
    if alg.kind == "B":
        r[n - 1] = 1
    else:
        r[n - 2] = r[n - 1] = 1
    out.append(tuple(r))
    return out


# ---------------------------------------------------------------------------
# signatures

@dataclass(frozen=True)
class Signature:
    alg: AlgebraType
    highest: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.highest) != self.alg.rank:
            raise WeightError(f"highest weight needs {self.alg.rank} coefficients")
        if len(self.exponents) != self.alg.num_positive_roots:
            raise ValueError(
                f"{self.alg} signatures need {self.alg.num_positive_roots} exponents, "
                f"got {len(self.exponents)}")
        if any(x < 0 for x in self.highest):
            raise WeightError("highest weight must be dominant")
        if any(x < 0 for x in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def highest_weight(self) -> Weight:
        return Weight.from_fund(self.alg, self.highest)

    def weight(self) -> tuple[Fraction, ...]:
        """lambda - sum p_i alpha_i in epsilon coordinates."""
        eps = list(fund_to_eps(self.alg, self.highest))
        for p, root in zip(self.exponents, positive_roots(self.alg)):
            if p:
                for j, c in enumerate(root):
                    eps[j] -= p * c
        return tuple(eps)

    def __add__(self, other: "Signature") -> "Signature":
        if other.alg != self.alg:
            raise ValueError("cannot add signatures of different algebras")
        return Signature(self.alg,
                         tuple(a + b for a, b in zip(self.highest, other.highest)),
                         tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def degree(self) -> int:
        return sum(self.highest)

    def to_json(self) -> dict:
        return {"type": self.alg.kind, "rank": self.alg.rank,
                "weight": list(self.highest), "exponents": list(self.exponents)}


def zero_signature(alg: AlgebraType, highest: Sequence[int] | None = None) -> Signature:
    hw = tuple(highest) if highest is not None else (0,) * alg.rank
    return Signature(alg, hw, (0,) * alg.num_positive_roots)


# ---------------------------------------------------------------------------
# orders

@lru_cache(maxsize=None)
def exponent_blocks(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Root-index blocks in comparison priority order.

    D_n: (e_i+e_n), (e_i-e_n), (e_i+e_{n-1}), (e_i-e_{n-1}), ..., (e1+e2), (e1-e2).
    B_n: the short roots e_1..e_n first, then the D_n blocks.
    """
    blocks = []
    if kind == "B":
        base = n * (n - 1)
        blocks.append(tuple(range(base, base + n)))
    for m in range(n, 1, -1):
        start = (m - 1) * (m - 2)
        width = m - 1
        blocks.append(tuple(range(start + width, start + 2 * width)))
        blocks.append(tuple(range(start, start + width)))
    return tuple(blocks)


def _deglex_key(values: Sequence[int], lex: LexDirection) -> tuple[int, ...]:
    vals = tuple(values) if lex == "first" else tuple(reversed(values))
    return (sum(vals),) + vals


def exponent_key(alg: AlgebraType, exps: Sequence[int], lex: LexDirection = DEFAULT_LEX) -> tuple[int, ...]:
    """Sort key realizing the block degree-lexicographic monomial order."""
    if len(exps) != alg.num_positive_roots:
        raise ValueError(f"expected {alg.num_positive_roots} exponents, got {len(exps)}")
    key: tuple[int, ...] = ()
    for block in exponent_blocks(alg.kind, alg.rank):
        key += _deglex_key([exps[i] for i in block], lex)
    return key


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare_exponents(alg: AlgebraType, a: Sequence[int], b: Sequence[int],
                      lex: LexDirection = DEFAULT_LEX) -> int:
    """-1, 0 or 1 as a <, =, > b in the monomial order."""
    if len(a) != len(b):
        raise ValueError("exponent tuples differ in length")
    return _cmp(exponent_key(alg, a, lex), exponent_key(alg, b, lex))


def signature_key(sig: Signature, lex: LexDirection = DEFAULT_LEX) -> tuple[int, ...]:
    return _deglex_key(sig.highest, lex) + exponent_key(sig.alg, sig.exponents, lex)


def compare_signatures(s: Signature, t: Signature, lex: LexDirection = DEFAULT_LEX) -> int:
    if s.alg != t.alg:
        raise ValueError("signatures belong to different algebras")
    return _cmp(signature_key(s, lex), signature_key(t, lex))


# ---------------------------------------------------------------------------
# serialization

def frac_pair(x: Fraction) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def export_header(alg: AlgebraType, lex: LexDirection = DEFAULT_LEX) -> dict:
    return {
        "type": alg.kind,
        "rank": alg.rank,
        "layout_version": LAYOUT_VERSION,
        "lex": lex,
        "roots": [list(r) for r in positive_roots(alg)],
    }
