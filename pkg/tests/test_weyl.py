from __future__ import annotations

import itertools
from math import comb

import pytest

from essig.rep_modules import realize
from essig.essential_oracle import EchelonBasis
from essig.root_system import B, D, Weight, WeightError
from essig.weyl import rho, weyl_dim


def cyclic_span_dim(m) -> int:
    """Dimension of the span of all lowering words applied to the highest vector."""
    basis = EchelonBasis()
    basis.add(m.highest_vector())
    frontier = [m.highest_vector()]
    while frontier:
        nxt = []
        for v in frontier:
            for op in m.lowering:
                w = op.apply(v)
                if w and basis.add(w):
                    nxt.append(w)
        frontier = nxt
    return len(basis)


@pytest.mark.parametrize("alg", [B(2), D(2), B(4), D(5)])
def test_trivial(alg):
    assert weyl_dim(alg, (0,) * alg.rank) == 1


@pytest.mark.parametrize("k,l", list(itertools.product(range(5), repeat=2)))
def test_d2_product(k, l):
    assert weyl_dim(D(2), (k, l)) == (k + 1) * (l + 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_exterior_and_spin(n):
    for p in range(1, n):
        assert weyl_dim(B(n), tuple(int(i == p - 1) for i in range(n))) == comb(2 * n + 1, p)
    assert weyl_dim(B(n), (0,) * (n - 1) + (2,)) == comb(2 * n + 1, n)
    assert weyl_dim(B(n), (0,) * (n - 1) + (1,)) == 2 ** n
    for p in range(1, n - 1):
        assert weyl_dim(D(n), tuple(int(i == p - 1) for i in range(n))) == comb(2 * n, p)
    assert weyl_dim(D(n), (0,) * (n - 2) + (1, 1)) == comb(2 * n, n - 1)
    assert weyl_dim(D(n), (0,) * (n - 1) + (2,)) == comb(2 * n, n) // 2
    assert weyl_dim(D(n), (0,) * (n - 1) + (1,)) == 2 ** (n - 1)


def test_small_values():
    assert weyl_dim(B(2), (0, 1)) == 4
    assert weyl_dim(B(2), (0, 2)) == 10
    assert [weyl_dim(B(2), k) for k in [(1, 1), (2, 0), (0, 3), (2, 2)]] == [16, 14, 20, 81]
    assert [weyl_dim(D(4), k) for k in [(0, 1, 0, 0), (1, 0, 1, 1), (0, 0, 2, 0)]] == [28, 350, 35]


def test_accepts_weight_objects():
    assert weyl_dim(B(3), Weight.from_fund(B(3), (1, 0, 1))) == weyl_dim(B(3), (1, 0, 1))


def test_rho():
    assert rho(D(2)) == (1, 0)
    assert rho(B(2)) == (1.5, 0.5)


def test_non_dominant():
    with pytest.raises(WeightError):
        weyl_dim(D(2), (-1, 0))
    with pytest.raises(WeightError):
        weyl_dim(D(2), Weight.from_eps(D(2), (0, 1)))


WEIGHTS = [(B(2), k) for k in itertools.product(range(3), repeat=2)]
WEIGHTS += [(D(3), k) for k in [(1, 1, 0), (0, 1, 1), (1, 0, 2), (2, 1, 0)]]
WEIGHTS += [(B(3), k) for k in [(1, 0, 1), (0, 1, 1), (1, 1, 0)]]


@pytest.mark.parametrize("alg,k", WEIGHTS, ids=lambda x: str(x))
def test_matches_cyclic_span(alg, k):
    assert weyl_dim(alg, k) == cyclic_span_dim(realize(alg, k))
