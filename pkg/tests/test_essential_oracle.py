from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
import sympy

from essig.rep_modules import RealizationError, realize, signature_vector, standard_module
from essig.essential_oracle import (EchelonBasis, essential_set, make_essential_set, nonzero_signatures,
                          oracle_essential)
from essig.root_system import B, D, Signature, signature_key
from essig.semigroup.closed_form import generators
from essig.weyl import weyl_dim


def essential_by_rank(m) -> set[tuple[int, ...]]:
    """Definition applied literally: walk all nonzero signatures in order, keep rank jumps."""
    sigs = sorted(nonzero_signatures(m), key=signature_key)
    rows, kept, rank = [], set(), 0
    for s in sigs:
        v = signature_vector(m, s)
        rows.append([v.get(i, 0) for i in range(m.dim)])
        r = sympy.Matrix(rows).rank()
        if r > rank:
            kept.add(s.exponents)
            rank = r
    return kept


@pytest.mark.parametrize("alg,k", [(D(2), (1, 0)), (D(2), (1, 2)), (B(2), (0, 1)), (B(2), (1, 0)),
                                   (B(2), (0, 2)), (D(3), (0, 1, 1))], ids=str)
def test_matches_literal_definition(alg, k):
    m = realize(alg, k)
    assert oracle_essential(alg, k).exponent_set() == essential_by_rank(m)


@pytest.mark.parametrize("alg,k", [(B(2), (1, 1)), (D(3), (1, 0, 1))], ids=str)
def test_unbatched_elimination_agrees(alg, k):
    m = realize(alg, k)
    a = essential_set(m).exponent_set()
    b = essential_set(m, batch_by_weight=False).exponent_set()
    assert a == b


def test_d2_tables():
    assert oracle_essential(D(2), (1, 0)).exponent_set() == {(0, 0), (1, 0)}
    assert oracle_essential(D(2), (0, 1)).exponent_set() == {(0, 0), (0, 1)}


FROZEN_B2 = {
    (1, 0): {(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 1, 0)},
    (0, 1): {(0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (1, 0, 0, 1)},
    (0, 2): {(0, 0, 0, 0), (0, 1, 0, 0), (0, 2, 0, 0), (0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 0, 1),
             (1, 1, 0, 1), (0, 0, 0, 2), (1, 0, 0, 2), (2, 0, 0, 2)},
}


@pytest.mark.parametrize("k", sorted(FROZEN_B2))
def test_b2_frozen(k):
    assert oracle_essential(B(2), k).exponent_set() == FROZEN_B2[k]


def test_d3_frozen():
    es = oracle_essential(D(3), (1, 0, 0))
    assert [s.exponents for s in es.signatures] == [
        (0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)]


def test_lex_direction_matters_for_b2_spin():
    first = oracle_essential(B(2), (0, 1), lex="first").exponent_set()
    last = oracle_essential(B(2), (0, 1), lex="last").exponent_set()
    assert (1, 0, 0, 1) in first and (1, 0, 0, 1) not in last
    assert len(first) == len(last) == 4


@pytest.mark.parametrize("alg", [D(2), D(3), B(2), B(3)], ids=str)
def test_cardinality(alg):
    for k in generators(alg):
        assert len(oracle_essential(alg, k)) == weyl_dim(alg, k)


def test_dimension_mismatch_is_reported():
    # the zero-weight vector of the standard module is dominant but generates
    # more than the trivial module
    m = standard_module(B(2))
    zero = m.weights.index((0, 0))
    bad = type(m)(m.alg, m.name, m.labels, m.weights, m.raising, m.lowering, zero)
    with pytest.raises(RealizationError):
        essential_set(bad)


def test_parallel_workers_agree():
    a = oracle_essential(B(2), (1, 1), workers=1)
    b = oracle_essential(B(2), (1, 1), workers=2)
    assert a.signatures == b.signatures


def test_essential_set_container():
    es = make_essential_set(D(2), (1, 0), [(1, 0), (0, 0), (1, 0)])
    assert len(es) == 2
    assert (1, 0) in es and Signature(D(2), (1, 0), (0, 0)) in es
    assert list(es.json_lines())[0] == {"weight": [1, 0], "exponents": [0, 0]}
    assert es.header()["count"] == 2


def test_echelon_basis_rank():
    rng = random.Random(3)
    for _ in range(20):
        vecs = [{i: rng.randint(-2, 2) for i in range(5) if rng.random() < 0.6} for _ in range(6)]
        eb = EchelonBasis()
        for v in vecs:
            eb.add({i: x for i, x in v.items() if x})
        mat = sympy.Matrix([[v.get(i, 0) for i in range(5)] for v in vecs])
        assert len(eb) == mat.rank()


@pytest.mark.parametrize("factors", range(5))
@pytest.mark.parametrize("alg,k", [(D(2), (2, 1)), (B(2), (1, 1))], ids=str)
def test_rescaling_invariance(alg, k, factors):
    rng = random.Random(factors)
    m = realize(alg, k)
    f = [Fraction(rng.choice([-5, -3, -2, -1, 1, 2, 3, 7]), rng.randint(1, 6)) for _ in m.lowering]
    assert essential_set(m.rescaled(f)).exponent_set() == essential_set(m).exponent_set()
