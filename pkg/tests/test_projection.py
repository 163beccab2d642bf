from __future__ import annotations

import itertools

import pytest

from essig.essential_oracle import oracle_essential
from essig.root_system import B, D, Signature
from essig.semigroup.closed_form import closed_form_exponents, generator_signatures, generators
from essig.semigroup.projection import (LiftError, NotInImageError, lift, lift_b, lift_d,
                                        lift_parameters, psi_project, psi_project_b,
                                        psi_project_d, psi_weight_b, psi_weight_d, round_trip)


def all_generator_signatures(alg):
    return [s for k in generators(alg) for s in generator_signatures(alg, k)]


def test_weight_maps():
    assert psi_weight_b((0, 1), (0, 0)) == (0, 1)
    assert psi_weight_b((0, 2), (0, 1)) == (1, 1)
    assert psi_weight_b((1, 0, 0), (1, 0, 0)) == (0, 0, 0)
    assert psi_weight_d((0, 0, 1), (0, 0), (0, 1)) == (1, 0)
    assert psi_weight_d((0, 1, 0), (0, 0), (0, 0)) == (0, 1)


def test_projection_examples():
    s = Signature(B(2), (0, 2), (0, 1, 0, 1))
    t = psi_project_b(s)
    assert t.alg == D(2) and t.exponents == (0, 1) and t.highest == (1, 1)
    with pytest.raises(ValueError):
        psi_project_b(Signature(D(2), (1, 0), (0, 0)))
    with pytest.raises(ValueError):
        psi_project_d(Signature(D(2), (1, 0), (0, 0)))
    with pytest.raises(NotInImageError):
        psi_project(Signature(B(2), (0, 0), (0, 0, 0, 1)))


def test_padding_lift():
    tau = Signature(D(2), (1, 1), (1, 0))
    got = lift_b(tau, (0, 0), (1, 0)).signature
    # w1 of B_2 restricts to e1 = w1 + w2 of D_2
    assert got == Signature(B(2), (1, 0), (1, 0, 0, 0))


@pytest.mark.parametrize("alg", [B(2), B(3), B(4), D(3), D(4)], ids=str)
def test_round_trip_on_generators(alg):
    for s in all_generator_signatures(alg):
        res = round_trip(s)
        assert res.signature == s
        assert all(p.highest in generators(alg) for p in res.parts)


@pytest.mark.parametrize("alg", [B(2), B(3), D(3)], ids=str)
def test_fibers_are_injective(alg):
    for k in generators(alg):
        seen = {}
        for s in generator_signatures(alg, k):
            key = (psi_project(s), lift_parameters(s)[0])
            assert key not in seen
            seen[key] = s


@pytest.mark.parametrize("alg", [B(2), D(3), B(3)], ids=str)
def test_psi_additive_on_pairs(alg):
    sigs = all_generator_signatures(alg)
    for a, b in itertools.combinations_with_replacement(sigs, 2):
        try:
            pa, pb = psi_project(a), psi_project(b)
        except NotInImageError:
            continue
        assert psi_project(a + b) == pa + pb


@pytest.mark.parametrize("alg", [B(2), B(3), D(3)], ids=str)
def test_lift_pair_weights(alg):
    """Every essential signature of a sum of two generators lifts into generator pieces."""
    gens = list(generators(alg))
    for a, b in itertools.combinations_with_replacement(gens, 2):
        lam = tuple(x + y for x, y in zip(a, b))
        for s in oracle_essential(alg, lam).signatures:
            res = round_trip(s)
            assert res.signature == s
            for p in res.parts:
                assert p.exponents in closed_form_exponents(alg, p.highest)


def test_lift_errors():
    tau = Signature(D(2), (1, 0), (0, 0))
    with pytest.raises(LiftError):
        lift_b(tau, (1, 0), (0, 0))           # s exceeds k
    with pytest.raises(LiftError):
        lift_b(tau, (0, 0), (0, 1))           # wrong projected weight
    with pytest.raises(LiftError):
        lift_d(tau, (0, 0), (1, 0), (0, 0, 0))  # outside the cone
    with pytest.raises(LiftError):
        lift_b(tau, (0,), (1, 0))


def test_lift_dispatch():
    s = Signature(D(3), (0, 0, 1), (0, 1, 0, 0, 0, 0))
    svec, k = lift_parameters(s)
    assert lift(psi_project(s), D(3), svec, k).signature == s
