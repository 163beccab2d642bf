from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from essig.rep_modules import (RealizationError, building_blocks, check_brackets, check_commutation,
                           check_highest_vector, check_weight_bookkeeping, cyclic_tensor_module,
                           divided_power, exterior_power_module, plain_power_vector, realize,
                           signature_vector, spin_module, standard_module, structure_constants,
                           trivial_module)
from essig.root_system import B, D, Signature, WeightError, hat_fund
from essig.sparse import SparseMatrix, primitive_int_vector, vec_add

ALGEBRAS = [D(2), D(3), D(4), B(2), B(3)]


def all_blocks(alg):
    n = alg.rank
    mods = [standard_module(alg), trivial_module(alg)]
    mods += [exterior_power_module(alg, p) for p in range(2, n + 1)]
    if alg.kind == "D":
        mods += [exterior_power_module(alg, n, "minus"), spin_module(alg, "even"),
                 spin_module(alg, "odd")]
    else:
        mods.append(spin_module(alg, "full"))
    return mods


BLOCKS = [(alg, m) for alg in ALGEBRAS for m in all_blocks(alg)]


@pytest.mark.parametrize("alg,m", BLOCKS, ids=[m.name for _, m in BLOCKS])
def test_block_invariants(alg, m):
    check_weight_bookkeeping(m)
    check_highest_vector(m)
    check_commutation(m)
    check_brackets(m)


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_block_dimensions(alg):
    n = alg.rank
    assert standard_module(alg).dim == (2 * n + 1 if alg.kind == "B" else 2 * n)
    assert exterior_power_module(alg, 2).dim == comb(standard_module(alg).dim, 2)
    if alg.kind == "B":
        assert spin_module(alg, "full").dim == 2 ** n
    else:
        assert spin_module(alg, "even").dim == spin_module(alg, "odd").dim == 2 ** (n - 1)


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_block_highest_weights(alg):
    n = alg.rank
    unit = lambda i, c=1: tuple(c if j == i - 1 else 0 for j in range(n))
    assert standard_module(alg).highest_weight == hat_fund(alg, 1)
    if alg.kind == "B":
        assert spin_module(alg, "full").highest_weight == unit(n)
        assert exterior_power_module(alg, n).highest_weight == unit(n, 2)
    else:
        assert spin_module(alg, "even").highest_weight == unit(n)
        assert spin_module(alg, "odd").highest_weight == unit(n - 1)
        assert exterior_power_module(alg, n).highest_weight == unit(n, 2)
        assert exterior_power_module(alg, n, "minus").highest_weight == unit(n - 1, 2)


def test_spin_parity_validation():
    with pytest.raises(ValueError):
        spin_module(B(2), "even")
    with pytest.raises(ValueError):
        spin_module(D(3), "full")
    with pytest.raises(ValueError):
        exterior_power_module(B(3), 3, "minus")


@pytest.mark.parametrize("alg", [B(2), B(3), D(3), D(4)], ids=str)
def test_all_blocks_share_structure_constants(alg):
    ref = structure_constants(standard_module(alg))
    for m in all_blocks(alg)[2:]:
        for key, c in structure_constants(m).items():
            if key in ref:
                assert c == ref[key], (m.name, key)


def test_bracket_mismatch_detected():
    m = spin_module(B(2), "full")
    bad = m.rescaled([Fraction(1)] * 3 + [Fraction(2)])
    with pytest.raises(RealizationError):
        check_commutation(bad)


@pytest.mark.parametrize("alg,k", [(B(2), (1, 1)), (D(3), (1, 0, 1)), (B(3), (0, 1, 1)),
                                   (D(4), (0, 0, 1, 1)), (D(3), (0, 3, 0))], ids=str)
def test_realize(alg, k):
    m = realize(alg, k)
    assert m.highest_weight == k
    check_weight_bookkeeping(m)
    check_highest_vector(m)
    check_commutation(m, roots="simple")


def test_realize_blocks():
    names = [b.name for b in building_blocks(D(4), (0, 0, 3, 2))]
    assert len(names) == 3
    with pytest.raises(WeightError):
        building_blocks(B(2), (1, -1))


def test_tensor_with_trivial_is_identity():
    s = standard_module(B(2))
    assert cyclic_tensor_module(trivial_module(B(2)), s) is s
    with pytest.raises(ValueError):
        cyclic_tensor_module(s, standard_module(D(2)))


@pytest.mark.parametrize("alg", [B(2), D(3)], ids=str)
def test_divided_powers(alg):
    m = realize(alg, (0,) * (alg.rank - 1) + (3,))
    v = m.highest_vector()
    for j in range(alg.num_positive_roots):
        for p in range(4):
            assert divided_power(m, j, p, v) == plain_power_vector(m, j, p, v)


def test_signature_vector_checks_weight():
    m = standard_module(D(3))
    with pytest.raises(WeightError):
        signature_vector(m, Signature(D(3), (0, 1, 0), (0,) * 6))
    assert signature_vector(m, Signature(D(3), (1, 0, 0), (0, 0, 0, 0, 0, 1))) == {}
    assert signature_vector(m, Signature(D(3), (1, 0, 0), (0, 0, 0, 0, 1, 0)))


def test_rescale_validation():
    with pytest.raises(ValueError):
        standard_module(D(2)).rescaled([1])


def test_module_json_round_numbers():
    data = standard_module(B(2)).to_json()
    assert data["roots"] == [[1, -1], [1, 1], [1, 0], [0, 1]]
    assert len(data["lowering"]) == 4 and len(data["labels"]) == 5


@given(st.dictionaries(st.integers(0, 9), st.integers(-20, 20).filter(bool), max_size=6))
def test_primitive_vector(v):
    p = primitive_int_vector(v)
    assert set(p) == set(v)
    if v:
        lead = v[min(v)]
        ratio = Fraction(lead, p[min(p)])
        assert all(Fraction(v[i]) == ratio * p[i] for i in v)


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(-3, 3)), max_size=12),
       st.dictionaries(st.integers(0, 4), st.integers(-5, 5).filter(bool), max_size=5))
def test_sparse_apply_matches_dense(entries, v):
    m = SparseMatrix.from_coo(entries, 5, 5)
    dense = [[0] * 5 for _ in range(5)]
    for r, c, x in entries:
        dense[r][c] += x
    want = {r: sum(dense[r][c] * v.get(c, 0) for c in range(5)) for r in range(5)}
    want = {r: x for r, x in want.items() if x}
    assert m.apply(v) == want
    assert vec_add(m.apply(v), m.scaled(2).apply(v), -1) == {r: -x for r, x in want.items()}


def test_random_rescaling_keeps_invariants():
    rng = random.Random(7)
    m = realize(B(2), (1, 1))
    f = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4)) for _ in m.lowering]
    r = m.rescaled(f)
    check_weight_bookkeeping(r)
    check_highest_vector(r)
