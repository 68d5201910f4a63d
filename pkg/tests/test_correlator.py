import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import COLOUR, EMOTION, TASTE
from conceptcat.correlator import (
    InvalidCorrelator, correlated_update, functional_correlator,
    validate_correlator,
)
from conceptcat.finrel import Relation, full, identity, is_idempotent, product
from conceptcat.generate import random_correlated_update, random_function, random_set
from conceptcat.update import classify, getput_composite, product_system_updates

CT = product(COLOUR, TASTE)
KEPT = {(("yellow", "sweet"),) * 2, (("green", "bitter"),) * 2}


def banana_update(banana_P, factors=(EMOTION, COLOUR, TASTE)):
    S = product(*factors)
    k = len(factors) - 2
    uc = product_system_updates(factors, k, system=S)
    ut = product_system_updates(factors, k + 1, system=S)
    x = functional_correlator(banana_P, name="banana")
    return x, correlated_update(uc, ut, x, name="banana")


def test_banana_correlator(banana_P):
    x = functional_correlator(banana_P)
    assert oracles.pairs(x.map) == KEPT
    assert x.fixed_pairs() == [("yellow", "sweet"), ("green", "bitter")]
    assert x.to_dict()["pairs"] == [["(yellow,sweet)", "(yellow,sweet)"],
                                    ["(green,bitter)", "(green,bitter)"]]


def test_banana_relation_validates_directly():
    x = validate_correlator(Relation.from_pairs(CT, CT, KEPT), (COLOUR, TASTE))
    assert x.carrier == CT


def test_identity_is_a_correlator():
    assert validate_correlator(identity(CT), (COLOUR, TASTE))


def test_full_relation_is_rejected_with_named_condition():
    with pytest.raises(InvalidCorrelator) as err:
        validate_correlator(full(CT, CT), (COLOUR, TASTE))
    failed = [r.law for r in err.value.reports if not r.holds]
    assert failed == ["comagma-hom"]
    assert "comagma-hom" in str(err.value)


def test_non_idempotent_relation_cites_idempotence():
    swap = Relation.from_pairs(CT, CT, [(("yellow", "sweet"), ("green", "bitter")),
                                        (("green", "bitter"), ("yellow", "sweet"))])
    with pytest.raises(InvalidCorrelator, match="idempotence"):
        validate_correlator(swap, (COLOUR, TASTE))


def test_functional_correlator_of_identity_keeps_diagonal():
    x = functional_correlator(identity(COLOUR))
    assert oracles.pairs(x.map) == {((c, c), (c, c)) for c in COLOUR}


def test_smile_correlator_has_two_fixed_pairs():
    smile = Relation.from_function(TASTE, EMOTION,
                                   {"sweet": "happy", "bitter": "sad"})
    assert len(functional_correlator(smile).fixed_pairs()) == 2


@given(st.integers(0, 2 ** 32 - 1))
def test_functional_correlator_fixes_exactly_the_graph(seed):
    rng = random.Random(seed)
    A, B = random_set(rng, "A", 4), random_set(rng, "B", 4)
    P = random_function(rng, A, B)
    x = functional_correlator(P)
    assert is_idempotent(x.map)
    assert set(x.fixed_pairs()) == oracles.pairs(P)
    assert oracles.pairs(x.map) == {(ab, ab) for ab in oracles.pairs(P)}


# Correlated updates.

def test_correlated_banana_is_weak(banana_P):
    _, u = banana_update(banana_P)
    v = classify(u)
    assert v.classification == "weak"
    assert not v.getput
    assert v.getput.witness.input == ("happy", "yellow", "bitter")
    assert v.getput.witness.left == ()


def test_correlated_banana_without_emotion(banana_P):
    _, u = banana_update(banana_P, factors=(COLOUR, TASTE))
    v = classify(u)
    assert v.classification == "weak"
    assert v.getput.witness.input == ("yellow", "bitter")


def test_classification_is_the_same_with_identity_wires(banana_P):
    from conceptcat.update import UpdateStructure
    _, u = banana_update(banana_P)
    plain = UpdateStructure(u.put, u.get, u.mix, u.copy)
    assert [r.holds for r in classify(plain).reports()] == \
        [r.holds for r in classify(u).reports()]


def test_get_emits_only_fixed_pairs(banana_P):
    x, u = banana_update(banana_P)
    fixed = set(x.fixed_pairs())
    for s in u.system:
        assert {v for _, v in u.get.image(s)} <= fixed


def test_monkey_getput_relation(banana_P):
    _, u = banana_update(banana_P)
    want = {((e, "yellow", "sweet"),) * 2 for e in EMOTION} | \
        {((e, "green", "bitter"),) * 2 for e in EMOTION}
    assert oracles.pairs(getput_composite(u)) == want


def test_identity_correlator_gives_strong(banana_P):
    S = product(EMOTION, COLOUR, TASTE)
    uc = product_system_updates((EMOTION, COLOUR, TASTE), 1, system=S)
    ut = product_system_updates((EMOTION, COLOUR, TASTE), 2, system=S)
    x = validate_correlator(identity(CT), (COLOUR, TASTE))
    assert classify(correlated_update(uc, ut, x)).strong


def test_one_point_properties_give_strong():
    from conceptcat.finrel import FiniteSet
    A, B = FiniteSet("A", ("a",)), FiniteSet("B", ("b",))
    S = product(A, B)
    x = functional_correlator(full(A, B))
    u = correlated_update(product_system_updates((A, B), 0, system=S),
                          product_system_updates((A, B), 1, system=S), x)
    assert classify(u).strong


def test_correlating_non_commuting_structures_fails(banana_P):
    S = product(COLOUR, TASTE)
    uc = product_system_updates((COLOUR, TASTE), 0, system=S)
    x = functional_correlator(banana_P)
    with pytest.raises(ValueError):
        correlated_update(uc, uc, x)


@given(st.integers(0, 2 ** 32 - 1))
def test_correlated_updates_are_weak(seed):
    x, u = random_correlated_update(random.Random(seed))
    assert classify(u).weak
    assert is_idempotent(x.map)
