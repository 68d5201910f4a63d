import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles

from conftest import COLOUR, TASTE, finite_sets, relations
from conceptcat.algebra import (
    Comagma, Magma, all_of, canonical_copy, canonical_mult,
    check_associative, check_coassociative, check_cocommutative,
    check_comagma_hom, check_counital, check_magma_hom, check_unital,
    compare, induced_comagma, induced_magma, induced_pair_structure,
    right_projection,
)
from conceptcat.correlator import functional_correlator
from conceptcat.finrel import (
    UNIT, FiniteSet, Relation, TypeMismatch, braid, dagger, full, identity,
    product, state,
)

AB = FiniteSet("AB", ("a", "b"))
CT = product(COLOUR, TASTE)


def test_law_report_is_truthy_and_serializable():
    ok = compare("same", identity(COLOUR), identity(COLOUR))
    bad = compare("diff", identity(COLOUR), full(COLOUR, COLOUR))
    assert ok and not bad
    assert ok.to_dict() == {"law": "same", "holds": True}
    assert bad.to_dict()["witness"] == {"input": "yellow",
                                        "left": ["yellow"],
                                        "right": ["yellow", "green"]}
    combined = all_of("both", ok, bad)
    assert not combined and combined.law == "both"


def test_magma_type_shape_is_checked():
    with pytest.raises(TypeMismatch):
        Magma(COLOUR, identity(COLOUR))
    with pytest.raises(TypeMismatch):
        Comagma(COLOUR, identity(COLOUR))


# Associativity and units.

def test_projection_magma_is_associative():
    assert check_associative(right_projection(COLOUR))


def test_diagonal_mult_is_associative():
    assert check_associative(canonical_mult(COLOUR))


def test_non_associative_magma_has_witness():
    # a·a = b, everything else a
    table = {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"}
    m = Magma(AB, Relation.from_function(product(AB, AB), AB, table))
    report = check_associative(m)
    assert not report
    ((x, y), z) = report.witness.input
    assert table[table[x, y], z] != table[x, table[y, z]]


def test_diagonal_mult_with_full_unit():
    assert check_unital(canonical_mult(COLOUR), state(COLOUR, COLOUR.elements))


def test_projection_magma_has_no_unit():
    m = right_projection(COLOUR)
    for k in range(3):
        for chosen in itertools.combinations(COLOUR.elements, k):
            assert not check_unital(m, state(COLOUR, chosen))


def test_trivial_magma_on_unit():
    m = Magma(UNIT, Relation.from_function(product(UNIT, UNIT), UNIT,
                                           lambda _: "*"))
    assert check_unital(m, identity(UNIT))
    assert check_associative(m)


def test_unit_must_be_a_state():
    with pytest.raises(TypeMismatch):
        check_unital(canonical_mult(COLOUR), identity(COLOUR))


# Comagma laws.

@given(finite_sets(8))
def test_canonical_copy_laws(A):
    c = canonical_copy(A)
    counit = dagger(state(A, A.elements))
    assert check_coassociative(c)
    assert check_cocommutative(c)
    assert check_counital(c, counit)
    assert dagger(c.comult) == canonical_mult(A).mult
    assert c.comult >> canonical_mult(A).mult == identity(A)


def test_copy_has_one_pair_per_element():
    assert len(canonical_copy(COLOUR).comult) == 2


def test_braided_copy_is_copy():
    c = canonical_copy(COLOUR)
    assert c.comult >> braid(COLOUR, COLOUR) == c.comult


def test_skewed_comagma_is_not_cocommutative():
    skew = Comagma(AB, Relation.from_pairs(AB, product(AB, AB),
                                           [("a", ("a", "b"))]))
    report = check_cocommutative(skew)
    assert not report and report.witness.input == "a"


# Homomorphisms.

@given(finite_sets(3).flatmap(
    lambda A: relations(product(A, A), A).map(lambda r: Magma(A, r))))
def test_identity_is_magma_hom(m):
    assert check_magma_hom(identity(m.carrier), m, m)


def test_identity_is_comagma_hom():
    c = canonical_copy(COLOUR)
    assert check_comagma_hom(identity(COLOUR), c, c)


def test_banana_correlator_comagma_hom(banana_P):
    x = functional_correlator(banana_P)
    c = induced_comagma(canonical_copy(COLOUR), canonical_copy(TASTE))
    assert check_comagma_hom(x.map, c, c)


def test_banana_correlator_magma_square(banana_P):
    x = functional_correlator(banana_P)
    m = induced_magma(right_projection(COLOUR), right_projection(TASTE))
    strict = check_magma_hom(x.map, m, m)
    # mixing a killed pair on the left with a kept pair on the right keeps
    # the right pair, while correlating first kills the left argument
    assert not strict
    assert strict.witness.input == (("yellow", "bitter"), ("yellow", "sweet"))
    assert check_magma_hom(x.map, m, m, restrict=x.map)


def test_constant_relation_is_not_magma_hom():
    m = right_projection(AB)
    const = Relation.from_function(AB, AB, lambda _: "a")
    m2 = Magma(AB, Relation.from_function(product(AB, AB), AB, lambda _: "b"))
    assert not check_magma_hom(const, m, m2)


def test_full_relation_is_not_comagma_hom():
    c = canonical_copy(AB)
    report = check_comagma_hom(full(AB, AB), c, c)
    assert not report and report.witness.input == "a"


# Induced structures.

def test_induced_copy_on_pairs():
    c = induced_comagma(canonical_copy(COLOUR), canonical_copy(TASTE))
    assert c.carrier == CT
    ys = ("yellow", "sweet")
    assert c.comult.image(ys) == [(ys, ys)]
    assert check_cocommutative(c) and check_coassociative(c)


def test_induced_projection_magma():
    m = induced_magma(right_projection(COLOUR), right_projection(TASTE))
    x = (("yellow", "bitter"), ("green", "sweet"))
    assert m.mult.image(x) == [("green", "sweet")]


def test_induced_structures_on_unit():
    s = induced_pair_structure(canonical_copy(UNIT), canonical_copy(UNIT))
    assert len(s.comult) == 1
    assert check_cocommutative(s)


@st.composite
def hom_problems(draw):
    A = draw(finite_sets(3))
    m = Magma(A, draw(relations(product(A, A), A)))
    n = Magma(A, draw(relations(product(A, A), A)))
    return draw(relations(A, A)), m, n


@given(hom_problems())
def test_witnesses_really_distinguish(problem):
    h, m, n = problem
    report = check_magma_hom(h, m, n)
    H, M, N = oracles.pairs(h), oracles.pairs(m.mult), oracles.pairs(n.mult)
    lhs = oracles.compose(oracles.tensor(H, H), N)
    rhs = oracles.compose(M, H)
    assert report.holds == (lhs == rhs)
    if not report:
        x = report.witness.input
        assert oracles.image(lhs, x) != oracles.image(rhs, x)
        assert set(report.witness.left) == oracles.image(lhs, x)
