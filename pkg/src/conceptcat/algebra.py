"""
Magmas, comagmas and their law checkers.

No law is presumed of a magma or comagma; every law is a separate check
returning a :class:`LawReport`.

>>> from conceptcat.finrel import FiniteSet
>>> colour = FiniteSet("Colour", ["yellow", "green"])
>>> check_associative(right_projection(colour)).holds
True
>>> check_cocommutative(canonical_copy(colour)).holds
True
"""

from __future__ import annotations

from dataclasses import dataclass

from conceptcat.finrel import (
    UNIT, FiniteSet, Relation, TypeMismatch, Witness, braid, dagger,
    drop_unit, drop_unit_left, find_witness, identity, middle_swap, product,
    reassociate, reassociate_inv, relations_equal,
)


@dataclass(frozen=True)
class LawReport:
    """Verdict on one equation, with a witness input when it fails."""
    law: str
    holds: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        out = {"law": self.law, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def compare(law: str, lhs: Relation, rhs: Relation) -> LawReport:
    """Decide ``lhs = rhs``; on failure attach the first differing input."""
    relations_equal(lhs, rhs)
    witness = find_witness(lhs, rhs)
    return LawReport(law, witness is None, witness)


def all_of(law: str, *reports: LawReport) -> LawReport:
    """Conjunction of reports, carrying the first failure's witness."""
    for r in reports:
        if not r.holds:
            return LawReport(law, False, r.witness)
    return LawReport(law, True)


@dataclass(frozen=True)
class Magma:
    """A carrier with a multiplication ``A×A -> A``."""
    carrier: FiniteSet
    mult: Relation

    def __post_init__(self):
        A = self.carrier
        if self.mult.dom != product(A, A) or self.mult.cod != A:
            raise TypeMismatch(f"magma multiplication on {A.name} must have "
                               f"type {A.name}×{A.name} -> {A.name}")


@dataclass(frozen=True)
class Comagma:
    """A carrier with a comultiplication ``A -> A×A``."""
    carrier: FiniteSet
    comult: Relation

    def __post_init__(self):
        A = self.carrier
        if self.comult.dom != A or self.comult.cod != product(A, A):
            raise TypeMismatch(f"comagma comultiplication on {A.name} must "
                               f"have type {A.name} -> {A.name}×{A.name}")


def canonical_copy(A: FiniteSet) -> Comagma:
    """The diagonal ``a ↦ (a, a)``."""
    return Comagma(A, Relation.from_pairs(A, product(A, A),
                                          [(a, (a, a)) for a in A]))


def canonical_mult(A: FiniteSet) -> Magma:
    """The converse of the diagonal: ``(a, a) ↦ a``."""
    return Magma(A, dagger(canonical_copy(A).comult))


def right_projection(A: FiniteSet) -> Magma:
    """The magma ``(a, a') ↦ a'``: the later value wins."""
    return Magma(A, Relation.from_function(product(A, A), A, lambda x: x[1]))


# Magma laws.

def check_associative(m: Magma) -> LawReport:
    A, mult = m.carrier, m.mult
    lhs = (mult @ identity(A)) >> mult
    rhs = reassociate(A, A, A) >> (identity(A) @ mult) >> mult
    return compare("associative", lhs, rhs)


def _check_state(u: Relation, A: FiniteSet):
    if u.dom != UNIT or u.cod != A:
        raise TypeMismatch(f"unit must be a state I -> {A.name}")


def check_unital(m: Magma, u: Relation) -> LawReport:
    """Both unit triangles for the state ``u: I -> A``."""
    A, mult = m.carrier, m.mult
    _check_state(u, A)
    left = compare("left-unit", (u @ identity(A)) >> mult, drop_unit_left(A))
    right = compare("right-unit", (identity(A) @ u) >> mult, drop_unit(A))
    return all_of("unital", left, right)


# Comagma laws, mirror images of the above.

def check_coassociative(c: Comagma) -> LawReport:
    A, comult = c.carrier, c.comult
    lhs = comult >> (comult @ identity(A))
    rhs = comult >> (identity(A) @ comult) >> reassociate_inv(A, A, A)
    return compare("coassociative", lhs, rhs)


def check_cocommutative(c: Comagma) -> LawReport:
    A = c.carrier
    return compare("cocommutative", c.comult >> braid(A, A), c.comult)


def check_counital(c: Comagma, e: Relation) -> LawReport:
    """Both counit triangles for the effect ``e: A -> I``."""
    A, comult = c.carrier, c.comult
    if e.dom != A or e.cod != UNIT:
        raise TypeMismatch(f"counit must be an effect {A.name} -> I")
    left = compare("left-counit",
                   comult >> (e @ identity(A)) >> drop_unit_left(A),
                   identity(A))
    right = compare("right-counit",
                    comult >> (identity(A) @ e) >> drop_unit(A),
                    identity(A))
    return all_of("counital", left, right)


# Homomorphisms: the multiplication square only.

def check_magma_hom(h: Relation, m_dom: Magma, m_cod: Magma,
                    restrict: Relation | None = None) -> LawReport:
    """
    Decide ``(h⊗h) ; mult_cod = mult_dom ; h``.

    If ``restrict`` (an endo-relation on the domain carrier) is given, both
    sides are precomposed with ``restrict⊗restrict``, so the square is only
    required on inputs fixed by it.
    """
    if h.dom != m_dom.carrier or h.cod != m_cod.carrier:
        raise TypeMismatch(f"{h!r} does not run between the magma carriers")
    lhs = (h @ h) >> m_cod.mult
    rhs = m_dom.mult >> h
    if restrict is not None:
        guard = restrict @ restrict
        lhs, rhs = guard >> lhs, guard >> rhs
    return compare("magma-hom", lhs, rhs)


def check_comagma_hom(h: Relation, c_dom: Comagma, c_cod: Comagma) -> LawReport:
    """Decide ``h ; comult_cod = comult_dom ; (h⊗h)``."""
    if h.dom != c_dom.carrier or h.cod != c_cod.carrier:
        raise TypeMismatch(f"{h!r} does not run between the comagma carriers")
    return compare("comagma-hom", h >> c_cod.comult, c_dom.comult >> (h @ h))


# Structures induced on products.

def induced_comagma(c1: Comagma, c2: Comagma) -> Comagma:
    """``(copy_A ⊗ copy_B) ; middle swap`` on ``A×B``."""
    A, B = c1.carrier, c2.carrier
    return Comagma(product(A, B), (c1.comult @ c2.comult) >> middle_swap(A, B))


def induced_magma(m1: Magma, m2: Magma) -> Magma:
    """``middle swap ; (mult_A ⊗ mult_B)`` on ``A×B``."""
    A, B = m1.carrier, m2.carrier
    return Magma(product(A, B),
                 dagger(middle_swap(A, B)) >> (m1.mult @ m2.mult))


def induced_pair_structure(s1, s2):
    """Componentwise structure on the product of two carriers."""
    if isinstance(s1, Magma) and isinstance(s2, Magma):
        return induced_magma(s1, s2)
    if isinstance(s1, Comagma) and isinstance(s2, Comagma):
        return induced_comagma(s1, s2)
    raise TypeError("expected two magmas or two comagmas")
