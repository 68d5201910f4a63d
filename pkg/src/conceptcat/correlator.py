"""
Correlators and correlated updates.

A correlator is an idempotent endo-relation on a product of properties that
commutes with copying, and with mixing of already-correlated values. It
records which combinations of property values belong together.

>>> from conceptcat.finrel import FiniteSet, Relation
>>> colour = FiniteSet("Colour", ["yellow", "green"])
>>> taste = FiniteSet("Taste", ["bitter", "sweet"])
>>> P = Relation.from_function(colour, taste,
...                            {"yellow": "sweet", "green": "bitter"})
>>> print(functional_correlator(P).map.serialize())
(yellow,sweet) -> (yellow,sweet)
(green,bitter) -> (green,bitter)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from conceptcat.algebra import (
    Comagma, LawReport, Magma, canonical_copy, canonical_mult,
    check_comagma_hom, check_magma_hom, compare, induced_comagma,
    induced_magma, right_projection,
)
from conceptcat.finrel import (
    FiniteSet, Relation, TypeMismatch, braid, identity, product, reassociate,
    reassociate_inv, render,
)
from conceptcat.update import UpdateStructure, check_commuting


class InvalidCorrelator(ValueError):
    """A candidate correlator failed one of its defining conditions."""

    def __init__(self, reports):
        self.reports = list(reports)
        failed = ", ".join(
            f"{r.law} (witness {render(r.witness.input)})" if r.witness
            else r.law for r in self.reports)
        super().__init__(f"not a correlator: fails {failed}")


def carrier_of(components) -> FiniteSet:
    """Left-nested product of the component sets."""
    return reduce(product, components)


def _fold(structures, combine):
    return reduce(combine, structures)


@dataclass(frozen=True)
class Correlator:
    """A validated correlator; build it with :func:`validate_correlator`."""
    components: tuple
    map: Relation
    magmas: tuple
    comagmas: tuple
    name: str = ""

    @property
    def carrier(self) -> FiniteSet:
        return self.map.dom

    @property
    def induced_magma(self) -> Magma:
        return _fold(self.magmas, induced_magma)

    @property
    def induced_comagma(self) -> Comagma:
        return _fold(self.comagmas, induced_comagma)

    def fixed_pairs(self) -> list:
        return [x for x, y in self.map.pairs() if x == y]

    def to_dict(self) -> dict:
        return {"name": self.name,
                "components": [c.name for c in self.components],
                "pairs": [[render(x), render(y)] for x, y in self.map.pairs()]}


def correlator_conditions(x: Relation, magma: Magma,
                          comagma: Comagma) -> list[LawReport]:
    """
    The three defining conditions, in order: idempotence, the comagma
    homomorphism square, and the magma homomorphism square on inputs already
    fixed by ``x``.
    """
    return [
        compare("idempotence", x >> x, x),
        check_comagma_hom(x, comagma, comagma),
        check_magma_hom(x, magma, magma, restrict=x),
    ]


def validate_correlator(map: Relation, components, magmas=None,
                        comagmas=None, name: str = "") -> Correlator:
    """
    Check ``map`` against the correlator conditions for the structures
    induced by the per-component ``magmas`` and ``comagmas`` (right
    projections and diagonals by default). Raises :class:`InvalidCorrelator`
    naming every failed condition.
    """
    components = tuple(components)
    if len(components) < 1:
        raise ValueError("a correlator needs at least one component")
    A = carrier_of(components)
    if map.dom != A or map.cod != A:
        raise TypeMismatch(f"correlator must be an endo-relation on {A.name}")
    magmas = tuple(magmas) if magmas is not None else tuple(
        right_projection(c) for c in components)
    comagmas = tuple(comagmas) if comagmas is not None else tuple(
        canonical_copy(c) for c in components)
    for structs in (magmas, comagmas):
        if tuple(s.carrier for s in structs) != components:
            raise TypeMismatch("one magma and one comagma per component")
    x = Correlator(components, map, magmas, comagmas, name)
    failed = [r for r in correlator_conditions(map, x.induced_magma,
                                               x.induced_comagma)
              if not r.holds]
    if failed:
        raise InvalidCorrelator(failed)
    return x


def functional_correlator(P: Relation, magmas=None, comagmas=None,
                          name: str = "") -> Correlator:
    """
    The correlator on ``A×B`` keeping ``(a, b)`` exactly when ``P`` relates
    ``a`` to ``b``: copy ``a``, push one copy through ``P``, and merge it with
    ``b`` using the converse of the diagonal.
    """
    A, B = P.dom, P.cod
    x = ((canonical_copy(A).comult @ identity(B))
         >> reassociate(A, A, B)
         >> (identity(A) @ (P @ identity(B)))
         >> (identity(A) @ canonical_mult(B).mult))
    return validate_correlator(x, (A, B), magmas, comagmas, name)


def correlated_update(u1: UpdateStructure, u2: UpdateStructure,
                      x: Correlator, name: str = "") -> UpdateStructure:
    """
    Combine two commuting update structures through a correlator on their
    two properties. The result has property ``p1×p2`` and is a weak update
    structure.

    put   correlate the incoming pair, then put the first and the second field
    get   get the first and the second field, then correlate the pair
    mix   correlate both inputs, mix componentwise, correlate
    copy  correlate, then copy componentwise
    """
    if not check_commuting(u1, u2).holds:
        raise ValueError(f"{u1.name} and {u2.name} do not commute")
    p1, p2 = u1.property, u2.property
    if x.components != (p1, p2):
        raise TypeMismatch(f"correlator components must be "
                           f"({p1.name}, {p2.name})")
    for mine, theirs in ((x.magmas[0].mult, u1.mix.mult),
                         (x.magmas[1].mult, u2.mix.mult),
                         (x.comagmas[0].comult, u1.copy.comult),
                         (x.comagmas[1].comult, u2.copy.comult)):
        if mine != theirs:
            raise ValueError("correlator structures differ from those of "
                             "the update structures")
    S, iS, c = u1.system, identity(u1.system), x.map
    put = ((iS @ c) >> reassociate_inv(S, p1, p2)
           >> (u1.put @ identity(p2)) >> u2.put)
    get = (u1.get >> (u2.get @ identity(p1)) >> reassociate(S, p2, p1)
           >> (iS @ braid(p2, p1)) >> (iS @ c))
    mix = Magma(x.carrier, (c @ c) >> x.induced_magma.mult >> c)
    copy = Comagma(x.carrier, c >> x.induced_comagma.comult)
    return UpdateStructure(put, get, mix, copy,
                           name=name or f"{u1.name}*{u2.name}",
                           property_idem=c)
