"""
Concepts as objects of the Karoubi envelope of finite relations.

An envelope object is a set with an idempotent on it; morphisms are the
relations absorbed by the idempotents at both ends. The envelope is never
materialized: every check here is an equation between ordinary relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from conceptcat.algebra import LawReport, all_of, compare
from conceptcat.correlator import Correlator
from conceptcat.finrel import (
    UNIT, FiniteSet, Relation, TypeMismatch, identity, is_idempotent, render,
    state,
)
from conceptcat.update import UpdateStructure, classify


DEFAULT_MAX_ENUM = 2 ** 20


@dataclass(frozen=True)
class KObject:
    carrier: FiniteSet
    idem: Relation
    name: str = ""

    def __post_init__(self):
        if self.idem.dom != self.carrier or not is_idempotent(self.idem):
            raise ValueError(f"{self.name or self.carrier.name}: "
                             "idem is not an idempotent on the carrier")

    def fixed_points(self) -> list:
        return [x for x, y in self.idem.pairs() if x == y]

    def to_dict(self) -> dict:
        factors = self.carrier.factors or (self.carrier,)
        return {"name": self.name,
                "carrier": [f.name for f in factors],
                "pairs": [[render(x), render(y)] for x, y in self.idem.pairs()]}


@dataclass(frozen=True)
class KMorphism:
    source: KObject
    target: KObject
    map: Relation

    def __post_init__(self):
        report = check_kmorphism(self.map, self.source, self.target)
        if not report.holds:
            raise ValueError(f"not absorbed by the endpoint idempotents: "
                             f"{report.witness}")

    def __rshift__(self, other: KMorphism) -> KMorphism:
        if self.target != other.source:
            raise TypeMismatch("envelope morphisms do not compose")
        return KMorphism(self.source, other.target, self.map >> other.map)


@dataclass(frozen=True)
class Concept(KObject):
    """An envelope object whose idempotent is a correlator."""
    components: tuple = ()
    correlator: Correlator | None = None


def embed(A: FiniteSet) -> KObject:
    """``(A, id_A)``: a plain set seen as an envelope object."""
    return KObject(A, identity(A), A.name)


def lift(f: Relation) -> KMorphism:
    """A relation between embedded sets, as an envelope morphism."""
    return KMorphism(embed(f.dom), embed(f.cod), f)


def identity_of(k: KObject) -> KMorphism:
    """The envelope identity on ``k`` is its idempotent."""
    return KMorphism(k, k, k.idem)


def check_kmorphism(f: Relation, src: KObject, tgt: KObject) -> LawReport:
    """Decide ``f ; tgt.idem = f = src.idem ; f``."""
    if f.dom != src.carrier or f.cod != tgt.carrier:
        raise TypeMismatch(f"{f!r} does not run {src.carrier.name} -> "
                           f"{tgt.carrier.name}")
    return all_of("kmorphism",
                  compare("absorb-target", f >> tgt.idem, f),
                  compare("absorb-source", src.idem >> f, f))


def make_concept(x: Correlator, components=None, name: str = "") -> Concept:
    """The concept ``(A1×...×An, x)`` of a correlator."""
    if components is None:
        components = tuple(embed(c) for c in x.components)
    return Concept(x.carrier, x.map, name or x.name,
                   components=tuple(components), correlator=x)


def absorption_chain(outer: Relation, components) -> list[LawReport]:
    """
    The equations tying an outer idempotent to the tensor ``t`` of its
    components' idempotents: ``t ; outer = outer`` and ``outer ; t = outer``.
    """
    inner = components[0].idem
    for k in components[1:]:
        inner = inner @ k.idem
    return [compare("outer-after-components", inner >> outer, outer),
            compare("components-after-outer", outer >> inner, outer)]


class AbsorptionError(ValueError):
    """An outer correlator is inconsistent with its component concepts."""


def iterate_concept(x_outer: Correlator, components,
                    name: str = "") -> Concept:
    """
    Build a concept whose properties are themselves concepts.

    ``x_outer`` must act on the product of the components' carriers and be
    absorbed by their idempotents on both sides.
    """
    components = tuple(components)
    if tuple(x_outer.components) != tuple(k.carrier for k in components):
        raise TypeMismatch("outer correlator components do not match the "
                           "concept carriers")
    failed = [r for r in absorption_chain(x_outer.map, components)
              if not r.holds]
    if failed:
        w = failed[0].witness
        raise AbsorptionError(f"outer correlator fails {failed[0].law} at "
                              f"{render(w.input)}")
    return make_concept(x_outer, components, name)


def states_of(k: KObject, max_enum: int = DEFAULT_MAX_ENUM):
    """
    Lazily enumerate the states ``I -> carrier`` fixed by ``k.idem``,
    smallest subsets first, each size in carrier order.
    """
    n = len(k.carrier)
    if 2 ** n > max_enum:
        raise OverflowError(f"{2 ** n} candidate states exceed the "
                            f"enumeration bound {max_enum}")
    return _states(k, n)


def _states(k, n):
    rows = k.idem.rows
    elements = k.carrier.elements
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            image = set().union(*(rows[i] for i in subset))
            if image == chosen:
                yield state(k.carrier, [elements[i] for i in subset])


def restrict_getput(u: UpdateStructure, name: str = "") -> UpdateStructure:
    """
    Upgrade a weak update structure to a strong one on the system
    ``(S, put∘get)``.

    ``put`` and ``get`` are conjugated by the new system idempotent (and the
    property idempotent on the property wire).
    """
    verdicts = classify(u)
    if not verdicts.weak:
        missing = [r.law for r in verdicts.reports()
                   if r.law != "getput" and not r.holds]
        raise ValueError(f"{u.name}: restriction needs a weak update "
                         f"structure; fails {', '.join(missing)}")
    pi = u.get >> u.put
    both = pi @ u.property_idem
    return UpdateStructure(
        put=both >> u.put >> pi,
        get=pi >> u.get >> both,
        mix=u.mix,
        copy=u.copy,
        name=name or f"{u.name}'",
        system_idem=pi,
        property_idem=u.property_idem,
    )


def restricted_system(u: UpdateStructure) -> KObject:
    """The envelope object ``(S, put∘get)`` of a weak update structure."""
    return KObject(u.system, u.get >> u.put, f"({u.system.name}, put∘get)")
