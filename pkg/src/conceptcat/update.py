"""
Update structures and their axioms.

An update structure on a system ``S`` and property ``p`` bundles

* ``put: S×p -> S`` (overwrite the property),
* ``get: S -> S×p`` (read the property, keeping the system),
* a magma ``mix`` on ``p`` and a cocommutative, coassociative comagma
  ``copy`` on ``p``.

Axiom catalogue. Products associate to the left, ``a`` is the associator
``(S×p)×p -> S×(p×p)`` and ``1_S``, ``1_p`` are the wire identities (the
idempotents of the system and property when the structure lives in the
Karoubi envelope)::

    PutGet         put ; get                 = (1_S⊗copy) ; a⁻¹ ; (put⊗1_p)
    GetPut         get ; put                 = 1_S
    PutPut         (put⊗1_p) ; put           = a ; (1_S⊗mix) ; put
    GetGet         get ; (get⊗1_p)           = get ; (1_S⊗copy) ; a⁻¹
    repeat-update  (1_S⊗copy) ; a⁻¹ ; (put⊗1_p) ; put  = put

Read wire by wire: PutGet says writing ``v`` and then reading returns the
written system together with ``v``; PutPut says writing ``v`` then ``w`` is
writing ``mix(v, w)`` once; GetGet says reading twice is reading once and
copying; repeat-update says writing a value a second time changes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from conceptcat.algebra import (
    Comagma, LawReport, Magma, all_of, canonical_copy, check_coassociative,
    check_cocommutative, compare, right_projection,
)
from conceptcat.finrel import (
    FiniteSet, Relation, TypeMismatch, braid, identity, is_idempotent,
    product, reassociate, reassociate_inv,
)


@dataclass(frozen=True)
class UpdateStructure:
    """
    ``(put, get, mix, copy)`` on a system and a property.

    ``system_idem`` and ``property_idem`` default to identities; when given,
    the structure is read in the Karoubi envelope on ``(S, system_idem)``
    and ``(p, property_idem)``, and the four maps must be absorbed by them.
    """
    put: Relation
    get: Relation
    mix: Magma
    copy: Comagma
    name: str = ""
    system_idem: Relation | None = None
    property_idem: Relation | None = None

    def __post_init__(self):
        S, p = self.get.dom, self.mix.carrier
        if self.get.cod != product(S, p):
            raise TypeMismatch(f"get must have type {S.name} -> {S.name}×{p.name}")
        if self.put.dom != product(S, p) or self.put.cod != S:
            raise TypeMismatch(f"put must have type {S.name}×{p.name} -> {S.name}")
        if self.copy.carrier != p:
            raise TypeMismatch("mix and copy must live on the same property")
        for law in (check_cocommutative(self.copy),
                    check_coassociative(self.copy)):
            if not law.holds:
                raise ValueError(f"copy of {self.name or 'update'} is not "
                                 f"{law.law}: {law.witness}")
        if self.system_idem is None:
            object.__setattr__(self, "system_idem", identity(S))
        if self.property_idem is None:
            object.__setattr__(self, "property_idem", identity(p))
        for idem, where in ((self.system_idem, S), (self.property_idem, p)):
            if idem.dom != where or not is_idempotent(idem):
                raise ValueError(f"wire idempotent on {where.name} is not "
                                 "an idempotent endo-relation")
        self._check_absorbed()

    def _check_absorbed(self):
        iS, ip = self.system_idem, self.property_idem
        pairs = {
            "put": ((iS @ ip), self.put, iS),
            "get": (iS, self.get, (iS @ ip)),
            "mix": ((ip @ ip), self.mix.mult, ip),
            "copy": (ip, self.copy.comult, (ip @ ip)),
        }
        for label, (before, f, after) in pairs.items():
            if before >> f != f or f >> after != f:
                raise ValueError(f"{label} is not absorbed by the wire "
                                 "idempotents")

    @property
    def system(self) -> FiniteSet:
        return self.get.dom

    @property
    def property(self) -> FiniteSet:
        return self.mix.carrier


@dataclass(frozen=True)
class AxiomVerdicts:
    putget: LawReport
    getput: LawReport
    putput: LawReport
    getget: LawReport
    repeat_update: LawReport

    @property
    def strong(self) -> bool:
        return all((self.putget.holds, self.getput.holds,
                    self.putput.holds, self.getget.holds))

    @property
    def weak(self) -> bool:
        return all((self.putget.holds, self.putput.holds,
                    self.getget.holds, self.repeat_update.holds))

    @property
    def classification(self) -> str:
        if self.strong:
            return "strong"
        return "weak" if self.weak else "neither"

    def reports(self) -> list:
        return [self.putget, self.getput, self.putput, self.getget,
                self.repeat_update]

    def to_dict(self) -> dict:
        return {"classification": self.classification,
                "laws": [r.to_dict() for r in self.reports()]}


def check_putget(u: UpdateStructure) -> LawReport:
    S, p, iS, ip = u.system, u.property, u.system_idem, u.property_idem
    lhs = u.put >> u.get
    rhs = (iS @ u.copy.comult) >> reassociate_inv(S, p, p) >> (u.put @ ip)
    return compare("putget", lhs, rhs)


def check_getput(u: UpdateStructure) -> LawReport:
    return compare("getput", u.get >> u.put, u.system_idem)


def check_putput(u: UpdateStructure) -> LawReport:
    S, p, iS, ip = u.system, u.property, u.system_idem, u.property_idem
    lhs = (u.put @ ip) >> u.put
    rhs = reassociate(S, p, p) >> (iS @ u.mix.mult) >> u.put
    return compare("putput", lhs, rhs)


def check_getget(u: UpdateStructure) -> LawReport:
    S, p, iS, ip = u.system, u.property, u.system_idem, u.property_idem
    lhs = u.get >> (u.get @ ip)
    rhs = u.get >> (iS @ u.copy.comult) >> reassociate_inv(S, p, p)
    return compare("getget", lhs, rhs)


def check_repeat_update(u: UpdateStructure) -> LawReport:
    S, p, iS, ip = u.system, u.property, u.system_idem, u.property_idem
    lhs = ((iS @ u.copy.comult) >> reassociate_inv(S, p, p)
           >> (u.put @ ip) >> u.put)
    return compare("repeat-update", lhs, u.put)


def classify(u: UpdateStructure) -> AxiomVerdicts:
    return AxiomVerdicts(check_putget(u), check_getput(u), check_putput(u),
                         check_getget(u), check_repeat_update(u))


def getput_composite(u: UpdateStructure) -> Relation:
    """``get ; put`` on the system."""
    return u.get >> u.put


@dataclass(frozen=True)
class CommuteVerdict:
    put: LawReport
    get: LawReport

    @property
    def holds(self) -> bool:
        return self.put.holds and self.get.holds

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds,
                "laws": [self.put.to_dict(), self.get.to_dict()]}


def check_commuting(u1: UpdateStructure, u2: UpdateStructure) -> CommuteVerdict:
    """
    Decide whether the puts and the gets of two structures on the same
    system commute, up to a braid on the two property wires.
    """
    if u1.system != u2.system:
        raise TypeMismatch(f"{u1.name or 'first'} and {u2.name or 'second'} "
                           "act on different systems")
    S, p1, p2 = u1.system, u1.property, u2.property
    iS = identity(S)
    # (S×p1)×p2 -> (S×p2)×p1
    swap_props = (reassociate(S, p1, p2) >> (iS @ braid(p1, p2))
                  >> reassociate_inv(S, p2, p1))
    put_lhs = (u1.put @ identity(p2)) >> u2.put
    put_rhs = swap_props >> (u2.put @ identity(p1)) >> u1.put
    get_lhs = u2.get >> (u1.get @ identity(p2))
    get_rhs = (u1.get >> (u2.get @ identity(p1))
               >> reassociate(S, p2, p1) >> (iS @ braid(p2, p1))
               >> reassociate_inv(S, p1, p2))
    return CommuteVerdict(compare("put-commute", put_lhs, put_rhs),
                          compare("get-commute", get_lhs, get_rhs))


def product_system_updates(factors, which: int, system: FiniteSet | None = None,
                           name: str = "") -> UpdateStructure:
    """
    Field update on an explicit product system.

    ``put`` overwrites field ``which``, ``get`` reads it, ``mix`` is the
    right projection (the later value wins) and ``copy`` is the diagonal.
    """
    factors = tuple(factors)
    if not 0 <= which < len(factors):
        raise IndexError(f"factor index {which} out of range "
                         f"for {len(factors)} factors")
    S = product(*factors) if system is None else system
    if S.factors is None or tuple(S.factors) != factors:
        raise ValueError(f"{S.name} is not the product of the given factors")
    p = factors[which]

    def put(x):
        s, v = x
        return s[:which] + (v,) + s[which + 1:]

    return UpdateStructure(
        put=Relation.from_function(product(S, p), S, put),
        get=Relation.from_function(S, product(S, p), lambda s: (s, s[which])),
        mix=right_projection(p),
        copy=canonical_copy(p),
        name=name or f"update {p.name}",
    )
