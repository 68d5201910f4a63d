"""Finite relational semantics for update structures, correlators and concepts."""

from conceptcat.algebra import (
    Comagma, LawReport, Magma, canonical_copy, canonical_mult, right_projection,
)
from conceptcat.correlator import (
    Correlator, InvalidCorrelator, correlated_update, functional_correlator,
    validate_correlator,
)
from conceptcat.finrel import (
    UNIT, FiniteSet, Relation, TypeMismatch, compose, dagger, identity,
    product, tensor, using_backend,
)
from conceptcat.karoubi import (
    Concept, KMorphism, KObject, absorption_chain, check_kmorphism, embed,
    iterate_concept, make_concept, restrict_getput, restricted_system,
    states_of,
)
from conceptcat.update import (
    UpdateStructure, check_commuting, classify, getput_composite,
    product_system_updates,
)

__version__ = "0.1.0"

__all__ = [
    "Comagma", "Concept", "Correlator", "FiniteSet", "InvalidCorrelator",
    "KMorphism", "KObject", "LawReport", "Magma", "Relation", "TypeMismatch",
    "UNIT", "UpdateStructure", "absorption_chain", "canonical_copy", "canonical_mult",
    "check_commuting", "check_kmorphism", "classify", "compose", "correlated_update", "dagger",
    "embed", "functional_correlator", "getput_composite", "identity",
    "iterate_concept", "make_concept", "product", "product_system_updates",
    "restrict_getput", "restricted_system", "right_projection", "states_of", "tensor",
    "using_backend", "validate_correlator",
]
