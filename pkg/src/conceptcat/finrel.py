"""
Finite sets and relations as a symmetric monoidal category.

Objects are :class:`FiniteSet` values, morphisms are :class:`Relation`
values. Composition is written diagrammatically, ``f >> g`` meaning
"first ``f``, then ``g``", and ``f @ g`` is the tensor (cartesian product).

>>> colour = FiniteSet("Colour", ["yellow", "green"])
>>> taste = FiniteSet("Taste", ["bitter", "sweet"])
>>> P = Relation.from_function(colour, taste,
...                            {"yellow": "sweet", "green": "bitter"})
>>> assert identity(colour) >> P == P
>>> print((P @ identity(taste)).serialize())
(yellow,bitter) -> (sweet,bitter)
(yellow,sweet) -> (sweet,sweet)
(green,bitter) -> (bitter,bitter)
(green,sweet) -> (bitter,sweet)
>>> assert braid(colour, taste) >> braid(taste, colour) == identity(colour @ taste)
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping

from conceptcat import matrix as _matrix


def render(element) -> str:
    """
    Deterministic text form of an element label.

    >>> render(("e", ("y", "s")))
    '(e,(y,s))'
    """
    if isinstance(element, tuple):
        return "(" + ",".join(render(x) for x in element) + ")"
    return str(element)


@dataclass(frozen=True, eq=False)
class FiniteSet:
    """
    A named, ordered collection of distinct element labels.

    Two sets are equal when their element sequences are equal; names are
    cosmetic. When ``factors`` is given, the set is their cartesian product
    and its elements are tuples of factor elements in lexicographic order.
    """
    name: str
    elements: tuple
    factors: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.factors is not None:
            object.__setattr__(self, "factors", tuple(self.factors))
            expected = tuple(itertools.product(
                *(f.elements for f in self.factors)))
            if self.elements != expected:
                raise ValueError(
                    f"{self.name}: elements are not the product of its factors")
        if not self.elements:
            raise ValueError(f"{self.name}: a set needs at least one element")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"{self.name}: element labels must be distinct")

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.index

    def __repr__(self):
        return f"FiniteSet({self.name!r}, {len(self)} elements)"

    def __str__(self):
        return self.name

    def __matmul__(self, other: FiniteSet) -> FiniteSet:
        return product(self, other)

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}


UNIT = FiniteSet("I", ("*",))


def product(*factors: FiniteSet, name: str | None = None) -> FiniteSet:
    """Cartesian product; elements are tuples of factor elements."""
    if name is None:
        name = "×".join(f.name if f.factors is None else f"({f.name})"
                        for f in factors)
    return FiniteSet(
        name, tuple(itertools.product(*(f.elements for f in factors))),
        factors=factors)


@dataclass(frozen=True)
class Relation:
    """
    A relation ``dom -> cod`` stored as a set of (dom-index, cod-index) pairs.
    """
    dom: FiniteSet
    cod: FiniteSet
    graph: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        graph = frozenset(self.graph)
        n, m = len(self.dom), len(self.cod)
        for i, j in graph:
            if not (0 <= i < n and 0 <= j < m):
                raise ValueError(f"pair ({i}, {j}) out of range for "
                                 f"{self.dom.name} -> {self.cod.name}")
        object.__setattr__(self, "graph", graph)

    @classmethod
    def from_pairs(cls, dom: FiniteSet, cod: FiniteSet,
                   pairs: Iterable) -> Relation:
        """Build from (dom-element, cod-element) pairs."""
        try:
            graph = {(dom.index[a], cod.index[b]) for a, b in pairs}
        except KeyError as err:
            raise ValueError(f"unknown element {render(err.args[0])}") from None
        return cls(dom, cod, frozenset(graph))

    @classmethod
    def from_function(cls, dom: FiniteSet, cod: FiniteSet,
                      fn: Callable | Mapping) -> Relation:
        """
        Graph of a (possibly partial) function; ``None`` means undefined.
        """
        get = fn.get if isinstance(fn, Mapping) else fn
        pairs = []
        for x in dom:
            y = get(x)
            if y is not None:
                pairs.append((x, y))
        return cls.from_pairs(dom, cod, pairs)

    @classmethod
    def from_matrix(cls, dom: FiniteSet, cod: FiniteSet, mat) -> Relation:
        return cls(dom, cod, _matrix.to_graph(mat))

    @cached_property
    def matrix(self):
        """Dense boolean matrix view, rows indexed by ``dom``."""
        return _matrix.dense(self.graph, len(self.dom), len(self.cod))

    @cached_property
    def _sparse(self):
        return _matrix.from_graph(self.graph, len(self.dom), len(self.cod))

    @cached_property
    def rows(self) -> tuple:
        """Image of each domain index, as a tuple of frozensets."""
        rows = [set() for _ in range(len(self.dom))]
        for i, j in self.graph:
            rows[i].add(j)
        return tuple(frozenset(r) for r in rows)

    def image(self, element) -> list:
        """Codomain elements related to ``element``, in codomain order."""
        return [self.cod.elements[j]
                for j in sorted(self.rows[self.dom.index[element]])]

    def pairs(self) -> list:
        """Canonical ordered list of element pairs."""
        return [(self.dom.elements[i], self.cod.elements[j])
                for i, j in sorted(self.graph)]

    def serialize(self) -> str:
        return "\n".join(f"{render(a)} -> {render(b)}" for a, b in self.pairs())

    def is_function(self) -> bool:
        return all(len(r) == 1 for r in self.rows)

    def __len__(self):
        return len(self.graph)

    def __rshift__(self, other: Relation) -> Relation:
        return compose(self, other)

    def __matmul__(self, other: Relation) -> Relation:
        return tensor(self, other)

    def __repr__(self):
        return (f"Relation({self.dom.name} -> {self.cod.name}, "
                f"{len(self.graph)} pairs)")


class TypeMismatch(TypeError):
    """Raised when relations are composed or compared across different sets."""


# Backend selection.

@dataclass
class Options:
    backend: str = "auto"
    threshold: int = 64


options = Options()
BACKENDS = ("pairs", "matrix", "auto")


@contextmanager
def using_backend(backend: str, threshold: int | None = None):
    """Temporarily switch the evaluation backend."""
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    saved = options.backend, options.threshold
    options.backend = backend
    if threshold is not None:
        options.threshold = threshold
    try:
        yield options
    finally:
        options.backend, options.threshold = saved


def _use_matrix(backend, *sets) -> bool:
    backend = backend or options.backend
    if backend == "auto":
        return max(len(s) for s in sets) > options.threshold
    return backend == "matrix"


# Category structure.

def compose(f: Relation, g: Relation, backend: str | None = None) -> Relation:
    """Relational composite ``f ; g``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise TypeMismatch(
            f"cannot compose {f.dom.name} -> {f.cod.name} "
            f"with {g.dom.name} -> {g.cod.name}: "
            f"{f.cod.name} is not {g.dom.name}")
    if _use_matrix(backend, f.dom, f.cod, g.cod):
        return Relation.from_matrix(
            f.dom, g.cod, _matrix.compose(f._sparse, g._sparse))
    succ = g.rows
    graph = {(a, c) for a, b in f.graph for c in succ[b]}
    return Relation(f.dom, g.cod, frozenset(graph))


def tensor(f: Relation, g: Relation, backend: str | None = None) -> Relation:
    """Cartesian product of relations, on binary product sets."""
    dom, cod = product(f.dom, g.dom), product(f.cod, g.cod)
    if _use_matrix(backend, dom, cod):
        return Relation.from_matrix(
            dom, cod, _matrix.tensor(f._sparse, g._sparse))
    n, m = len(g.dom), len(g.cod)
    graph = {(a * n + c, b * m + d)
             for a, b in f.graph for c, d in g.graph}
    return Relation(dom, cod, frozenset(graph))


def dagger(f: Relation, backend: str | None = None) -> Relation:
    """Converse relation."""
    if _use_matrix(backend, f.dom, f.cod):
        return Relation.from_matrix(f.cod, f.dom, _matrix.dagger(f._sparse))
    return Relation(f.cod, f.dom, frozenset((j, i) for i, j in f.graph))


def identity(A: FiniteSet) -> Relation:
    return Relation(A, A, frozenset((i, i) for i in range(len(A))))


def full(A: FiniteSet, B: FiniteSet) -> Relation:
    """The relation relating everything to everything."""
    return Relation(A, B, frozenset(itertools.product(range(len(A)),
                                                      range(len(B)))))


def empty(A: FiniteSet, B: FiniteSet) -> Relation:
    return Relation(A, B, frozenset())


def state(A: FiniteSet, elements: Iterable = ()) -> Relation:
    """The state ``I -> A`` picking out a subset of ``A``."""
    return Relation.from_pairs(UNIT, A, [("*", x) for x in elements])


def effect(A: FiniteSet, elements: Iterable = ()) -> Relation:
    """The effect ``A -> I`` accepting a subset of ``A``."""
    return Relation.from_pairs(A, UNIT, [(x, "*") for x in elements])


def support(psi: Relation) -> list:
    """Elements picked out by a state ``I -> A``."""
    return psi.image("*")


def relations_equal(f: Relation, g: Relation) -> bool:
    """Exact equality of two parallel relations."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TypeMismatch(
            f"relations are not parallel: {f.dom.name} -> {f.cod.name} "
            f"vs {g.dom.name} -> {g.cod.name}")
    return f.graph == g.graph


def relabel(dom: FiniteSet, cod: FiniteSet, fn: Callable) -> Relation:
    """
    Bijective relabeling relation ``dom -> cod`` given by an element map.
    """
    rel = Relation.from_function(dom, cod, fn)
    if len(rel) != len(dom) or len(dom) != len(cod) \
            or len({j for _, j in rel.graph}) != len(cod):
        raise ValueError(f"relabeling {dom.name} -> {cod.name} is not a bijection")
    return rel


def braid(A: FiniteSet, B: FiniteSet) -> Relation:
    """The symmetry ``A×B -> B×A``, ``(a, b) ↦ (b, a)``."""
    return relabel(product(A, B), product(B, A), lambda x: (x[1], x[0]))


def reassociate(A: FiniteSet, B: FiniteSet, C: FiniteSet) -> Relation:
    """The associator ``(A×B)×C -> A×(B×C)``."""
    return relabel(product(product(A, B), C), product(A, product(B, C)),
                   lambda x: (x[0][0], (x[0][1], x[1])))


def reassociate_inv(A: FiniteSet, B: FiniteSet, C: FiniteSet) -> Relation:
    """The inverse associator ``A×(B×C) -> (A×B)×C``."""
    return dagger(reassociate(A, B, C), backend="pairs")


def drop_unit(A: FiniteSet) -> Relation:
    """The right unitor ``A×I -> A``."""
    return relabel(product(A, UNIT), A, lambda x: x[0])


def drop_unit_left(A: FiniteSet) -> Relation:
    """The left unitor ``I×A -> A``."""
    return relabel(product(UNIT, A), A, lambda x: x[1])


def middle_swap(A: FiniteSet, B: FiniteSet) -> Relation:
    """``(A×A)×(B×B) -> (A×B)×(A×B)``, exchanging the two middle wires."""
    return relabel(product(product(A, A), product(B, B)),
                   product(product(A, B), product(A, B)),
                   lambda x: ((x[0][0], x[1][0]), (x[0][1], x[1][1])))


def is_idempotent(f: Relation) -> bool:
    return f.dom == f.cod and (f >> f) == f


# Witnesses for failed equations.

@dataclass(frozen=True)
class Witness:
    """An input whose images under two parallel relations differ."""
    input: object
    left: tuple
    right: tuple

    def to_dict(self) -> dict:
        return {"input": render(self.input),
                "left": [render(x) for x in self.left],
                "right": [render(x) for x in self.right]}


def find_witness(f: Relation, g: Relation) -> Witness | None:
    """Lexicographically first input on which ``f`` and ``g`` differ."""
    if not relations_equal(f, g):
        rows_f, rows_g = f.rows, g.rows
        for i, x in enumerate(f.dom.elements):
            if rows_f[i] != rows_g[i]:
                return Witness(x, tuple(f.image(x)), tuple(g.image(x)))
    return None
