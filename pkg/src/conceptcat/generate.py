"""
Random finite structures for property testing.

Everything takes an explicit ``random.Random`` so runs are reproducible
from a seed.
"""

from __future__ import annotations

import itertools
import random

from conceptcat.algebra import Comagma, Magma, canonical_copy
from conceptcat.correlator import correlated_update, functional_correlator
from conceptcat.finrel import FiniteSet, Relation, dagger, identity, product, relabel
from conceptcat.update import UpdateStructure, product_system_updates


def random_set(rng: random.Random, prefix: str, max_size: int,
               min_size: int = 1) -> FiniteSet:
    n = rng.randint(min_size, max_size)
    return FiniteSet(prefix, [f"{prefix.lower()}{i}" for i in range(n)])


def random_relation(rng: random.Random, A: FiniteSet, B: FiniteSet,
                    density: float = 0.5) -> Relation:
    graph = {(i, j) for i in range(len(A)) for j in range(len(B))
             if rng.random() < density}
    return Relation(A, B, frozenset(graph))


def random_sparse_relation(rng: random.Random, A: FiniteSet,
                           B: FiniteSet) -> Relation:
    """About as many pairs as the larger set has elements."""
    k = rng.randint(0, 2 * max(len(A), len(B)))
    graph = {(rng.randrange(len(A)), rng.randrange(len(B))) for _ in range(k)}
    return Relation(A, B, frozenset(graph))


def random_function(rng: random.Random, A: FiniteSet, B: FiniteSet) -> Relation:
    return Relation.from_function(A, B, {a: rng.choice(B.elements) for a in A})


def _partial_copy(rng, p):
    # any sub-diagonal is cocommutative and coassociative
    keep = [v for v in p if rng.random() < 0.8] or list(p)
    return Comagma(p, Relation.from_pairs(p, product(p, p),
                                          [(v, (v, v)) for v in keep]))


def _flip(rng, rel):
    pair = (rng.randrange(len(rel.dom)), rng.randrange(len(rel.cod)))
    return Relation(rel.dom, rel.cod, rel.graph ^ {pair})


def noise_structure(rng: random.Random, max_size: int = 4) -> UpdateStructure:
    """Put, get and mix drawn at density 0.5; copy a random sub-diagonal."""
    S = random_set(rng, "S", max_size)
    p = random_set(rng, "P", max_size)
    return UpdateStructure(
        put=random_relation(rng, product(S, p), S),
        get=random_relation(rng, S, product(S, p)),
        mix=Magma(p, random_relation(rng, product(p, p), p)),
        copy=_partial_copy(rng, p),
        name="noise",
    )


def lens_structure(rng: random.Random, max_size: int = 4,
                   perturb: float = 0.5) -> UpdateStructure:
    """
    A system ``S`` identified with ``K×p`` through a random bijection, with
    the field update on ``p``; with probability ``perturb`` one pair of one
    of put, get or mix is flipped.
    """
    shapes = [(k, m) for k in range(1, max_size + 1)
              for m in range(1, max_size + 1) if k * m <= max_size]
    k, m = rng.choice(shapes)
    K = FiniteSet("K", [f"k{i}" for i in range(k)])
    p = FiniteSet("P", [f"p{i}" for i in range(m)])
    inner = product(K, p)
    labels = [f"s{i}" for i in range(len(inner))]
    rng.shuffle(labels)
    S = FiniteSet("S", sorted(labels, key=lambda s: int(s[1:])))
    to_s = dict(zip(inner.elements, labels))
    iso = relabel(inner, S, to_s.get)
    back = dagger(iso)
    base = product_system_updates((K, p), 1, system=inner)
    put = (back @ identity(p)) >> base.put >> iso
    get = back >> base.get >> (iso @ identity(p))
    mix = base.mix
    if rng.random() < perturb:
        which = rng.randrange(3)
        if which == 0:
            put = _flip(rng, put)
        elif which == 1:
            get = _flip(rng, get)
        else:
            mix = Magma(p, _flip(rng, mix.mult))
    return UpdateStructure(put, get, mix, canonical_copy(p), name="lens")


def random_structure(rng: random.Random, max_size: int = 4) -> UpdateStructure:
    if rng.random() < 0.5:
        return noise_structure(rng, max_size)
    return lens_structure(rng, max_size)


def random_correlated_update(rng: random.Random, max_size: int = 3):
    """
    Two field updates on ``E×C×T`` correlated through ``functional_correlator``
    of a random relation (half the time a function) ``C -> T``.

    Returns ``(correlator, correlated update)``.
    """
    E = random_set(rng, "E", max_size)
    C = random_set(rng, "C", max_size)
    T = random_set(rng, "T", max_size)
    if rng.random() < 0.5:
        P = random_function(rng, C, T)
    else:
        P = random_relation(rng, C, T)
    x = functional_correlator(P, name="random")
    factors = (E, C, T)
    S = product(*factors)
    uc = product_system_updates(factors, 1, system=S)
    ut = product_system_updates(factors, 2, system=S)
    return x, correlated_update(uc, ut, x)


def all_states(A: FiniteSet):
    """Every subset of ``A`` as a tuple of elements, used as an oracle."""
    for size in range(len(A) + 1):
        yield from itertools.combinations(A.elements, size)

