"""
Concepts built from concepts
============================

A smile correlates taste with emotion. The monkey concept correlates the
banana concept with the smile concept.
"""

import numpy as np

from conceptcat import (
    FiniteSet, Relation, absorption_chain, functional_correlator,
    iterate_concept, make_concept, product, states_of,
)
from conceptcat.matrix import from_graph

emotion = FiniteSet("Emotion", ("happy", "sad"))
colour = FiniteSet("Colour", ("yellow", "green"))
taste = FiniteSet("Taste", ("bitter", "sweet"))

P = Relation.from_function(colour, taste, {"yellow": "sweet", "green": "bitter"})
smiles = Relation.from_function(taste, emotion, {"sweet": "happy", "bitter": "sad"})
banana = make_concept(functional_correlator(P, name="banana"))
smile = make_concept(functional_correlator(smiles, name="smile"))

for k in (banana, smile):
    print(k.name, "states:", sum(1 for _ in states_of(k)))

# the outer correlator only ever relates consistent bananas to consistent smiles
enjoys = Relation.from_pairs(
    product(colour, taste), product(taste, emotion),
    [(("yellow", "sweet"), ("sweet", "happy")),
     (("green", "bitter"), ("bitter", "sad"))])
monkey = iterate_concept(functional_correlator(enjoys, name="monkey"),
                         (banana, smile), name="Monkey")
for law in absorption_chain(monkey.idem, (banana, smile)):
    print(law.law, "holds" if law.holds else "fails")

# the idempotent as a boolean matrix: 16x16 with one diagonal entry per fixed pair
x = monkey.idem
M = from_graph(x.graph, len(x.dom), len(x.cod)).toarray()
print(M.shape, int(M.sum()), "nonzero")
print(np.argwhere(M))
print(sum(1 for _ in states_of(monkey)), "monkey states")
