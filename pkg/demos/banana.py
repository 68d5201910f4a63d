"""
Bananas in Rel
==============

Colour and taste of a banana as two properties of one fruit, tied together
by a correlator.
"""

from conceptcat import (
    FiniteSet, Relation, classify, correlated_update, functional_correlator,
    product, product_system_updates,
)

colour = FiniteSet("Colour", ("yellow", "green"))
taste = FiniteSet("Taste", ("bitter", "sweet"))

# ripe bananas are yellow and sweet, unripe ones green and bitter
P = Relation.from_function(colour, taste, {"yellow": "sweet", "green": "bitter"})
banana = functional_correlator(P, name="banana")
print("correlator:")
print(banana.map.serialize())

# the fruit itself is just the pair (colour, taste)
fruit = product(colour, taste)
u_colour = product_system_updates((colour, taste), 0, system=fruit)
u_taste = product_system_updates((colour, taste), 1, system=fruit)
for u in (u_colour, u_taste):
    print(u.name or "field", classify(u).classification)

ripeness = correlated_update(u_colour, u_taste, banana, name="ripeness")
v = classify(ripeness)
print("ripeness:", v.classification)
# GetPut breaks on a fruit that is already inconsistent
print("getput witness:", v.getput.witness.input)
