"""
A monkey eating a banana
========================

The fruit's colour and taste now live inside a larger system that also
records how the monkey feels.
"""

from conceptcat import (
    FiniteSet, Relation, classify, correlated_update, functional_correlator,
    getput_composite, product, product_system_updates, restrict_getput,
    restricted_system, states_of,
)

emotion = FiniteSet("Emotion", ("happy", "sad"))
colour = FiniteSet("Colour", ("yellow", "green"))
taste = FiniteSet("Taste", ("bitter", "sweet"))
factors = (emotion, colour, taste)
monkey = product(*factors)
print(len(monkey), "monkey configurations")

P = Relation.from_function(colour, taste, {"yellow": "sweet", "green": "bitter"})
banana = functional_correlator(P, name="banana")
eating = correlated_update(product_system_updates(factors, 1, system=monkey),
                           product_system_updates(factors, 2, system=monkey),
                           banana, name="eating")
print("eating:", classify(eating).classification)

# put after get only keeps configurations with a consistent banana,
# and leaves the emotion alone
print(getput_composite(eating).serialize())

# cutting the system down to those configurations repairs GetPut
print("restricted:", classify(restrict_getput(eating)).classification)

states = list(states_of(restricted_system(eating)))
print(len(states), "states")
for s in states[:5]:
    print(sorted(s.image("*")))
