"""
Multiplier classes and isomorphism
==================================

Multiplying a connection set by a unit of Z_n gives an isomorphic circulant.
The converse (Adam's isomorphism conjecture) fails in general, e.g. on Z_8,
but an exhaustive check finds no such partner for {2, 3, 8} on Z_12.
"""

from circham import are_isomorphic, are_multiplier_equivalent, circulant, find_adam_pairs
from circham.search import multiplier_class

print("class of {2,3,8}:", multiplier_class(12, (2, 3, 8)))
print("unit taking {2,3,8} to {3,4,10}:", are_multiplier_equivalent(12, (2, 3, 8), (3, 4, 10)))
print("isomorphism:", are_isomorphic(circulant(12, [2, 3, 8]), circulant(12, [3, 4, 10])))

for p in find_adam_pairs(8, 3):
    print(f"Z_8: {p.set_a} ~ {p.set_b} via {p.mapping}")

print("Z_12 partners of {2,3,8}:", find_adam_pairs(12, 3, anchor=(2, 3, 8)))
