"""
Black-box oracles on a qubit register
=====================================

A boolean function f on n bits becomes a reversible map on n+1 qubits:
|y>|x> -> |y XOR f(x)>|x> with the answer wire y on top.  The map is a
basis permutation and its own inverse.  This script builds a few
functions, applies them, and checks the involution by hand.
"""

import numpy as np

from modalq import (
    apply_oracle,
    basis_state,
    boolfn_from_table,
    constant_false,
    count_sat,
    from_coeffs,
    point_function,
    satisfying_assignments,
    to_state,
)

# a function is just its truth table; x=0b10 means x1=1, x2=0
f = boolfn_from_table(2, [0, 0, 1, 0])
print("truth table of f:", [f(x) for x in range(4)])
print("satisfying assignments:", satisfying_assignments(f))
print("count:", count_sat(f))

# on basis states the oracle only toggles the top wire where f fires
print()
print("oracle action on all 8 basis states (y x1 x2):")
for i in range(8):
    s = basis_state(3, i)
    print("  ", s, "->", apply_oracle(f, s))

# a superposed query sees every assignment at once
print()
query = to_state(from_coeffs(3, {0b000: 1, 0b010: 1, 0b011: 1}))
print("query   :", query)
print("answered:", apply_oracle(f, query))

# applying the oracle twice is the identity
print()
twice = apply_oracle(f, apply_oracle(f, query))
print("applied twice:", twice, "(same as the query:", twice == query, ")")

# the point function family singles out one assignment; constant_false
# fires nowhere
g = point_function(4, 0b1011)
print()
print("point function at 0b1011 satisfied by:", satisfying_assignments(g))
print("constant false has", count_sat(constant_false(4)), "satisfying assignments")

# truth tables can be any 0/1 array, e.g. a random parity-heavy function
rng = np.random.default_rng(11)
h = boolfn_from_table(3, rng.integers(0, 2, size=8).tolist())
print()
print("random f on 3 bits, table", [h(x) for x in range(8)],
      "-> count", count_sat(h))
