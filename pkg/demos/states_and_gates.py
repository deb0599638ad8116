"""
States and gates on a single GF(2) qubit
========================================

A qubit over the two-element field has exactly three states: the two
basis kets and their sum.  Run this top to bottom to see the full state
census, the superposition identities, and every linear map the qubit
admits.
"""

from modalq import (
    S,
    S_DAG,
    X,
    apply_single,
    basis_state,
    enumerate_1q_maps,
    one_qubit_action,
    to_state,
)

# the three states
zero = basis_state(1, 0)
one = basis_state(1, 1)
plus = to_state(zero + one)

print("the three one-qubit states:")
for s in (zero, one, plus):
    print("  ", s)

# addition is mod-2, so any two distinct states sum to the third
print()
print("superposition identities:")
print("   |0> + |1> =", to_state(zero + one))
print("   |0> + |+> =", to_state(zero + plus))
print("   |1> + |+> =", to_state(one + plus))

# S swaps |0> and |+> while fixing |1>; S_DAG swaps |1> and |+>
print()
print("the spread gate S =", S)
for s in (zero, one, plus):
    print("   S", s, "->", apply_single(S, 0, s))

print("its partner S_DAG =", S_DAG)
for s in (zero, one, plus):
    print("   S_DAG", s, "->", apply_single(S_DAG, 0, s))

print("plain bit flip X =", X)
for s in (zero, one, plus):
    print("   X", s, "->", apply_single(X, 0, s))

# census: 16 2x2 matrices over GF(2), 6 invertible, 10 singular.  The
# invertible ones realize every permutation of the three states.
invertible, singular = enumerate_1q_maps()
print()
print(f"{len(invertible) + len(singular)} one-qubit maps:",
      f"{len(invertible)} invertible, {len(singular)} singular")
print()
print("action of each invertible map on (0, 1, +):")
for g in invertible:
    act = one_qubit_action(g)
    print("  ", g, "->", (act["0"], act["1"], act["+"]))
print()
print("singular maps annihilate or merge states (None = zero image):")
for g in singular:
    act = one_qubit_action(g)
    print("  ", g, "->", (act["0"], act["1"], act["+"]))
