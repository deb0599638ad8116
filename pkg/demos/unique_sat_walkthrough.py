"""
Deciding UNIQUE-SAT with one oracle call
========================================

Under the promise that f has at most one satisfying assignment, a fixed
eight-step circuit decides satisfiability exactly: the final support is
{0} precisely when f is unsatisfiable, and misses 0 entirely when it is
satisfiable.  No amplitudes, no probability, constant depth.
"""

from modalq import (
    PromiseViolatedError,
    Verdict,
    constant_false,
    point_function,
    run_unique_sat,
    run_unique_sat_sampled,
    trace,
)

# watch the register evolve for a satisfiable 2-bit instance
print("point function at assignment 10 (x1=1, x2=0):")
for label, state in trace(point_function(2, 0b10)).steps:
    print(f"  {label:<9} {state}")
result = run_unique_sat(point_function(2, 0b10))
print("verdict:", result.verdict.value, "| final support:", result.final_support)

# the unsatisfiable case collapses straight back to |0>|00>
print()
print("constant false on 2 bits:")
for label, state in trace(constant_false(2)).steps:
    print(f"  {label:<9} {state}")
result = run_unique_sat(constant_false(2))
print("verdict:", result.verdict.value, "| final support:", result.final_support)

# the verdict needs no full support readout: a single measured outcome
# settles it, for any seed, because 0 is either everything or nothing
print()
for seed in range(5):
    r = run_unique_sat_sampled(point_function(2, 0b10), seed)
    print(f"seed {seed}: outcome {r.outcome} -> {r.verdict.value}")

# the circuit cost is fixed: 2n+2 single-qubit maps, one oracle call,
# one fanout
print()
for n in (2, 8, 16):
    r = run_unique_sat(point_function(n, 1))
    c = r.op_counts
    print(f"n={n:>2}: {c.single_qubit} single-qubit maps,",
          f"{c.oracle_calls} oracle call, {c.fanout_cnots} fanout")

# feed it a two-solution function and it refuses rather than guessing
print()
try:
    run_unique_sat(point_function(2, 0))  # fine: one solution
    from modalq import boolfn_from_table
    run_unique_sat(boolfn_from_table(2, [1, 0, 0, 1]))
except PromiseViolatedError as exc:
    print("promise violation caught: sat_count =", exc.sat_count)

assert run_unique_sat(constant_false(5)).verdict is Verdict.UNSAT
print()
print("done")
