"""
From a DIMACS file to a verdict
===============================

CNF text in, satisfiability out: parse the standard "p cnf" format,
compile the clauses to a truth table, and run the decider.  Parse errors
carry line and column, and a lenient mode shrugs off the common damage
found in files circulating in the wild.
"""

from modalq import (
    DimacsError,
    boolfn_from_cnf,
    count_sat,
    format_dimacs,
    parse_dimacs,
    run_unique_sat,
)

TEXT = """\
c a 3-variable instance with exactly one solution: 1=T, 2=F, 3=T
p cnf 3 4
1 0
-2 0
3 0
-1 2 3 0
"""

cnf = parse_dimacs(TEXT)
print("parsed:", cnf.num_vars, "vars,", len(cnf.clauses), "clauses")
print("clauses:", cnf.clauses)

fn = boolfn_from_cnf(cnf)
print("satisfying assignments:", count_sat(fn))

result = run_unique_sat(fn)
print("verdict:", result.verdict.value)

# the canonical writer emits one clause per line; round-trips are exact
print()
print("canonical form:")
print(format_dimacs(cnf), end="")
assert parse_dimacs(format_dimacs(cnf)).clauses == cnf.clauses

# strict parsing pinpoints damage
print()
broken = "p cnf 2 2\n1 0\n-2\n"
try:
    parse_dimacs(broken)
except DimacsError as exc:
    d = exc.diagnostic
    print(f"strict parse failed ({d.kind}) at line {d.line}, column {d.column}:")
    print("  ", d.message)

# lenient mode accepts the same text
rescued = parse_dimacs(broken, lenient=True)
print("lenient parse recovered clauses:", rescued.clauses)
print("verdict:", run_unique_sat(boolfn_from_cnf(rescued)).verdict.value)
