"""Quantum-style register simulation over prime fields.

States are nonzero coefficient vectors over GF(p) (GF(2) by default),
with no amplitudes and no probabilities: evolution is by invertible
linear maps, and measurement returns some element of the support.  On
GF(2) this is enough to decide UNIQUE-SAT with a single constant-depth
circuit, implemented in `modalq.algorithm`.
"""
from .algorithm import (
    OpCounts,
    RunResult,
    STEP_LABELS,
    Trace,
    Verdict,
    check_promise,
    run_unique_sat,
    run_unique_sat_sampled,
    trace,
)
from .dimacs import (
    BadHeaderError,
    BadLiteralError,
    ClauseCountMismatchError,
    DimacsError,
    LiteralOutOfRangeError,
    MissingHeaderError,
    ParseDiagnostic,
    UnterminatedClauseError,
    format_dimacs,
    parse_dimacs,
)
from .errors import (
    ControlInTargetsError,
    DimensionMismatchError,
    InternalContradictionError,
    MixedFieldError,
    ModalQError,
    NonInvertibleGateError,
    PromiseViolatedError,
    RegisterTooLargeError,
    TooManyVariablesError,
    UnsupportedFieldError,
    ZeroVectorError,
)
from .field import GF2, FieldSpec, Scalar
from .oracle import (
    CNF,
    BoolFn,
    apply_oracle,
    boolfn_from_cnf,
    boolfn_from_table,
    constant_false,
    constant_true,
    count_sat,
    point_function,
    random_point_function,
    satisfying_assignments,
)
from .ops import (
    Gate2,
    I,
    S,
    S_DAG,
    X,
    apply_single,
    apply_single_raw,
    compose,
    enumerate_1q_maps,
    fanout_cnot,
    inverse,
    is_invertible,
    named_gate,
    one_qubit_action,
)
from .state import (
    MAX_QUBITS,
    State,
    Vector,
    add_vectors,
    basis_state,
    from_coeffs,
    measure,
    support,
    tensor,
    to_state,
)

__version__ = "0.1.0"

__all__ = [
    "BadHeaderError",
    "BadLiteralError",
    "BoolFn",
    "CNF",
    "ClauseCountMismatchError",
    "ControlInTargetsError",
    "DimacsError",
    "DimensionMismatchError",
    "FieldSpec",
    "GF2",
    "Gate2",
    "I",
    "InternalContradictionError",
    "LiteralOutOfRangeError",
    "MAX_QUBITS",
    "MissingHeaderError",
    "MixedFieldError",
    "ModalQError",
    "NonInvertibleGateError",
    "OpCounts",
    "ParseDiagnostic",
    "PromiseViolatedError",
    "RegisterTooLargeError",
    "RunResult",
    "S",
    "S_DAG",
    "STEP_LABELS",
    "Scalar",
    "State",
    "TooManyVariablesError",
    "Trace",
    "UnsupportedFieldError",
    "UnterminatedClauseError",
    "Vector",
    "Verdict",
    "X",
    "ZeroVectorError",
    "add_vectors",
    "apply_oracle",
    "apply_single",
    "apply_single_raw",
    "basis_state",
    "boolfn_from_cnf",
    "boolfn_from_table",
    "check_promise",
    "compose",
    "constant_false",
    "constant_true",
    "count_sat",
    "enumerate_1q_maps",
    "fanout_cnot",
    "format_dimacs",
    "from_coeffs",
    "inverse",
    "is_invertible",
    "measure",
    "named_gate",
    "one_qubit_action",
    "parse_dimacs",
    "point_function",
    "random_point_function",
    "run_unique_sat",
    "run_unique_sat_sampled",
    "satisfying_assignments",
    "support",
    "tensor",
    "to_state",
    "trace",
]
