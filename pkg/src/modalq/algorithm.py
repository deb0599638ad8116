"""A constant-depth UNIQUE-SAT decider over GF(2).

Given f on n inputs promised to have at most one satisfying assignment,
one run on an (n+1)-qubit register decides satisfiability exactly.  The
circuit is:

    init      |0⟩|0...0⟩
    spread    s on every input wire
    oracle    |y⟩|x⟩ -> |y XOR f(x)⟩|x⟩
    unspread  s on every input wire again
    sdag_y    s_dag on the answer wire
    cnot      fan-out CNOT from the answer wire onto every input wire
    sdag_y2   s_dag on the answer wire again
    decide    read the support of the final state

If f is unsatisfiable the final state is exactly |0⟩|0...0⟩.  If f has
one satisfying assignment, mod-2 cancellation removes the |0...0⟩ term
from the final expansion, so index 0 leaves the support.  The verdict is
therefore: UNSAT iff the support is exactly {0}, SAT iff 0 is absent.
Depth does not grow with n: the input-wire layers act on disjoint wires.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InternalContradictionError, PromiseViolatedError
from .oracle import BoolFn, apply_oracle, count_sat
from .ops import S, S_DAG, apply_single, fanout_cnot
from .state import State, basis_state

STEP_LABELS = (
    "init",
    "spread",
    "oracle",
    "unspread",
    "sdag_y",
    "cnot",
    "sdag_y2",
    "decide",
)


class Verdict(enum.Enum):
    UNSAT = "unsat"
    SAT = "sat"


@dataclass(frozen=True)
class Trace:
    """The eight labeled intermediate states of one run."""

    steps: tuple[tuple[str, State], ...]

    def __post_init__(self):
        if tuple(label for label, _ in self.steps) != STEP_LABELS:
            raise ValueError("trace must carry exactly the eight step labels")

    def state(self, label: str) -> State:
        for step_label, st in self.steps:
            if step_label == label:
                return st
        raise KeyError(label)


@dataclass(frozen=True)
class OpCounts:
    """Gate tally for one run; depth bookkeeping, not part of the result JSON."""

    single_qubit: int
    oracle_calls: int
    fanout_cnots: int


@dataclass(frozen=True)
class RunResult:
    n: int
    verdict: Verdict
    sat_count: int | None
    final_support: list[int]
    op_counts: OpCounts
    outcome: int | None = None
    trace: Trace | None = None

    def to_json_dict(self) -> dict:
        """The stable result schema: n, verdict, sat_count, support, outcome, trace."""
        return {
            "n": self.n,
            "verdict": self.verdict.value,
            "sat_count": self.sat_count,
            "support": list(self.final_support),
            "outcome": self.outcome,
            "trace": None
            if self.trace is None
            else [{"label": label, "state": str(st)} for label, st in self.trace.steps],
        }


def check_promise(fn: BoolFn) -> int:
    """Ground-truth satisfying-assignment count (classical, exhaustive)."""
    return count_sat(fn)


def _execute(fn: BoolFn, backend: str, capture_trace: bool):
    n = fn.n
    m = n + 1
    steps: list[tuple[str, State]] = []
    singles = 0

    st = basis_state(m, 0, backend=backend)
    if capture_trace:
        steps.append(("init", st))
    for q in range(1, m):
        st = apply_single(S, q, st)
        singles += 1
    if capture_trace:
        steps.append(("spread", st))
    st = apply_oracle(fn, st)
    if capture_trace:
        steps.append(("oracle", st))
    for q in range(1, m):
        st = apply_single(S, q, st)
        singles += 1
    if capture_trace:
        steps.append(("unspread", st))
    st = apply_single(S_DAG, 0, st)
    singles += 1
    if capture_trace:
        steps.append(("sdag_y", st))
    st = fanout_cnot(0, range(1, m), st)
    if capture_trace:
        steps.append(("cnot", st))
    st = apply_single(S_DAG, 0, st)
    singles += 1
    if capture_trace:
        # the decision step inspects the same state, no further evolution
        steps.append(("sdag_y2", st))
        steps.append(("decide", st))
    trace = Trace(tuple(steps)) if capture_trace else None
    return st, trace, OpCounts(singles, 1, 1)


def _decide(support: list[int]) -> Verdict:
    if support == [0]:
        return Verdict.UNSAT
    if support and support[0] != 0:
        return Verdict.SAT
    raise InternalContradictionError(support)


def _prepare(fn: BoolFn, skip_promise_check: bool) -> int | None:
    if skip_promise_check:
        return None
    sat_count = count_sat(fn)
    if sat_count > 1:
        raise PromiseViolatedError(sat_count)
    return sat_count


def run_unique_sat(
    fn: BoolFn,
    *,
    backend: str = "dense",
    skip_promise_check: bool = False,
    capture_trace: bool = False,
) -> RunResult:
    """Decide f by support inspection.

    The promise is checked classically up front unless skipped; a checked
    run that still ends with a mixed support (index 0 plus others) would
    be a bug and raises, as does an unchecked run on a promise-violating
    f whose satisfying-assignment count is even.
    """
    sat_count = _prepare(fn, skip_promise_check)
    st, trace, counts = _execute(fn, backend, capture_trace)
    sup = st.support()
    return RunResult(
        n=fn.n,
        verdict=_decide(sup),
        sat_count=sat_count,
        final_support=sup,
        op_counts=counts,
        trace=trace,
    )


def run_unique_sat_sampled(
    fn: BoolFn,
    seed: int,
    *,
    backend: str = "dense",
    skip_promise_check: bool = False,
    capture_trace: bool = False,
) -> RunResult:
    """Decide f from one seeded measurement: UNSAT iff the outcome is index 0.

    Under the promise this agrees with the support rule for every seed,
    because the final support either is exactly {0} or misses 0 entirely.
    """
    sat_count = _prepare(fn, skip_promise_check)
    st, trace, counts = _execute(fn, backend, capture_trace)
    sup = st.support()
    _decide(sup)  # reject mixed support before naming an outcome
    outcome = st.measure(seed)
    return RunResult(
        n=fn.n,
        verdict=Verdict.UNSAT if outcome == 0 else Verdict.SAT,
        sat_count=sat_count,
        final_support=sup,
        op_counts=counts,
        outcome=outcome,
        trace=trace,
    )


def trace(fn: BoolFn, *, backend: str = "dense") -> Trace:
    """The eight labeled states of a promise-checked run."""
    result = run_unique_sat(fn, backend=backend, capture_trace=True)
    assert result.trace is not None
    return result.trace
