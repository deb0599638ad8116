"""Strict-by-default DIMACS CNF reader and writer.

Accepted shape: comment lines starting with 'c', one 'p cnf <vars> <clauses>'
header, then whitespace-separated signed integer literals where 0 ends a
clause.  Strict mode enforces the declared clause count and final
terminator; lenient mode tolerates a missing final 0, surplus or missing
clauses, and a '%' end-of-input marker.  Errors carry a 1-based line and
column pointing at the offending token.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ModalQError
from .oracle import CNF

MAX_VARS = 26

_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    kind: str


class DimacsError(ModalQError, ValueError):
    """Malformed DIMACS input, with a positioned diagnostic attached."""

    kind = "dimacs"

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.diagnostic = ParseDiagnostic(line, column, message, self.kind)


class MissingHeaderError(DimacsError):
    kind = "missing-header"


class BadHeaderError(DimacsError):
    kind = "bad-header"


class BadLiteralError(DimacsError):
    kind = "bad-literal"


class LiteralOutOfRangeError(DimacsError):
    kind = "literal-out-of-range"


class UnterminatedClauseError(DimacsError):
    kind = "unterminated-clause"


class ClauseCountMismatchError(DimacsError):
    kind = "clause-count-mismatch"


def parse_dimacs(text: str | bytes, *, lenient: bool = False) -> CNF:
    """Parse DIMACS CNF text; raises a DimacsError subclass on bad input."""
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8", errors="replace")

    lines = text.splitlines()
    num_vars = num_clauses = -1
    header_pos = (1, 1)
    clauses: list[list[int]] = []
    current: list[int] = []
    current_pos = (1, 1)
    done = False

    for lineno, raw in enumerate(lines, start=1):
        if done:
            break
        stripped = raw.lstrip()
        if not stripped or stripped.startswith("c"):
            continue
        if num_vars < 0:
            first = _TOKEN.search(raw)
            assert first is not None
            if first.group() != "p":
                raise MissingHeaderError(
                    lineno,
                    first.start() + 1,
                    f"expected 'p cnf <vars> <clauses>' header, found {first.group()!r}",
                )
            num_vars, num_clauses = _parse_header(raw, lineno)
            header_pos = (lineno, first.start() + 1)
            continue
        for tok in _TOKEN.finditer(raw):
            col = tok.start() + 1
            word = tok.group()
            if word == "%" and lenient:
                done = True
                break
            if not _INT.match(word):
                raise BadLiteralError(lineno, col, f"expected an integer literal, found {word!r}")
            lit = int(word)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                if abs(lit) > num_vars:
                    raise LiteralOutOfRangeError(
                        lineno,
                        col,
                        f"literal {lit} references variable {abs(lit)}, "
                        f"but the header declares only {num_vars}",
                    )
                if not current:
                    current_pos = (lineno, col)
                current.append(lit)

    end_line = max(1, len(lines))
    if num_vars < 0:
        raise MissingHeaderError(end_line, 1, "no 'p cnf' header found")
    if current:
        if lenient:
            clauses.append(current)
        else:
            raise UnterminatedClauseError(
                current_pos[0],
                current_pos[1],
                "clause is not terminated by 0 before end of input",
            )
    if not lenient and len(clauses) != num_clauses:
        raise ClauseCountMismatchError(
            header_pos[0],
            header_pos[1],
            f"header declares {num_clauses} clauses, found {len(clauses)}",
        )
    return CNF(num_vars, clauses)


def _parse_header(raw: str, lineno: int) -> tuple[int, int]:
    toks = list(_TOKEN.finditer(raw))
    words = [t.group() for t in toks]
    if len(words) != 4 or words[0] != "p" or words[1] != "cnf":
        col = toks[min(1, len(toks) - 1)].start() + 1
        raise BadHeaderError(
            lineno, col, f"malformed header {' '.join(words)!r}; expected 'p cnf <vars> <clauses>'"
        )
    counts = []
    for t in toks[2:]:
        if not _INT.match(t.group()) or int(t.group()) < 0:
            raise BadHeaderError(
                lineno, t.start() + 1, f"header count {t.group()!r} is not a nonnegative integer"
            )
        counts.append(int(t.group()))
    num_vars, num_clauses = counts
    if num_vars > MAX_VARS:
        raise BadHeaderError(
            lineno,
            toks[2].start() + 1,
            f"header declares {num_vars} variables; this tool accepts at most {MAX_VARS}",
        )
    return num_vars, num_clauses


def format_dimacs(cnf: CNF) -> str:
    """Canonical text: header, then one 0-terminated clause per line."""
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for clause in cnf.clauses:
        lines.append(" ".join(str(lit) for lit in (*clause, 0)))
    return "\n".join(lines) + "\n"
