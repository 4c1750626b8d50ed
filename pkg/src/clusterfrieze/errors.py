"""Domain errors, each carrying a stable machine-readable code.

Every failure mode that user input can trigger maps onto one of these;
the CLI prints {"error": code, "detail": ...} and exits 1, the server
returns HTTP 422 with the same payload. Bugs raise ordinary exceptions.
"""
from __future__ import annotations


class DomainError(Exception):
    """Base class: a well-formed request whose mathematics fails."""

    code = "domain_error"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.code)
        self.detail = detail or self.code

    def to_json_obj(self) -> dict:
        return {"error": self.code, "detail": self.detail}


class InvalidInput(DomainError):
    """Structurally bad payload: wrong field, bad shape, bad value."""

    code = "invalid_input"


class NotDivisible(DomainError):
    """Exact Laurent division requested where no Laurent quotient exists."""

    code = "not_divisible"


class LaurentViolation(DomainError):
    """Seed mutation produced a non-Laurent exchange (wraps NotDivisible)."""

    code = "laurent_violation"


class NonInteger(DomainError):
    """Frieze propagation produced a non-integer cell."""

    code = "non_integer"


class NonPositive(DomainError):
    """Frieze cell came out zero or negative."""

    code = "non_positive"


class DoesNotClose(DomainError):
    """Frieze rows fail to close with a trivial row of ones."""

    code = "does_not_close"


class MalformedFrieze(DomainError):
    """Frieze data violates the defining identities."""

    code = "malformed_frieze"


class NotFiniteType(DomainError):
    """Operation requires a finite-type quiver and the input is not one."""

    code = "not_finite_type"


class BudgetExceeded(DomainError):
    """Exchange-graph exploration hit its node budget before closing.

    Carries the partial graph explored so far in .graph.
    """

    code = "budget_exceeded"

    def __init__(self, detail: str = "", graph=None):
        super().__init__(detail)
        self.graph = graph


class WindowTooSmall(DomainError):
    """Mesh computation asked about vertices outside the given window."""

    code = "window_too_small"
