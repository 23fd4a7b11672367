class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(ValueError):
    """A valid but unsupported or unsafe combination of parameters."""


class CapacityError(RuntimeError):
    """A computation would exceed the configured size guard."""


class ContractViolation(RuntimeError):
    """An invariant that a theorem guarantees was observed to fail."""
