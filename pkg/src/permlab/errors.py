class DomainError(ValueError):
    """An argument violates a documented precondition."""


class BudgetError(RuntimeError):
    """A requested computation exceeds the desk-scale enumeration budget."""
