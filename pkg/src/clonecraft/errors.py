"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Arity, length or base mismatch between arguments."""


class DomainMismatch(ValueError):
    """Two objects live over incompatible domains (e.g. undefined composition)."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what, required, budget):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: requires {required}, budget is {budget}")


class WorkspaceError(ValueError):
    """Syntax or validation error in a workspace file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
