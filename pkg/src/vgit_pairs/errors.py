class InputError(ValueError):
    """Malformed or inconsistent input (dimension/degree mismatch, empty sets)."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation, e.g. t out of range."""


class ParseError(InputError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
