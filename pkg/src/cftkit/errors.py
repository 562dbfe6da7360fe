"""Exception types shared across the toolkit."""


class CftError(Exception):
    """Base class for all toolkit errors."""


class ModelError(CftError):
    """A model is semantically invalid or a lookup failed.

    Carries the ValidationReport when raised from a validator-backed
    operation (e.g. flatten on an invalid system).
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(CftError):
    """Syntax error in DSL source, located at (line, col), both 1-based."""

    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class NonCoherentTree(CftError):
    """Cut-set analysis requested on a cone containing XOR gates."""


class OracleLimitError(CftError):
    """A brute-force oracle refused an input above its size limit."""


class NamespaceMismatch(CftError):
    """Equivalence check over trees with different basic-event name sets."""

    def __init__(self, only_left, only_right):
        self.only_left = tuple(sorted(only_left))
        self.only_right = tuple(sorted(only_right))
        super().__init__(
            "basic-event namespaces differ: only-left=%s only-right=%s"
            % (list(self.only_left), list(self.only_right))
        )
