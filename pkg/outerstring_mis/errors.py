"""
Exception hierarchy; the CLI maps each class to an exit code
"""

from outerstring_mis.config import EXIT_DIFF, EXIT_INVALID, EXIT_SIZE_GUARD


class OuterstringMisError(Exception):
    """Base class for every error raised by the library"""

    exit_code = EXIT_INVALID


class ParseError(OuterstringMisError):
    """Malformed text input (representation, DIMACS or weights file)"""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class ValidationError(OuterstringMisError):
    """A representation violates one or more of its invariants"""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class SizeGuardError(OuterstringMisError):
    """Input exceeds a guard that protects against exponential blowup"""

    exit_code = EXIT_SIZE_GUARD


class IncompatibleInputError(OuterstringMisError):
    """The requested algorithm or reduction does not accept this representation"""


class ConstructionMismatch(OuterstringMisError):
    """A reduction's self-validation found the output graph differs from the input graph"""

    exit_code = EXIT_DIFF


class UnknownIdError(OuterstringMisError, KeyError):
    """Shape id not present in the representation"""
