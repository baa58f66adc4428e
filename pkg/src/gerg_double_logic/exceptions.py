# exceptions.py
from typing import Optional


class KernelAssertionError(AssertionError):
    """Custom assertion error for kernel check failures."""


class _PositionedError(KernelAssertionError):
    """Error carrying a 1-based line/column position in the source text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class FormulaSyntaxError(_PositionedError):
    """Raised when formula text cannot be parsed."""


class GraphSyntaxError(_PositionedError):
    """Raised when graph or address text cannot be parsed."""


class ScriptSyntaxError(_PositionedError):
    """Raised when a proof or derivation script is malformed."""


class SchemaBindingError(KernelAssertionError):
    """Raised when a schema cannot be instantiated with the given bindings."""


class AddressError(KernelAssertionError):
    """Raised when an address does not resolve in a graph."""


class RuleApplicationError(KernelAssertionError):
    """Raised when a rewrite step violates its side conditions."""

    def __init__(self, message: str, kind: str = "shape", step_index: Optional[int] = None):
        super().__init__(f"[{kind}] {message}")
        self.message = message
        self.kind = kind
        self.step_index = step_index


class ProofCheckError(KernelAssertionError):
    """Raised when a proof handed to a transformer does not check."""


class TransformError(KernelAssertionError):
    """Raised when a proof or derivation transformer cannot be applied."""


class AtomBudgetError(KernelAssertionError):
    """Raised when a truth table would exceed the atom budget."""


class CorpusError(KernelAssertionError):
    """Raised for missing corpus files or cyclic dependencies."""
