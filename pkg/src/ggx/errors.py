"""Exception types shared across the package."""


class GgxError(Exception):
    """Base class for all package errors."""


class SpecSyntaxError(GgxError):
    """Malformed group spec string."""


class UnsupportedGroupError(GgxError):
    """Group family recognised but outside supported parameter range."""


class InvalidOrderError(GgxError):
    """Order parameter of a group spec is not positive."""


class OrderCapExceededError(GgxError):
    """Group construction would exceed the element cap."""


class BadCayleyFileError(GgxError):
    """Cayley table file does not describe a group."""


class ClosureCapExceededError(GgxError):
    """Two-generator closure grew past its budget."""


class GraphCapExceededError(GgxError):
    """Requested graph has more vertices than the cap allows."""


class ProductCapExceededError(GgxError):
    """Strong product would exceed the vertex cap."""


class BudgetExhaustedError(GgxError):
    """Search ran out of its step budget before finishing.

    Distinct from a completed search that found nothing.
    """

    def __init__(self, steps: int, message: str = "search budget exhausted"):
        super().__init__(f"{message} (steps={steps})")
        self.steps = steps


class BadVertexError(GgxError):
    """Vertex index outside the graph."""


class SizeCapExceededError(GgxError):
    """Digraph isomorphism input larger than intended size."""


class CenterNotTrivialError(GgxError):
    """Operation requires a power graph with a one-element center."""


class PreconditionViolatedError(GgxError):
    """Caller broke a documented precondition."""


class UnsupportedCenterCaseError(GgxError):
    """Directed reconstruction only supports trivial-center power graphs."""


class NotAPowerGraphError(GgxError):
    """Input graph cannot be the power graph of any finite group."""


class BadLabelError(GgxError):
    """Element label does not parse to a group element."""
