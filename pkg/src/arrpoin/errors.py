"""Exception types shared across the package.

Every error carries a stable ``code`` string; the CLI prints it in the
machine-parsable prefix ``error: <code>: ...`` and maps the class to an exit
status (input errors exit 2, internal invariant violations exit 3).
"""


class ArrpoinError(Exception):
    code = "Error"


class InputError(ArrpoinError):
    """Malformed or rejected user input."""

    code = "MalformedInput"


class ZeroFormError(InputError):
    code = "ZeroForm"


class ProportionalPairError(InputError):
    code = "ProportionalPair"


class ExprError(InputError):
    """Syntax error in a polynomial expression."""

    code = "BadExpression"


class FactorOverDeltaError(InputError):
    """A denominator does not factor into forms of the arrangement."""

    code = "FactorOverDelta"


class BasisNotIndependentError(InputError):
    """Supplied basis classes fail the independence precondition."""

    code = "BasisNotIndependent"


class NotInCellError(ArrpoinError):
    """An element fell outside the filtration cell it was claimed to live in.

    Well-formed input cannot trigger this; it signals an internal bug.
    """

    code = "NotInCell"
