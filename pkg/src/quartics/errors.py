"""Exception hierarchy shared by all quartics modules."""


class QuarticsError(Exception):
    """Base class for every error raised by this package."""


class TableMismatchError(QuarticsError):
    """Two polynomials from different variable tables were combined."""


class RoleError(QuarticsError):
    """A parameter variable was used where a geometric one is required."""


class DegreeError(QuarticsError):
    """An operand has the wrong degree for the requested operation."""


class DomainError(QuarticsError):
    """An argument is outside the operation's domain (e.g. transvectant order)."""


class NormalizationError(QuarticsError):
    """A quartic does not satisfy the normal form required by a solver."""


class DegeneracyError(QuarticsError):
    """Parameters lie on a degenerate locus where the construction breaks down.

    The message names the offending locus.
    """


class EnumerationError(QuarticsError):
    """A complete enumeration produced the wrong number of objects."""


class RootFindingError(QuarticsError):
    """The iterative complex root finder failed to converge."""


class SolverError(QuarticsError):
    """No branch of a finite solver enumeration certified against the input."""
