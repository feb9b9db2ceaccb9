"""Exception types raised across the toolkit.

Every rejected input or failed numerical contract maps to one of these, so
callers can distinguish bad graphs (construction errors), bad arguments
(domain errors), and numerical breakdowns.
"""


class QGError(Exception):
    """Base class for all toolkit errors."""


# -- graph construction ----------------------------------------------------

class GraphError(QGError):
    """Invalid graph input."""


class Disconnected(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NonpositiveLength(GraphError):
    pass


class MissingLength(GraphError):
    pass


class ParseError(GraphError):
    """Graph file rejected; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- numerical contracts ---------------------------------------------------

class NumericalError(QGError):
    """A numerical post-condition failed."""


class ConvergenceFailure(NumericalError):
    pass


class NonpositiveEigenvalue(NumericalError):
    """A retained (nonzero-mode) eigenvalue was not strictly positive."""


class NonIntegerDeterminant(NumericalError):
    """A determinant expected to be integer fell outside the guard band."""


class EigenvalueOutOfRange(NumericalError):
    """A harmonic-Laplacian eigenvalue escaped [0, 2] beyond tolerance."""


class RootRefinementFailure(NumericalError):
    pass


class GridTooCoarse(NumericalError):
    """Secular scan found an eigenvalue count inconsistent with the mean
    spectral density."""


# -- domain / argument errors ----------------------------------------------

class DomainError(QGError):
    """Arguments outside an operation's stated domain."""


class TooLarge(DomainError):
    """Graph exceeds the exhaustive-enumeration guard."""


class NotRegular(DomainError):
    pass


class NotEquilateral(DomainError):
    pass


class HalfLinePole(DomainError):
    """The spectral zeta formula excludes the line s = 1/2."""


class HurwitzDomain(DomainError):
    """Hurwitz zeta requires a > 0."""


class SNotConvergent(DomainError):
    """Direct eigenvalue sums only converge for s > 1."""


class LengthsOutOfWindow(DomainError):
    """Edge lengths do not lie in the declared window [ell, ell + delta)."""


class DeltaTooLarge(DomainError):
    """Length spread too large for the determinant perturbation bound."""


class NotApplicable(DomainError):
    """Requested bound relaxation is unavailable for this graph."""
