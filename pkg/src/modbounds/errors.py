"""Exception hierarchy.

Every error raised by the package derives from :class:`ModBoundsError`, so
callers (the CLI in particular) can catch one type and still report the
specific failure by class name.
"""


class ModBoundsError(Exception):
    """Base class for all package errors."""


# graph construction and I/O
class GraphError(ModBoundsError, ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class IndexOutOfRangeError(GraphError):
    pass


class IsolatedVertexError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class TooSmallError(GraphError):
    pass


class CouldNotConnectError(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# modularity functionals
class NotAPartitionError(ModBoundsError, ValueError):
    pass


class EmptySideError(ModBoundsError, ValueError):
    pass


# spectra
class NoConvergenceError(ModBoundsError, ArithmeticError):
    pass


class MatrixTooLargeError(ModBoundsError, ValueError):
    pass


# certificates
class CertificateError(ModBoundsError, ValueError):
    pass


class MuOutOfRangeError(CertificateError):
    pass


class ZeroEntryError(CertificateError):
    pass


class DegenerateSideError(CertificateError):
    pass


class NonPositiveMuError(CertificateError):
    pass


class NotUnitNormError(CertificateError):
    pass


class ZeroCosError(CertificateError):
    pass


class NotZeroSumError(CertificateError):
    pass


# oracle
class TooLargeError(ModBoundsError, ValueError):
    pass
