"""Exception hierarchy.

Every error raised by the library derives from :class:`DualRuledError`.
Errors that mean "the input is not acceptable" also derive from
``ValueError`` so generic callers can catch them the usual way.
"""


class DualRuledError(Exception):
    """Base class for all library errors."""


class NodeError(DualRuledError):
    """An error located at a grid node."""

    def __init__(self, message, node=None):
        if node is not None:
            message = f"{message} (node {node})"
        super().__init__(message)
        self.node = node


# dual numbers
class DivisionByPureDual(DualRuledError, ZeroDivisionError):
    pass


class DomainError(DualRuledError, ValueError):
    pass


class NonFiniteError(DualRuledError, ValueError):
    pass


# Lorentzian algebra
class NullDirection(DualRuledError, ValueError):
    pass


class NotALine(DualRuledError, ValueError):
    pass


# curves and frames
class BadSpec(DualRuledError, ValueError):
    pass


class NonTimelikeDirector(NodeError, ValueError):
    pass


class DegenerateSpeed(NodeError):
    pass


class NonSpacelikeTangentImage(NodeError):
    pass


class NullPfaffian(NodeError):
    pass


class NullPfaffianBar(NullPfaffian):
    pass


class MixedCase(DualRuledError):
    pass


# invariants
class FrameMismatch(DualRuledError, ValueError):
    pass


class DrallSingularity(NodeError):
    def __init__(self, message, node=None, denominator=None):
        super().__init__(message, node)
        self.denominator = denominator


class VaryingOmega(DualRuledError):
    pass


class VaryingTheta(VaryingOmega):
    pass


class DegenerateParallel(NodeError):
    pass


# file formats
class ParseError(DualRuledError, ValueError):
    pass


class SchemaError(DualRuledError, ValueError):
    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class SpecValueError(DualRuledError, ValueError):
    def __init__(self, message, field):
        super().__init__(f"{field}: {message}")
        self.field = field


# hypotheses a relation depends on; verify reports these as skipped
HYPOTHESIS_ERRORS = (
    DegenerateSpeed,
    NonSpacelikeTangentImage,
    NullPfaffian,
    MixedCase,
    VaryingOmega,
    DrallSingularity,
    DegenerateParallel,
    DivisionByPureDual,
    DomainError,
)
