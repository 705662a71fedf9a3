"""Exception hierarchy shared by every stage of the pipeline."""


class KhError(Exception):
    """Base class for all errors raised by :mod:`khcube`."""


# -- diagram ingestion ------------------------------------------------------

class DiagramError(KhError, ValueError):
    pass


class MalformedSyntax(DiagramError):
    pass


class InconsistentArcs(DiagramError):
    pass


class OrientationConflict(DiagramError):
    pass


class EmptyWordWithoutStrandCount(DiagramError):
    pass


class GeneratorOutOfRange(DiagramError):
    pass


class LengthMismatch(DiagramError):
    pass


class NotAnEdge(KhError, ValueError):
    pass


class ArcNotFound(DiagramError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# -- Burnside / cube algebra -----------------------------------------------

class ShapeMismatch(KhError, ValueError):
    pass


class MissingFaceData(KhError):
    pass


class CoherenceFailure(KhError):
    pass


class NotALadybug(KhError, ValueError):
    pass


class NonCommutingSquare(KhError):
    def __init__(self, message, face=None):
        super().__init__(message)
        self.face = face


class IncoherentInput(KhError):
    pass


class NotAComplex(KhError):
    pass
