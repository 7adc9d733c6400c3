from typing import Optional


class EqTreeError(Exception):
    """Base class for every error raised by eqtree"""


class InputError(EqTreeError):
    """Well-formed call with invalid data; maps to CLI exit code 2"""

    def __init__(self, message: str, position: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def to_dict(self):
        return {
            "error": type(self).__name__,
            "position": self.position,
            "message": self.message,
        }


class InvariantBreach(EqTreeError):
    """An internal invariant does not hold. Always a bug."""


class DocumentError(InputError):
    pass


class ParameterError(InputError):
    """Invalid knob of a generator, benchmark or command-line flag"""


class VertexOutOfRange(InputError):
    pass


class NotSimple(InputError):
    pass


class Disconnected(InputError):
    pass


class WrongEdgeCount(InputError):
    pass


class ColorOutOfRange(InputError):
    pass


class NotBijective(InputError):
    pass


class AdjacencyBroken(InputError):
    pass


class ColorBroken(InputError):
    pass


class NotAnEdge(InputError):
    pass


class CentralOrbitNotFixed(InputError):
    pass


class CentralWeightNotOne(InputError):
    pass


class DivisibilityViolated(InputError):
    pass


class LoopPresent(InputError):
    pass


class CycleTooShort(InputError):
    pass


class NotAReductionImage(InputError):
    pass


class TooLarge(InputError):
    pass


class WrongMode(InputError):
    pass


class InfeasibleSpec(InputError):
    def __init__(self, message: str, nearest: Optional[int] = None):
        super().__init__(message, position="n")
        self.nearest = nearest
