from typing import Optional


class RotaryError(ValueError):
    """
    Base class for every validation error raised by the library.
    The CLI turns these into an error JSON and exit status 2.
    """

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.location = location

    def to_payload(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "location": self.location,
        }


# permutation groups
class InvalidPermutation(RotaryError):
    pass


class DegreeMismatch(RotaryError):
    pass


class CapExceeded(RotaryError):
    pass


class NotASubgroup(RotaryError):
    pass


class SubgroupLimitExceeded(RotaryError):
    pass


# coset graphs
class BadIndex(RotaryError):
    pass


class HEqualsG(RotaryError):
    pass


class GInH(RotaryError):
    pass


class NotArcTransitive(RotaryError):
    pass


class InvalidGraph(RotaryError):
    pass


class SearchCapExceeded(RotaryError):
    pass


# rotary pairs and cycles
class ZNotInvolution(RotaryError):
    pass


class ZInsideA(RotaryError):
    pass


class DegenerateGraph(RotaryError):
    pass


class CrossCheckFailed(RotaryError):
    pass


# maps
class FewFaces(RotaryError):
    pass


class NotASurface(RotaryError):
    pass


class LabelMismatch(RotaryError):
    pass


class InconsistentAction(RotaryError):
    pass


class InvalidTriple(RotaryError):
    pass


class NotInvolution(InvalidTriple):
    pass


class NotDistinct(InvalidTriple):
    pass


class NotCommuting(InvalidTriple):
    pass


class ZInsideXY(InvalidTriple):
    pass


class ValencyTooSmall(InvalidTriple):
    pass


class FaceLengthTooSmall(InvalidTriple):
    pass


# catalog and cli
class BadParams(RotaryError):
    pass


class IllDefined(RotaryError):
    pass


class ParseError(RotaryError):
    pass


class UnknownName(RotaryError):
    pass
