"""Exception types raised by nodalquartic."""


class NodalQuarticError(ValueError):
    pass


class ZeroPolynomialError(NodalQuarticError):
    pass


class DuplicateNodeError(NodalQuarticError):
    pass


class NotANodeError(NodalQuarticError):
    def __init__(self, point, report=None):
        super().__init__(f"point {point} does not certify as a node")
        self.point = point
        self.report = report


class OutOfRangeError(NodalQuarticError):
    pass


class DegeneratePairingError(NodalQuarticError):
    pass


class DimensionMismatchError(NodalQuarticError):
    pass


class NotAComplexError(NodalQuarticError):
    """The signed differentials do not form a complex on the chosen summands."""


class NotSplitError(NodalQuarticError):
    pass


class RepeatedRootError(NodalQuarticError):
    pass


class CertificationFailureError(NodalQuarticError):
    def __init__(self, point, report=None):
        super().__init__(f"Kummer node candidate {point} failed exact certification")
        self.point = point
        self.report = report
