"""Exception types raised by the planners and the verification harness."""


class TCPlanError(Exception):
    """Base class for every error raised by :mod:`tcplan`."""


class NearZeroVector(TCPlanError, ValueError):
    """A vector too short to normalize was passed to a normalizing map."""


class OddDimension(TCPlanError, ValueError):
    """The tangent field needs an even ambient dimension."""


class DimensionMismatch(TCPlanError, ValueError):
    pass


class JunctionGap(TCPlanError, ValueError):
    """Consecutive path pieces do not meet at their shared endpoint."""


class HomotopyContractViolation(TCPlanError, ValueError):
    """A sampled homotopy fails H(x, 0) = x or its terminal condition."""


class NotSingleRule(TCPlanError, ValueError):
    pass


class NoApplicableRule(TCPlanError, LookupError):
    """No rule domain accepts the pair; the planner's cover has a hole."""


class OutsideFreeSpace(TCPlanError, ValueError):
    pass


class PreconditionViolation(TCPlanError, ValueError):
    pass


class WitnessNotFound(TCPlanError, RuntimeError):
    """The discontinuity search failed. ``report`` holds the best attempt."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
