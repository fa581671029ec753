"""Exception types raised by the engine library."""


class EngineError(Exception):
    """Base class for all errors raised by ergoengine."""


class NonHermitianInput(EngineError, ValueError):
    pass


class DimensionMismatch(EngineError, ValueError):
    pass


class InvalidDistribution(EngineError, ValueError):
    pass


class IncompleteKraus(EngineError, ValueError):
    """Kraus operators do not resolve the identity."""


class InvalidStrength(EngineError, ValueError):
    """Measurement strength c0 outside [0, 1/sqrt(2)]."""


class RegimeViolation(EngineError, ValueError):
    """Parameters leave the antiferromagnetic strong-coupling regime."""


class InconsistentInput(EngineError, ValueError):
    pass


class NotR1(EngineError, ValueError):
    """The R1 population ordering does not hold for these parameters."""


class WrongOrdering(EngineError, ValueError):
    pass
