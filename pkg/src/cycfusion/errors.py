"""Exception types shared by all cycfusion modules."""


class CycFusionError(Exception):
    """Base class for all library errors."""


class InvalidConductorError(CycFusionError):
    """Conductor must be a positive integer."""


class IncompatibleConductorError(CycFusionError):
    """Requested conductor is not a multiple of the current one."""


class EmptyBasisError(CycFusionError):
    """A tuple/basis enumeration was requested with n > e."""


class ParameterError(CycFusionError):
    """Invalid parameters for a matrix construction."""


class UnitColumnError(CycFusionError):
    """The chosen unit column contains a zero entry."""


class UnitNotFoundError(CycFusionError):
    """No admissible unit symbol exists in the searched range."""


class NormalizationError(CycFusionError):
    """Sign normalization could not be completed; carries a witness."""


class StrategyError(CycFusionError):
    """A search strategy cannot be applied (e.g. basis too large)."""


class EngineOverflowError(CycFusionError):
    """The fast integer engine cannot certify exactness for this input."""
