"""Exception types shared across the package."""


class YHKLRError(Exception):
    """Base class for all package errors."""


class ConfigError(YHKLRError):
    """Invalid parameters; the CLI maps these to exit code 2."""


class BadModulus(ConfigError):
    pass


class NoPrimitiveRoot(ConfigError):
    pass


class NoSquareRoot(ConfigError):
    pass


class InfeasibleSize(ConfigError):
    pass


class InvalidQuiver(ConfigError):
    pass


class SpectrumIncomplete(YHKLRError):
    pass


class DuplicateEigenvalue(YHKLRError):
    pass


class SingularInCorner(YHKLRError):
    pass


class NotNilpotent(YHKLRError):
    pass


class NotReduced(YHKLRError):
    pass


class NonTerminating(YHKLRError):
    pass


class SupportOutsideBlock(YHKLRError):
    pass


class DimensionMismatch(YHKLRError):
    pass
