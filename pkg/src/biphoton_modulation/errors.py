"""Exception hierarchy shared by all modules.

Two broad failure classes exist: bad run configuration (rejected before any
numerics run) and numerical-domain problems (a computation was asked to work
outside its validated range or grid coverage).  The CLI maps these to exit
codes 2 and 3 respectively.
"""


class BiphotonError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(BiphotonError, ValueError):
    """Invalid or inconsistent run configuration."""


class NumericalDomainError(BiphotonError, ValueError):
    """A numerical routine was invoked outside its validated domain."""


class RangeError(NumericalDomainError):
    """Argument outside the validated range of a special function."""


class DimensionError(NumericalDomainError):
    """Sequence length does not match the grid it is paired with."""


class GridCoverageError(NumericalDomainError):
    """The frequency grid is too narrow for the requested computation."""
