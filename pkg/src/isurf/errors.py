"""Exception hierarchy shared across the package."""


class IsurfError(Exception):
    """Base class for all errors raised by this package."""


class LatticeError(IsurfError):
    """Malformed lattice data or an unsupported lattice request."""


class GermError(IsurfError):
    """Invalid singularity type data."""


class UnsupportedGermError(GermError):
    """Germ is recognized but outside the supported families."""


class ModelError(IsurfError):
    """Inconsistent surface model or divisor-class usage."""


class BuilderError(IsurfError):
    """Unsupported stratum/option combination."""


class ConfigError(IsurfError):
    """Invalid CLI configuration input."""
