"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceDomainError(DomainError):
    """A series representation is evaluated outside its convergence region."""


class NumericsError(RuntimeError):
    """A numerical routine failed to reach its accuracy target."""


class ConfigError(ValueError):
    """A run configuration is malformed or inconsistent."""
