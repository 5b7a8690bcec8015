"""Exception types shared across the package."""


class SentitrendError(Exception):
    """Base class for every error this package raises on purpose."""


class ConfigError(SentitrendError, ValueError):
    """Invalid configuration or violated precondition on a parameter."""


class DataError(SentitrendError, ValueError):
    """Input data that cannot be used for the requested operation."""
