"""Exception types shared across the workbench."""


class CCLabError(Exception):
    """Base class for all workbench errors."""


class InputError(CCLabError):
    """Malformed or invalid input data (files, quivers, modules)."""


class ConfigurationError(CCLabError):
    """Bad workbench configuration (prime lists, depth limits)."""


class PrimeInstabilityError(ConfigurationError):
    """A homological dimension varied with the sample prime."""


class NotPolynomialCountError(CCLabError):
    """Point counts failed the counting-polynomial verification."""


class PreconditionError(CCLabError):
    """An operation was called outside its stated hypotheses."""


class InexactDivisionError(CCLabError):
    """A division that must be exact left a remainder."""
