"""Exception and warning types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class RegimeError(ValueError):
    """The requested formula does not apply to the given parameter regime.

    The message names the routine that does cover the regime.
    """


class ResourceLimitError(RuntimeError):
    """The request would exceed a deliberate resource guard (e.g. 2**(F+1) blowup)."""


class RegimeWarning(UserWarning):
    """A computation proceeded outside its preferred regime (fallback path taken,
    or an asymptotic expression was requested before the asymptotic regime)."""
