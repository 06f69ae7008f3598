"""Exception hierarchy shared by all nilgrade modules."""


class NilgradeError(Exception):
    """Base class for all nilgrade errors."""


class InputError(NilgradeError, ValueError):
    """Malformed input: bad indices, zero coefficients, wrong lengths, bad literals."""


class NotNilpotentError(NilgradeError):
    """The lower central series stabilized above zero."""


class NotHomogeneousError(InputError):
    """A weight assignment violates homogeneity where homogeneity is required."""


class UnknownAlgebraError(NilgradeError, KeyError):
    """Catalog lookup failed; carries near-match suggestions."""

    def __init__(self, name, suggestions=()):
        self.name = name
        self.suggestions = tuple(suggestions)
        msg = f"unknown algebra {name!r}"
        if self.suggestions:
            msg += " (did you mean: " + ", ".join(self.suggestions) + "?)"
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class InternalCheckError(NilgradeError):
    """A theorem-backed internal consistency check failed; indicates a bug."""
