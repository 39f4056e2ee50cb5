"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each family is kept distinct.
"""


class GrassblowError(Exception):
    """Base class for all errors raised by the package."""


class ParameterError(GrassblowError, ValueError):
    """Inputs outside the documented range (bad (s, p, n), indices, shapes)."""


class NormalizationRequired(ParameterError):
    """A routine that needs 2p <= n <= 2s received other parameters."""


class RankError(GrassblowError, ValueError):
    """A matrix that should represent a p-plane is rank deficient."""


class IndeterminacyError(GrassblowError, ZeroDivisionError):
    """A ratio formula hit a vanishing denominator (point outside a chart)."""


class UnsupportedCase(GrassblowError):
    """The requested regime/level is outside what the formulas cover."""


class VerificationFailure(GrassblowError, AssertionError):
    """An exact self-check failed; this indicates a bug, never a finding."""
