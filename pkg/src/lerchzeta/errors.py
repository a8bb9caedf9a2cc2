"""Exception types shared across the package."""
from __future__ import annotations


class LerchZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LerchZetaError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or across) a pole."""


class DegreeOverflowError(DomainError):
    """A Bernoulli polynomial beyond the built table degree was requested."""


class SeriesDivergenceError(DomainError):
    """The defining series does not converge for the given parameters."""


class WrongPathError(DomainError):
    """The requested evaluation path does not apply to these parameters
    (e.g. a z != 1 kernel asked to handle z = 1)."""


class ConditioningError(DomainError):
    """Parameters are too close to a singular configuration for the
    requested path to return a trustworthy result (e.g. |1 - z| < 1e-3
    on the integral paths)."""


class SignConstancyError(LerchZetaError):
    """A sign-constancy check found a counterexample or an evaluation whose
    magnitude did not exceed its own error estimate."""
