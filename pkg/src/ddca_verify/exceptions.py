__all__ = ['DdcaError', 'ConfigurationError', 'DependencyError', 'DegreeCapError',
           'SymmetryDomainError', 'RegistrationError', 'InvariantViolation', 'VerificationFailed']


class DdcaError(Exception):
    """Base class for every error raised by ddca_verify."""


class ConfigurationError(DdcaError):
    """An algebra, suite or command line configuration that cannot be run."""


class DependencyError(DdcaError):
    """A script step needs an identity that has not been registered yet."""

    def __init__(self, missing: str, script: str, order=()):
        self.missing = missing
        self.script = script
        self.order = tuple(order)
        hint = f' Run {", ".join(self.order)} first.' if self.order else ''
        super().__init__(f'Script {script!r} requires {missing!r}, which is not in the knowledge base.{hint}')


class DegreeCapError(DdcaError):
    """A current degree went above the configured cap."""

    def __init__(self, degree: int, smax: int):
        self.degree = degree
        self.smax = smax
        super().__init__(f'Current degree {degree} exceeds the cap smax={smax}.')


class SymmetryDomainError(DdcaError):
    """A symbol lies outside the domain of the requested (anti-)automorphism."""


class RegistrationError(DdcaError):
    """A rule could not be added to the knowledge base."""


class InvariantViolation(DdcaError):
    """An internal invariant (grading, termination measure, frame normalisation) was broken."""


class VerificationFailed(DdcaError):
    """Raised on request when a comparison did not normalize to zero."""

    def __init__(self, diff):
        self.diff = diff
        super().__init__(str(diff))
