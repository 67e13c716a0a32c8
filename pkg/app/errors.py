"""Exception hierarchy shared by the numerical core, the CLI and the HTTP surface.

Each class carries the process exit code the CLI reports for it.
"""

from __future__ import annotations


class ModelError(Exception):
    """Base class for every failure raised by the toolkit."""

    exit_code: int = 1


class ConfigError(ModelError):
    """Unreadable or invalid parameter file / command options."""

    exit_code = 2


class DomainError(ModelError, ValueError):
    """Inputs outside the domain where the model or an operation is defined."""

    exit_code = 3


class DegenerateError(ModelError):
    """Closed-form expressions are singular for the given parameters."""

    exit_code = 3


class InfeasibleError(ModelError):
    """Coexistence analysis requested while F2 is not feasible."""

    exit_code = 3


class IntegrationError(ModelError):
    """The adaptive integrator could not advance the solution."""

    exit_code = 4


class InsufficientSpanError(IntegrationError):
    """Trajectory too short to classify its long-run behavior."""


class NoSignChangeError(ModelError):
    """Bisection bracket whose endpoints share the same sign."""

    exit_code = 5
