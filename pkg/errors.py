#!/usr/bin/env python3
"""
Higher Energies Toolkit - Errors
Exception hierarchy shared by every module and the CLI exit-code mapping
"""


class ToolkitError(Exception):
    """Base class for toolkit failures"""


class GroupMismatchError(ToolkitError, ValueError):
    """Operands live on different groups"""


class CapExceededError(ToolkitError):
    """A desk-scale cap would be exceeded"""


class NonHermitianError(ToolkitError, ValueError):
    """Weight does not give a Hermitian operator for the chosen sign"""


class ConvergenceError(ToolkitError, RuntimeError):
    """Jacobi sweeps did not converge"""


class PathDisagreementError(ToolkitError, ArithmeticError):
    """Two independent computation paths disagree beyond tolerance"""


class InvarianceError(ToolkitError, ValueError):
    """A set or weight lacks the required multiplicative invariance"""


class WraparoundError(ToolkitError):
    """An integer computation wrapped around the host group"""


class VerificationError(ToolkitError, AssertionError):
    """An internal post-condition failed"""


class UnknownCheckError(ToolkitError, KeyError):
    """No check registered under this name"""


class ModeError(ToolkitError, ValueError):
    """Operation unavailable in the current arithmetic mode"""


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def exit_code_for(exc):
    """Map an exception raised by a CLI command to its exit code"""
    if isinstance(exc, CapExceededError):
        return EXIT_CAP
    if isinstance(exc, (ValueError, KeyError, FileNotFoundError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def ensure_cap(amount, cap, what):
    """Raise CapExceededError when amount exceeds cap"""
    if amount > cap:
        raise CapExceededError(f"{what}: {amount} exceeds cap {cap}")
