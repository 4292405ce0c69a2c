"""Exception hierarchy shared by every module."""

import os


class SemitraceError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class EmptyInput(SemitraceError, ValueError):
    pass


class NonPrimitive(SemitraceError, ValueError):
    """Generators share a common factor; use ``normalize`` instead."""


class InvalidGenerator(SemitraceError, ValueError):
    pass


class NotAnElement(SemitraceError, ValueError):
    pass


class BaseMismatch(SemitraceError, ValueError):
    pass


class TrivialSemigroup(SemitraceError, ValueError):
    pass


class NotMinimal(SemitraceError, ValueError):
    pass


class SymmetricInput(SemitraceError, ValueError):
    pass


class LabelMismatch(SemitraceError, RuntimeError):
    pass


class BadParams(SemitraceError, ValueError):
    pass


class GcdFail(BadParams):
    pass


class Degenerate(BadParams):
    pass


class ThresholdViolation(SemitraceError, ValueError):
    pass


class BadRange(SemitraceError, ValueError):
    pass


class InternalInconsistency(SemitraceError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class PredictionMismatch(InternalInconsistency):
    pass


class IntegerOverflow(SemitraceError, OverflowError):
    pass


DEFAULT_MAX_INT_BITS = 128


def max_int_bits():
    raw = os.environ.get("SEMITRACE_MAX_INT_BITS")
    if not raw:
        return DEFAULT_MAX_INT_BITS
    bits = int(raw)
    if bits < 8:
        raise ValueError(f"SEMITRACE_MAX_INT_BITS={raw} is too small")
    return bits


def guard(*values):
    """Raise ``IntegerOverflow`` if a value does not fit a signed integer of
    ``SEMITRACE_MAX_INT_BITS`` bits (default 128). Returns the first value."""
    limit = 1 << (max_int_bits() - 1)
    for v in values:
        if not -limit <= v < limit:
            raise IntegerOverflow(f"{v} does not fit in {max_int_bits()} signed bits")
    return values[0] if values else None
