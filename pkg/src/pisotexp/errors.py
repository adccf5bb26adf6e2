"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PisotError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotPisot(PisotError, ValueError):
    pass


class Reducible(PisotError, ValueError):
    pass


class UnsupportedDegree(PisotError, ValueError):
    pass


class SpecMismatch(PisotError, ValueError):
    pass


class DivisionByZero(PisotError, ZeroDivisionError):
    pass


class Divergent(PisotError, ValueError):
    """A periodic word was evaluated on the side where its series diverges."""


class BudgetExhausted(PisotError, RuntimeError):
    pass


class NegativeInput(PisotError, ValueError):
    pass


class NotFinite(PisotError, ValueError):
    """A beta-expansion expected to be finite turned out eventually periodic."""


class InfiniteRenyi(PisotError, ValueError):
    pass


class UnsupportedSpec(PisotError, ValueError):
    pass


class OutOfRange(PisotError, ValueError):
    pass


class NoTransition(PisotError, ValueError):
    """The transducer has no edge for the letter read (run of a's too long)."""


class NormalizationError(PisotError, RuntimeError):
    pass


class PreconditionError(PisotError, ValueError):
    pass
