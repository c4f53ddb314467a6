"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PositroidLabError(Exception):
    """Base class for all library errors."""


class InvalidArgument(PositroidLabError, ValueError):
    pass


class NotCoprimeError(InvalidArgument):
    pass


class MalformedMatrix(InvalidArgument):
    pass


class RankError(InvalidArgument):
    pass


class NotRationalDyckError(InvalidArgument):
    """Input does not describe a rational Dyck path (or its positroid)."""


class MalformedGraph(InvalidArgument):
    pass


class MoveNotApplicable(InvalidArgument):
    pass


class NotOrientableError(PositroidLabError):
    pass


class UnboundedError(PositroidLabError):
    pass


class InconsistencyError(PositroidLabError, AssertionError):
    """An internal invariant failed; the input or an implementation is broken."""
