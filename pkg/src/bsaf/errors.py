"""Exception types shared across the package.

Parse-time errors carry a source span (filled in by the text format
module); errors raised by in-memory operations leave it ``None``.
"""

from __future__ import annotations

from typing import Any


class BsafError(Exception):
    """Base class for all library errors."""


class ParseError(BsafError):
    """Malformed input text; ``span`` locates the offending token."""

    def __init__(self, message: str, span: Any = None):
        super().__init__(message)
        self.span = span


class UnknownArgumentError(ParseError):
    def __init__(self, name: str, span: Any = None):
        super().__init__(f"unknown argument {name!r}", span)
        self.name = name


class DuplicateArgumentError(ParseError):
    def __init__(self, name: str, span: Any = None):
        super().__init__(f"duplicate argument {name!r}", span)
        self.name = name


class ReservedNameError(ParseError):
    """``*``-prefixed names are reserved for pipeline-generated dummies."""

    def __init__(self, name: str, span: Any = None):
        super().__init__(f"reserved argument name {name!r}", span)
        self.name = name


class EmptyCutError(ParseError):
    def __init__(self, span: Any = None):
        super().__init__("cut selects no arguments", span)


class FullCutError(ParseError):
    def __init__(self, span: Any = None):
        super().__init__("cut selects every argument", span)


class InvalidCutError(BsafError):
    """The requested partition is not a valid splitting.

    ``links`` holds the offending cross-cut links.
    """

    def __init__(self, message: str, links=()):
        links = tuple(links)
        if links:
            message = f"{message}: {', '.join(map(str, links))}"
        super().__init__(message)
        self.links = links


class CapExceededError(BsafError):
    def __init__(self, n_args: int, cap: int):
        super().__init__(f"framework has {n_args} arguments, exhaustive cap is {cap}")
        self.n_args = n_args
        self.cap = cap


class IncompatibleFrameworksError(BsafError):
    """Same argument name used with conflicting kinds across frameworks."""
