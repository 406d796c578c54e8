"""Line-oriented text formats for frameworks, cuts, and extension sets.

Framework grammar (``.bsaf`` files, UTF-8, ``\\n`` newlines)::

    bsaf 1                  # mandatory version header
    arg <name>              # declaration; names match [A-Za-z0-9_]+
    att <name>* -> <name>   # collective attack; zero tail names allowed
    sup <name>* -> <name>   # collective support; zero tail names allowed

``#`` starts a comment anywhere on a line; tokens are whitespace
separated; trailing whitespace is ignored.  The dummy names ``*0``,
``*1`` and ``*2`` are reserved for pipeline output: serialized reducts
declare them and parse back, every other ``*``-name is rejected.

Cut files (``.cut``) hold the header line ``cut`` followed by one
argument name per line; the lower part of the partition is listed, the
shared link sets are forced by it.

Extension sets serialize one extension per line as comma-separated
names in index order, lines sorted lexicographically; the empty
extension prints as ``{}`` and an empty set of extensions as ``NONE``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .core import DUMMY_KINDS, NAME_PATTERN, Extension, Framework, Link, make_framework
from .errors import (
    DuplicateArgumentError,
    EmptyCutError,
    FullCutError,
    ParseError,
    ReservedNameError,
    UnknownArgumentError,
)

FRAMEWORK_HEADER = "bsaf 1"
CUT_HEADER = "cut"


@dataclass(frozen=True)
class SourceSpan:
    """1-based line/column position of a token in the input text."""

    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


def _tokenize(text: str):
    """Yield (line_no, [(token, span), ...]) with comments stripped."""
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0]
        tokens = [
            (m.group(), SourceSpan(line_no, m.start() + 1))
            for m in re.finditer(r"\S+", line)
        ]
        if tokens:
            yield line_no, tokens


def _check_token_name(token: str, span: SourceSpan) -> None:
    if token in DUMMY_KINDS:
        return
    if token.startswith("*"):
        raise ReservedNameError(token, span)
    if not NAME_PATTERN.match(token):
        raise ParseError(f"invalid argument name {token!r}", span)


def parse_framework(text: str) -> Framework:
    """Parse framework text; arguments are interned in declaration order."""
    lines = list(_tokenize(text))
    if not lines:
        raise ParseError("missing header line 'bsaf 1'", SourceSpan(1, 1))
    header_tokens = [t for t, _ in lines[0][1]]
    if header_tokens != FRAMEWORK_HEADER.split():
        raise ParseError("missing header line 'bsaf 1'", lines[0][1][0][1])

    names: list[str] = []
    declared: dict[str, SourceSpan] = {}
    attacks: list[tuple[tuple[str, ...], str]] = []
    supports: list[tuple[tuple[str, ...], str]] = []

    for _line_no, tokens in lines[1:]:
        (keyword, key_span), rest = tokens[0], tokens[1:]
        if keyword == "arg":
            if len(rest) != 1:
                raise ParseError("'arg' takes exactly one name", key_span)
            name, span = rest[0]
            _check_token_name(name, span)
            if name in declared:
                raise DuplicateArgumentError(name, span)
            declared[name] = span
            names.append(name)
        elif keyword in ("att", "sup"):
            arrow = [i for i, (t, _) in enumerate(rest) if t == "->"]
            if len(arrow) != 1 or arrow[0] != len(rest) - 2:
                raise ParseError(
                    f"'{keyword}' expects '<name>* -> <name>'", key_span
                )
            tail = rest[: arrow[0]]
            head, head_span = rest[-1]
            for token, span in (*tail, (head, head_span)):
                _check_token_name(token, span)
                if token not in declared:
                    raise UnknownArgumentError(token, span)
            entry = (tuple(t for t, _ in tail), head)
            (attacks if keyword == "att" else supports).append(entry)
        else:
            raise ParseError(f"unknown directive {keyword!r}", key_span)

    return make_framework(names, attacks, supports)


def _link_line(keyword: str, link: Link) -> str:
    tokens = [keyword, *(a.name for a in link.tail), "->", link.head.name]
    return " ".join(tokens)


def _sorted_links(links: Iterable[Link]) -> list[Link]:
    return sorted(
        links, key=lambda l: (l.head.index, tuple(a.index for a in l.tail))
    )


def serialize_framework(f: Framework) -> str:
    """Canonical text: header, args in index order, sorted attacks, supports."""
    lines = [FRAMEWORK_HEADER]
    lines += [f"arg {a.name}" for a in f.args]
    lines += [_link_line("att", l) for l in _sorted_links(f.attacks)]
    lines += [_link_line("sup", l) for l in _sorted_links(f.supports)]
    return "\n".join(lines) + "\n"


def serialize_links(links: Iterable[Link], keyword: str = "att") -> str:
    return "".join(_link_line(keyword, l) + "\n" for l in _sorted_links(links))


def parse_cut(text: str, f: Framework) -> Extension:
    """Parse a cut file against ``f``; duplicates collapse into the set."""
    lines = list(_tokenize(text))
    if not lines or [t for t, _ in lines[0][1]] != [CUT_HEADER]:
        span = lines[0][1][0][1] if lines else SourceSpan(1, 1)
        raise ParseError("missing header line 'cut'", span)
    members = []
    for _line_no, tokens in lines[1:]:
        if len(tokens) != 1:
            raise ParseError("one argument name per line", tokens[0][1])
        name, span = tokens[0]
        arg = f.by_name.get(name)
        if arg is None:
            raise UnknownArgumentError(name, span)
        members.append(arg)
    cut = Extension(frozenset(members))
    if not cut.members:
        raise EmptyCutError()
    if len(cut.members) == len(f.args):
        raise FullCutError()
    return cut


def serialize_cut(cut: Extension) -> str:
    lines = [CUT_HEADER] + [a.name for a in cut.sorted_members()]
    return "\n".join(lines) + "\n"


def _extension_key(e: Extension) -> tuple[str, ...]:
    return tuple(a.name for a in e.sorted_members())


def format_extension(e: Extension) -> str:
    return ",".join(_extension_key(e)) if e.members else "{}"


def serialize_extensions(exts: Iterable[Extension]) -> str:
    """One line per extension, lexicographic by member names; ``NONE`` if empty."""
    rows = sorted(set(exts), key=_extension_key)
    if not rows:
        return "NONE\n"
    return "".join(format_extension(e) + "\n" for e in rows)
