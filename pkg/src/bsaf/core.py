"""Data model for bipolar set-based argumentation frameworks.

A framework couples a finite argument set with two relations of
collective links.  A link ``(T, h)`` has a tail ``T`` (a possibly empty
set of arguments that act jointly) and a head ``h``; a link is an attack
or a support depending on which relation it belongs to.  Supports are
read deductively: once every tail member is accepted the head must be
accepted too, which is what the closure operator computes.

Argument names are interned to dense integer indices at construction,
so argument sets can be manipulated as bit masks internally.  Frameworks
are immutable after construction; every operation in this module is a
pure function and safe to use from parallel workers.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateArgumentError,
    IncompatibleFrameworksError,
    ReservedNameError,
    UnknownArgumentError,
)

NAME_PATTERN = re.compile(r"[A-Za-z0-9_]+\Z")

DUMMY_SELF_ATTACKER = "*0"
DUMMY_EMPTY_ATTACKED = "*1"
DUMMY_SET_SELF_ATTACKED = "*2"


class ArgKind(enum.Enum):
    USER = "user"
    DUMMY0 = DUMMY_SELF_ATTACKER
    DUMMY1 = DUMMY_EMPTY_ATTACKED
    DUMMY2 = DUMMY_SET_SELF_ATTACKED


DUMMY_KINDS: Mapping[str, ArgKind] = {
    DUMMY_SELF_ATTACKER: ArgKind.DUMMY0,
    DUMMY_EMPTY_ATTACKED: ArgKind.DUMMY1,
    DUMMY_SET_SELF_ATTACKED: ArgKind.DUMMY2,
}


class ArgLabel(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ArgumentId:
    """An interned argument: dense index, unique name, and kind."""

    index: int
    name: str
    kind: ArgKind = ArgKind.USER

    def __repr__(self) -> str:
        return f"Arg({self.index}:{self.name})"


@dataclass(frozen=True)
class Link:
    """One collective attack or support; tail is deduplicated and index-sorted."""

    tail: tuple[ArgumentId, ...]
    head: ArgumentId

    @property
    def tail_names(self) -> frozenset[str]:
        return frozenset(a.name for a in self.tail)

    def __repr__(self) -> str:
        tail = ",".join(a.name for a in self.tail)
        return f"({{{tail}}} -> {self.head.name})"


@dataclass(frozen=True)
class Extension:
    """A plain argument set; carries no semantics by itself."""

    members: frozenset[ArgumentId]

    @property
    def names(self) -> frozenset[str]:
        return frozenset(a.name for a in self.members)

    def sorted_members(self) -> tuple[ArgumentId, ...]:
        return tuple(sorted(self.members, key=lambda a: a.index))

    def __repr__(self) -> str:
        return "{%s}" % ",".join(a.name for a in self.sorted_members())


@dataclass(frozen=True)
class Framework:
    """An immutable framework: interned arguments plus attack/support relations.

    ``args`` is in index order (``args[i].index == i``); both relations
    are duplicate-free sets of links over the owned arguments.
    """

    args: tuple[ArgumentId, ...]
    attacks: frozenset[Link]
    supports: frozenset[Link]

    # -- interning helpers ------------------------------------------------

    @cached_property
    def by_name(self) -> dict[str, ArgumentId]:
        return {a.name: a for a in self.args}

    @property
    def n(self) -> int:
        return len(self.args)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.args)) - 1

    @cached_property
    def arg_names(self) -> frozenset[str]:
        return frozenset(a.name for a in self.args)

    # -- bit-mask views of the relations ----------------------------------

    @cached_property
    def _atk(self) -> tuple[tuple[int, int], ...]:
        """Attacks as (tail_mask, head_bit), canonically ordered."""
        return _mask_links(self.attacks)

    @cached_property
    def _sup(self) -> tuple[tuple[int, int], ...]:
        return _mask_links(self.supports)

    def __repr__(self) -> str:
        return (
            f"Framework({len(self.args)} args, "
            f"{len(self.attacks)} attacks, {len(self.supports)} supports)"
        )


def _mask_links(links: frozenset[Link]) -> tuple[tuple[int, int], ...]:
    out = []
    for link in links:
        tail_mask = 0
        for a in link.tail:
            tail_mask |= 1 << a.index
        out.append((tail_mask, 1 << link.head.index))
    out.sort()
    return tuple(out)


# -- construction ----------------------------------------------------------

NameLink = tuple[Iterable[str], str]


def _check_name(name: str) -> ArgKind:
    if name in DUMMY_KINDS:
        return DUMMY_KINDS[name]
    if name.startswith("*"):
        raise ReservedNameError(name)
    if not NAME_PATTERN.match(name):
        raise ValueError(f"invalid argument name {name!r}")
    return ArgKind.USER


def make_framework(
    names: Iterable[str],
    attacks: Iterable[NameLink] = (),
    supports: Iterable[NameLink] = (),
) -> Framework:
    """Intern ``names`` in order and build the framework from name-level links.

    Raises on duplicate or reserved names and on links that mention
    undeclared arguments.  Duplicate links and duplicate tail members are
    silently collapsed (relations are sets).
    """
    interned: list[ArgumentId] = []
    by_name: dict[str, ArgumentId] = {}
    for name in names:
        if name in by_name:
            raise DuplicateArgumentError(name)
        kind = _check_name(name)
        arg = ArgumentId(len(interned), name, kind)
        interned.append(arg)
        by_name[name] = arg

    def link(tail: Iterable[str], head: str) -> Link:
        for token in (*tail, head):
            if token not in by_name:
                raise UnknownArgumentError(token)
        tail_ids = sorted({by_name[t] for t in tail}, key=lambda a: a.index)
        return Link(tuple(tail_ids), by_name[head])

    return Framework(
        args=tuple(interned),
        attacks=frozenset(link(t, h) for t, h in attacks),
        supports=frozenset(link(t, h) for t, h in supports),
    )


def name_links(links: Iterable[Link]) -> frozenset[tuple[frozenset[str], str]]:
    """Interning-free view of links, used to move them between frameworks."""
    return frozenset((link.tail_names, link.head.name) for link in links)


def induced_subframework(f: Framework, names: Iterable[str]) -> Framework:
    """The sub-framework on ``names``: keeps links that lie fully inside."""
    keep = set(names)
    unknown = keep - f.arg_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])
    order = [a.name for a in f.args if a.name in keep]

    def inside(link: Link) -> bool:
        return link.head.name in keep and link.tail_names <= keep

    return make_framework(
        order,
        [(t, h) for t, h in name_links(l for l in f.attacks if inside(l))],
        [(t, h) for t, h in name_links(l for l in f.supports if inside(l))],
    )


# -- mask/extension conversion ---------------------------------------------


def mask_of(f: Framework, e: Extension) -> int:
    """Bit mask of ``e`` in ``f``; rejects arguments not owned by ``f``."""
    mask = 0
    for a in e.members:
        if a.index >= len(f.args) or f.args[a.index] != a:
            raise UnknownArgumentError(a.name)
        mask |= 1 << a.index
    return mask


def extension_of(f: Framework, mask: int) -> Extension:
    return Extension(frozenset(a for a in f.args if mask >> a.index & 1))


def extension_from_names(f: Framework, names: Iterable[str]) -> Extension:
    members = []
    for name in names:
        arg = f.by_name.get(name)
        if arg is None:
            raise UnknownArgumentError(name)
        members.append(arg)
    return Extension(frozenset(members))


def names_mask(f: Framework, names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        arg = f.by_name.get(name)
        if arg is None:
            raise UnknownArgumentError(name)
        mask |= 1 << arg.index
    return mask


def _owned(f: Framework, a: ArgumentId) -> None:
    if a.index >= len(f.args) or f.args[a.index] != a:
        raise UnknownArgumentError(a.name)


# -- mask-level operations (internal fast path) ------------------------------


def supp_step_mask(f: Framework, mask: int) -> int:
    out = mask
    for tail, head in f._sup:
        if tail & ~mask == 0:
            out |= head
    return out


def closure_mask(f: Framework, mask: int) -> int:
    """Least fixpoint of the one-step support operator above ``mask``."""
    while True:
        grown = supp_step_mask(f, mask)
        if grown == mask:
            return mask
        mask = grown


def range_plus_mask(f: Framework, mask: int) -> int:
    out = 0
    for tail, head in f._atk:
        if tail & ~mask == 0:
            out |= head
    return out


def attacks_mask(f: Framework, attacker: int, target: int) -> bool:
    for tail, head in f._atk:
        if tail & ~attacker == 0 and head & target:
            return True
    return False


# -- public set-level operations ---------------------------------------------


def supp_step(f: Framework, e: Extension) -> Extension:
    """One application of the support operator: add directly forced heads."""
    return extension_of(f, supp_step_mask(f, mask_of(f, e)))


def closure(f: Framework, e: Extension) -> Extension:
    """Deductive closure of ``e``: iterate ``supp_step`` to its fixpoint."""
    return extension_of(f, closure_mask(f, mask_of(f, e)))


def is_closed(f: Framework, e: Extension) -> bool:
    mask = mask_of(f, e)
    return closure_mask(f, mask) == mask


def range_plus(f: Framework, e: Extension) -> Extension:
    """Arguments defeated by ``e``: heads of attacks whose tail lies in ``e``."""
    return extension_of(f, range_plus_mask(f, mask_of(f, e)))


def range_oplus(f: Framework, e: Extension) -> Extension:
    """``e`` together with everything it defeats."""
    mask = mask_of(f, e)
    return extension_of(f, mask | range_plus_mask(f, mask))


def attacks_set(f: Framework, attacker: Extension, target: Extension) -> bool:
    """Does some attack fire from inside ``attacker`` into ``target``?"""
    return attacks_mask(f, mask_of(f, attacker), mask_of(f, target))


def label_argument(f: Framework, e: Extension, a: ArgumentId) -> ArgLabel:
    """Three-valued status of ``a`` wrt ``e``; membership beats defeat."""
    _owned(f, a)
    mask = mask_of(f, e)
    bit = 1 << a.index
    if bit & mask:
        return ArgLabel.IN
    if bit & range_plus_mask(f, mask):
        return ArgLabel.OUT
    return ArgLabel.UNDECIDED


def union_frameworks(f1: Framework, f2: Framework) -> Framework:
    """Componentwise union; arguments are matched by name.

    The result interns ``f1``'s arguments first (in their order), then the
    arguments that only ``f2`` has.  A name carried with different kinds by
    the two operands is rejected.
    """
    for a in f2.args:
        mine = f1.by_name.get(a.name)
        if mine is not None and mine.kind != a.kind:
            raise IncompatibleFrameworksError(
                f"argument {a.name!r} has kind {mine.kind.value} vs {a.kind.value}"
            )
    order = [a.name for a in f1.args]
    order += [a.name for a in f2.args if a.name not in f1.by_name]
    return make_framework(
        order,
        name_links(f1.attacks) | name_links(f2.attacks),
        name_links(f1.supports) | name_links(f2.supports),
    )
