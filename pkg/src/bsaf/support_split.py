"""Splitting a framework along collective supports.

Only backward support cuts are possible: every shared support points
from the upper part ``A2`` into the lower part ``A1``.  A forward
support would let the acceptance status of ``A1`` arguments depend on
``A2`` and breaks the one-pass evaluation order, so such cuts are
rejected outright.

A shared support ``(T, h)`` constrains the upper part whenever the
chosen ``e1`` accepts the whole ``A1`` portion of ``T`` but not ``h``:
accepting the rest of ``T`` would force ``h`` after recombination.  Two
dummy constructions encode that constraint inside ``f2``:

* type 1 (dummy ``*1``, attacked by the empty set, supported by
  ``T & A2``) additionally defeats everything the closure of ``T``
  reaches -- only sound when ``e1`` already defeats that closure;
* type 2 (dummy ``*2``, supported by ``T & A2`` and attacked by
  ``(T & A2) | {*2}``) merely forbids joint acceptance of the tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .core import (
    DUMMY_EMPTY_ATTACKED,
    DUMMY_SET_SELF_ATTACKED,
    ArgumentId,
    Extension,
    Framework,
    Link,
    closure_mask,
    extension_from_names,
    induced_subframework,
    make_framework,
    name_links,
    names_mask,
    range_plus_mask,
    union_frameworks,
)
from .errors import InvalidCutError, UnknownArgumentError
from .semantics import DEFAULT_ENUM_CAP, SOLVABLE, Semantics, enumerate_extensions


@dataclass(frozen=True)
class SupportSplitSpec:
    """A validated backward support splitting."""

    f1: Framework
    f2: Framework
    s3: frozenset[Link]

    @cached_property
    def combined(self) -> Framework:
        """The whole framework reassembled: ``f1`` then ``f2`` arguments."""
        order = [a.name for a in self.f1.args] + [a.name for a in self.f2.args]
        return make_framework(
            order,
            name_links(self.f1.attacks) | name_links(self.f2.attacks),
            name_links(self.f1.supports)
            | name_links(self.f2.supports)
            | name_links(self.s3),
        )

    @property
    def a1_names(self) -> frozenset[str]:
        return self.f1.arg_names

    @property
    def a2_names(self) -> frozenset[str]:
        return self.f2.arg_names


@dataclass(frozen=True)
class TailFamily:
    """A family of shared-support tails singled out by a constraint test."""

    tails: frozenset[frozenset[ArgumentId]]

    @property
    def name_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(a.name for a in t) for t in self.tails)

    def __bool__(self) -> bool:
        return bool(self.tails)


def derive_support_splitting(f: Framework, a1: Extension) -> SupportSplitSpec:
    """Partition ``f`` along ``a1`` sharing only backward supports.

    Fails on any attack crossing the cut (in either direction) and on
    forward supports (head outside ``a1`` with tail members inside).
    """
    names1 = a1.names
    unknown = names1 - f.arg_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])
    names2 = f.arg_names - names1

    s3 = []
    bad = []
    for link in f.attacks:
        within = link.tail_names | {link.head.name}
        if not within <= names1 and not within <= names2:
            bad.append(link)
    for link in f.supports:
        if link.head.name in names1:
            if not link.tail_names <= names1:
                s3.append(link)
        elif link.tail_names & names1:
            bad.append(link)  # forward support
    if bad:
        raise InvalidCutError("not a support splitting", bad)

    return SupportSplitSpec(
        f1=induced_subframework(f, names1),
        f2=induced_subframework(f, names2),
        s3=frozenset(s3),
    )


def _e1_names(spec: SupportSplitSpec, e1: Extension) -> frozenset[str]:
    names = e1.names
    unknown = names - spec.a1_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])
    return names


def _family(spec: SupportSplitSpec, tails: set[frozenset[str]]) -> TailFamily:
    combined = spec.combined
    return TailFamily(
        frozenset(
            frozenset(combined.by_name[name] for name in tail) for tail in tails
        )
    )


def support_incompatible(spec: SupportSplitSpec, e1: Extension) -> TailFamily:
    """Tails of shared supports whose acceptance would force a rejected head."""
    accepted = _e1_names(spec, e1)
    tails = {
        link.tail_names
        for link in spec.s3
        if link.tail_names & spec.a1_names <= accepted
        and link.head.name not in accepted
    }
    return _family(spec, tails)


def closure_defeated(spec: SupportSplitSpec, e1: Extension) -> TailFamily:
    """Support-incompatible tails living in ``A2`` whose closure ``e1`` defeats.

    Closure and defeat are evaluated in the reassembled full framework,
    so empty-tail attacks introduced by an earlier pipeline stage count.
    """
    accepted = _e1_names(spec, e1)
    combined = spec.combined
    defeated = range_plus_mask(combined, names_mask(combined, accepted))
    tails = set()
    for tail in support_incompatible(spec, e1).name_sets:
        if tail & spec.a1_names:
            continue
        if closure_mask(combined, names_mask(combined, tail)) & defeated:
            tails.add(tail)
    return _family(spec, tails)


def type1_modification(spec: SupportSplitSpec, e1: Extension) -> Framework:
    """Add ``*1`` (attacked by the empty set) fed by each closure-defeated tail."""
    defeated = closure_defeated(spec, e1)
    if not defeated:
        return spec.f2
    attacks = set(name_links(spec.f2.attacks))
    attacks.add((frozenset(), DUMMY_EMPTY_ATTACKED))
    supports = set(name_links(spec.f2.supports))
    for tail in defeated.name_sets:
        supports.add((tail & spec.a2_names, DUMMY_EMPTY_ATTACKED))
    return make_framework(
        [a.name for a in spec.f2.args] + [DUMMY_EMPTY_ATTACKED], attacks, supports
    )


def type2_modification(spec: SupportSplitSpec, e1: Extension) -> Framework:
    """Add ``*2`` whose joint self-attack vetoes each remaining tail."""
    remaining = (
        support_incompatible(spec, e1).name_sets
        - closure_defeated(spec, e1).name_sets
    )
    if not remaining:
        return spec.f2
    attacks = set(name_links(spec.f2.attacks))
    supports = set(name_links(spec.f2.supports))
    for tail in remaining:
        part = tail & spec.a2_names
        attacks.add((part | {DUMMY_SET_SELF_ATTACKED}, DUMMY_SET_SELF_ATTACKED))
        supports.add((part, DUMMY_SET_SELF_ATTACKED))
    return make_framework(
        [a.name for a in spec.f2.args] + [DUMMY_SET_SELF_ATTACKED], attacks, supports
    )


@lru_cache(maxsize=None)
def s_reduct(spec: SupportSplitSpec, e1: Extension) -> Framework:
    """Both constraint injections combined (componentwise union)."""
    return union_frameworks(
        type1_modification(spec, e1), type2_modification(spec, e1)
    )


def solve_support_split(
    f: Framework,
    a1: Extension,
    sem: Semantics,
    cap: int = DEFAULT_ENUM_CAP,
) -> frozenset[Extension]:
    """Extensions of ``f`` assembled across a backward support cut.

    Exact for stable, admissible and complete semantics; for preferred
    and grounded semantics every emitted set is correct but some
    extensions of ``f`` can be missed.
    """
    if sem not in SOLVABLE:
        raise ValueError(f"splitting is not defined for semantics {sem.value!r}")
    spec = derive_support_splitting(f, a1)
    out = set()
    for e1 in enumerate_extensions(spec.f1, sem, cap):
        reduced = s_reduct(spec, e1)
        for e2 in enumerate_extensions(reduced, sem, cap):
            user = {a.name for a in e2.members if not a.name.startswith("*")}
            out.add(extension_from_names(f, e1.names | user))
    return frozenset(out)
