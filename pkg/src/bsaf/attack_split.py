"""Splitting a framework along collective attacks.

The cut separates the arguments into a lower part ``A1`` and an upper
part ``A2``.  Attacks may cross only from ``A1`` into ``A2`` (those form
the shared relation ``r3``); supports must not cross at all.  Solving is
incremental: pick an extension of ``f1``, rewrite ``f2`` to reflect it,
and enumerate the rewritten frame.

The rewrite runs in three steps.  First every shared attack gets its
tail closed under the full support relation, so that indirect defeat
through supported arguments becomes visible.  Second the reduct keeps
all of ``A2`` and projects the surviving shared attacks onto it; a tail
that lies entirely in the accepted part projects to the empty set,
which marks its head as defeated without deleting it (deletion would
corrupt closures in ``f2``).  Third, shared attacks whose tail is
neither accepted nor defeated stay "undecided": a self-attacking dummy
``*0`` joins their projected tails so their heads stay out of reach
without ever being defeatable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property, lru_cache

from .core import (
    DUMMY_SELF_ATTACKER,
    Extension,
    Framework,
    Link,
    extension_from_names,
    induced_subframework,
    make_framework,
    name_links,
)
from .errors import BsafError, InvalidCutError, UnknownArgumentError
from .semantics import DEFAULT_ENUM_CAP, SOLVABLE, Semantics, enumerate_extensions

NameLinkSet = frozenset[tuple[frozenset[str], str]]


@dataclass(frozen=True)
class AttackSplitSpec:
    """A validated attack splitting; ``closed_r3`` is filled by closing."""

    f1: Framework
    f2: Framework
    r3: frozenset[Link]
    closed_r3: frozenset[Link] | None = None

    @cached_property
    def combined(self) -> Framework:
        """The whole framework reassembled: ``f1`` then ``f2`` arguments."""
        order = [a.name for a in self.f1.args] + [a.name for a in self.f2.args]
        return make_framework(
            order,
            name_links(self.f1.attacks)
            | name_links(self.f2.attacks)
            | name_links(self.r3),
            name_links(self.f1.supports) | name_links(self.f2.supports),
        )

    @property
    def a1_names(self) -> frozenset[str]:
        return self.f1.arg_names

    @property
    def a2_names(self) -> frozenset[str]:
        return self.f2.arg_names


def derive_attack_splitting(f: Framework, a1: Extension) -> AttackSplitSpec:
    """Partition ``f`` along ``a1``; the partition is forced once ``a1`` is fixed.

    Fails when an attack points into ``a1`` from outside, or when any
    support crosses the cut in either direction.
    """
    names1 = a1.names
    unknown = names1 - f.arg_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])
    names2 = f.arg_names - names1

    r3 = []
    bad = []
    for link in f.attacks:
        tails1 = link.tail_names & names1
        if link.head.name in names1:
            if link.tail_names <= names1:
                continue  # stays in f1
            bad.append(link)
        elif tails1:
            r3.append(link)
    for link in f.supports:
        inside1 = link.tail_names | {link.head.name} <= names1
        inside2 = link.tail_names | {link.head.name} <= names2
        if not inside1 and not inside2:
            bad.append(link)
    if bad:
        raise InvalidCutError("not an attack splitting", bad)

    return AttackSplitSpec(
        f1=induced_subframework(f, names1),
        f2=induced_subframework(f, names2),
        r3=frozenset(r3),
    )


def close_attack(f: Framework, link: Link) -> Framework:
    """Replace one attack's tail by its closure; the semantics are unchanged."""
    if link not in f.attacks:
        raise BsafError(f"attack {link} not in framework")
    closed = frozenset(_close_name_links(name_links([link]), name_links(f.supports)))
    kept = name_links(f.attacks - {link})
    return make_framework(
        [a.name for a in f.args], kept | closed, name_links(f.supports)
    )


def _close_name_links(links: NameLinkSet, supports: NameLinkSet) -> NameLinkSet:
    def close(names: frozenset[str]) -> frozenset[str]:
        current = set(names)
        while True:
            grown = set(current)
            for tail, head in supports:
                if tail <= current:
                    grown.add(head)
            if grown == current:
                return frozenset(current)
            current = grown

    return frozenset((close(tail), head) for tail, head in links)


def close_negative_links(spec: AttackSplitSpec) -> AttackSplitSpec:
    """Close every shared attack's tail under the full support relation."""
    supports = name_links(spec.f1.supports) | name_links(spec.f2.supports)
    closed = _close_name_links(name_links(spec.r3), supports)
    combined = spec.combined
    links = frozenset(
        Link(
            tuple(sorted((combined.by_name[t] for t in tail), key=lambda a: a.index)),
            combined.by_name[head],
        )
        for tail, head in closed
    )
    return replace(spec, closed_r3=links)


def _require_closed(spec: AttackSplitSpec) -> NameLinkSet:
    if spec.closed_r3 is None:
        raise BsafError("negative links not closed; call close_negative_links first")
    return name_links(spec.closed_r3)


def _e1_names(spec: AttackSplitSpec, e1: Extension) -> frozenset[str]:
    names = e1.names
    unknown = names - spec.a1_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])
    return names


def _e1_range(spec: AttackSplitSpec, closed_r3: NameLinkSet, e1: frozenset[str]) -> frozenset[str]:
    """Heads defeated by ``e1`` through ``f1`` attacks or closed shared ones."""
    out = set()
    for tail, head in name_links(spec.f1.attacks) | closed_r3:
        if tail <= e1:
            out.add(head)
    return frozenset(out)


def r_reduct(spec: AttackSplitSpec, e1: Extension) -> Framework:
    """Rewrite ``f2`` for a chosen ``e1``: keep all arguments, project attacks.

    A closed shared attack survives when its tail is not defeated by
    ``e1`` and its ``A1`` part is accepted; the surviving tail is
    projected onto ``A2`` and may come out empty, which pins the head as
    defeated.
    """
    closed_r3 = _require_closed(spec)
    accepted = _e1_names(spec, e1)
    defeated = _e1_range(spec, closed_r3, accepted)

    attacks = set(name_links(spec.f2.attacks))
    for tail, head in closed_r3:
        if not tail & defeated and tail & spec.a1_names <= accepted:
            attacks.add((tail & spec.a2_names, head))
    return make_framework(
        [a.name for a in spec.f2.args], attacks, name_links(spec.f2.supports)
    )


def undecided_links(spec: AttackSplitSpec, e1: Extension) -> frozenset[Link]:
    """Closed shared attacks whose tail is neither defeated nor accepted."""
    closed_r3 = _require_closed(spec)
    accepted = _e1_names(spec, e1)
    defeated = _e1_range(spec, closed_r3, accepted)
    return frozenset(
        link
        for link in spec.closed_r3  # type: ignore[union-attr]
        if not link.tail_names & defeated
        and not link.tail_names & spec.a1_names <= accepted
    )


def modify(reduct: Framework, undecided: frozenset[Link]) -> Framework:
    """Graft the self-attacking dummy ``*0`` onto each undecided link.

    With no undecided links the reduct is returned untouched; inserting
    the dummy unconditionally would wipe out stable extensions.
    """
    if not undecided:
        return reduct
    a2 = reduct.arg_names
    attacks = set(name_links(reduct.attacks))
    attacks.add((frozenset([DUMMY_SELF_ATTACKER]), DUMMY_SELF_ATTACKER))
    for link in undecided:
        attacks.add(
            (link.tail_names & a2 | {DUMMY_SELF_ATTACKER}, link.head.name)
        )
    return make_framework(
        [a.name for a in reduct.args] + [DUMMY_SELF_ATTACKER],
        attacks,
        name_links(reduct.supports),
    )


@lru_cache(maxsize=None)
def modified_reduct(spec: AttackSplitSpec, e1: Extension) -> Framework:
    """The fully rewritten second frame for ``e1`` (reduct plus modification)."""
    return modify(r_reduct(spec, e1), undecided_links(spec, e1))


def solve_attack_split(
    f: Framework,
    a1: Extension,
    sem: Semantics,
    cap: int = DEFAULT_ENUM_CAP,
) -> frozenset[Extension]:
    """Extensions of ``f`` assembled from the two halves of the cut.

    Exact for stable, admissible, complete and preferred semantics; for
    grounded semantics every emitted set is grounded in ``f`` but some
    grounded extensions can be unreachable.
    """
    if sem not in SOLVABLE:
        raise ValueError(f"splitting is not defined for semantics {sem.value!r}")
    spec = close_negative_links(derive_attack_splitting(f, a1))
    out = set()
    for e1 in enumerate_extensions(spec.f1, sem, cap):
        star = modified_reduct(spec, e1)
        for e2 in enumerate_extensions(star, sem, cap):
            user = {a.name for a in e2.members if not a.name.startswith("*")}
            out.add(extension_from_names(f, e1.names | user))
    return frozenset(out)
