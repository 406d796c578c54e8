"""The full splitting pipeline for cuts that share attacks and supports.

Order matters.  Closing the tails of ``f2``-internal attacks can pull in
lower-part arguments (an upper tail may support something below the
cut), so those attacks are promoted to shared status before the attack
machinery runs.  The stages are:

1. close every attack in ``r2`` and ``r3`` under the full support
   relation; attacks whose closed tail touches ``A1`` form ``hat_r3``,
   the rest stay in ``f2`` as ``hat_r2``;
2. build the attack reduct of ``(f1, hat_f2, hat_r3)`` for the chosen
   ``e1``;
3. graft the ``*0`` dummy onto the undecided links, yielding ``star``;
4. run the support-splitting constraint injection on
   ``(f1, star, s3)``, yielding the final frame to enumerate.

Every stage is materialized in a :class:`PipelineTrace` so it can be
inspected, serialized, and tested on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .attack_split import (
    AttackSplitSpec,
    _close_name_links,
    modify,
    r_reduct,
    undecided_links,
)
from .core import (
    Extension,
    Framework,
    Link,
    extension_from_names,
    induced_subframework,
    make_framework,
    name_links,
)
from .errors import InvalidCutError, UnknownArgumentError
from .semantics import DEFAULT_ENUM_CAP, SOLVABLE, Semantics, enumerate_extensions
from .support_split import SupportSplitSpec, s_reduct


@dataclass(frozen=True)
class SplitSpec:
    """A validated general splitting: shared attacks ``r3``, supports ``s3``."""

    f1: Framework
    f2: Framework
    r3: frozenset[Link]
    s3: frozenset[Link]

    @cached_property
    def combined(self) -> Framework:
        order = [a.name for a in self.f1.args] + [a.name for a in self.f2.args]
        return make_framework(
            order,
            name_links(self.f1.attacks)
            | name_links(self.f2.attacks)
            | name_links(self.r3),
            name_links(self.f1.supports)
            | name_links(self.f2.supports)
            | name_links(self.s3),
        )

    @property
    def a1_names(self) -> frozenset[str]:
        return self.f1.arg_names


@dataclass(frozen=True)
class PipelineTrace:
    """Materialized stages of one pipeline run; later stages may be unset."""

    hat_f2: Framework
    hat_r3: frozenset[Link]
    reduct: Framework | None = None
    star: Framework | None = None
    final: Framework | None = None


def derive_splitting(f: Framework, a1: Extension) -> SplitSpec:
    """Partition ``f`` along ``a1`` into a general splitting.

    Fails on attacks pointing into ``a1`` from outside and on forward
    supports (head outside ``a1``, tail members inside).
    """
    names1 = a1.names
    unknown = names1 - f.arg_names
    if unknown:
        raise UnknownArgumentError(sorted(unknown)[0])

    r3, s3, bad = [], [], []
    for link in f.attacks:
        if link.head.name in names1:
            if not link.tail_names <= names1:
                bad.append(link)
        elif link.tail_names & names1:
            r3.append(link)
    for link in f.supports:
        if link.head.name in names1:
            if not link.tail_names <= names1:
                s3.append(link)
        elif link.tail_names & names1:
            bad.append(link)
    if bad:
        raise InvalidCutError("not a splitting", bad)

    names2 = f.arg_names - names1
    return SplitSpec(
        f1=induced_subframework(f, names1),
        f2=induced_subframework(f, names2),
        r3=frozenset(r3),
        s3=frozenset(s3),
    )


def hat_transform(spec: SplitSpec) -> PipelineTrace:
    """Stage 1: close ``r2`` and ``r3`` tails, then repartition the attacks.

    Closing may promote a former ``f2``-internal attack into the shared
    set, when its tail supports something below the cut.
    """
    supports = (
        name_links(spec.f1.supports)
        | name_links(spec.f2.supports)
        | name_links(spec.s3)
    )
    closed = _close_name_links(
        name_links(spec.f2.attacks) | name_links(spec.r3), supports
    )
    hat_r2 = {(t, h) for t, h in closed if not t & spec.a1_names}
    hat_r3 = {(t, h) for t, h in closed if t & spec.a1_names}

    hat_f2 = make_framework(
        [a.name for a in spec.f2.args], hat_r2, name_links(spec.f2.supports)
    )
    combined = spec.combined
    links = frozenset(
        Link(
            tuple(sorted((combined.by_name[t] for t in tail), key=lambda a: a.index)),
            combined.by_name[head],
        )
        for tail, head in hat_r3
    )
    return PipelineTrace(hat_f2=hat_f2, hat_r3=links)


@lru_cache(maxsize=None)
def build_reduced(spec: SplitSpec, e1: Extension) -> PipelineTrace:
    """Run all four stages for one ``e1`` and return the full trace."""
    trace = hat_transform(spec)
    attack_spec = AttackSplitSpec(
        f1=spec.f1,
        f2=trace.hat_f2,
        r3=trace.hat_r3,
        closed_r3=trace.hat_r3,  # hat links are closed already
    )
    reduct = r_reduct(attack_spec, e1)
    star = modify(reduct, undecided_links(attack_spec, e1))
    support_spec = SupportSplitSpec(f1=spec.f1, f2=star, s3=spec.s3)
    final = s_reduct(support_spec, e1)
    return PipelineTrace(
        hat_f2=trace.hat_f2,
        hat_r3=trace.hat_r3,
        reduct=reduct,
        star=star,
        final=final,
    )


def solve_split(
    f: Framework,
    a1: Extension,
    sem: Semantics,
    cap: int = DEFAULT_ENUM_CAP,
) -> frozenset[Extension]:
    """Extensions of ``f`` assembled across a general cut.

    Exact for stable, admissible and complete semantics; sound but
    possibly incomplete for preferred and grounded semantics.
    """
    if sem not in SOLVABLE:
        raise ValueError(f"splitting is not defined for semantics {sem.value!r}")
    spec = derive_splitting(f, a1)
    out = set()
    for e1 in enumerate_extensions(spec.f1, sem, cap):
        trace = build_reduced(spec, e1)
        assert trace.final is not None
        for e2 in enumerate_extensions(trace.final, sem, cap):
            user = {a.name for a in e2.members if not a.name.startswith("*")}
            out.add(extension_from_names(f, e1.names | user))
    return frozenset(out)
