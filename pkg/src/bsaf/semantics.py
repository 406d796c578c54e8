"""Decision procedures and exhaustive enumeration for the six semantics.

The enumerator is deliberately naive: it walks every subset of the
argument set in ascending index order and filters with the decision
predicates.  It is the ground truth every splitting pipeline is checked
against, so auditability beats speed; performance comes from splitting,
not from this oracle.

Defense is decided with the closure-of-tail criterion: a set defends an
argument when it counter-attacks the closure of the tail of every attack
on that argument.  Attacking the closure of a tail attacks every closed
superset of the tail, so this agrees with quantifying over all closed
attackers; ``defends_naive`` implements that literal quantification and
exists purely as a differential oracle for ``defends``.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .core import (
    ArgumentId,
    Extension,
    Framework,
    _owned,
    attacks_mask,
    closure_mask,
    extension_of,
    mask_of,
    range_plus_mask,
)
from .errors import CapExceededError

DEFAULT_ENUM_CAP = 20
NAIVE_DEFENSE_CAP = 16


class Semantics(enum.Enum):
    CONFLICT_FREE = "cf"
    ADMISSIBLE = "adm"
    COMPLETE = "com"
    GROUNDED = "grd"
    PREFERRED = "pref"
    STABLE = "stb"


#: Semantics the splitting theorems are stated for (everything but cf).
SOLVABLE = (
    Semantics.STABLE,
    Semantics.ADMISSIBLE,
    Semantics.COMPLETE,
    Semantics.PREFERRED,
    Semantics.GROUNDED,
)


# -- per-framework tables -----------------------------------------------------


@lru_cache(maxsize=None)
def _defense_table(f: Framework) -> tuple[tuple[int, ...], ...]:
    """For each argument index, the closed tail masks of its attackers."""
    table: list[list[int]] = [[] for _ in f.args]
    for tail, head in f._atk:
        table[head.bit_length() - 1].append(closure_mask(f, tail))
    return tuple(tuple(t) for t in table)


def _defends_mask(f: Framework, mask: int, index: int) -> bool:
    for closed_tail in _defense_table(f)[index]:
        if not attacks_mask(f, mask, closed_tail):
            return False
    return True


def _cf_mask(f: Framework, mask: int) -> bool:
    for tail, head in f._atk:
        if tail & ~mask == 0 and head & mask:
            return False
    return True


def _adm_mask(f: Framework, mask: int) -> bool:
    if not _cf_mask(f, mask) or closure_mask(f, mask) != mask:
        return False
    m = mask
    while m:
        bit = m & -m
        if not _defends_mask(f, mask, bit.bit_length() - 1):
            return False
        m ^= bit
    return True


def _com_mask(f: Framework, mask: int) -> bool:
    if not _adm_mask(f, mask):
        return False
    for a in f.args:
        if not mask >> a.index & 1 and _defends_mask(f, mask, a.index):
            return False
    return True


def _stb_mask(f: Framework, mask: int) -> bool:
    return _adm_mask(f, mask) and mask | range_plus_mask(f, mask) == f.full_mask


# -- public predicates --------------------------------------------------------


def is_conflict_free(f: Framework, e: Extension) -> bool:
    """No attack fires from inside ``e`` onto a member of ``e``."""
    return _cf_mask(f, mask_of(f, e))


def defends(f: Framework, e: Extension, a: ArgumentId) -> bool:
    """Does ``e`` counter-attack the closed tail of every attack on ``a``?"""
    _owned(f, a)
    return _defends_mask(f, mask_of(f, e), a.index)


def defends_naive(f: Framework, e: Extension, a: ArgumentId) -> bool:
    """Literal defense check: quantify over every closed attacker of ``a``.

    Exponential in the argument count; guarded by ``NAIVE_DEFENSE_CAP``.
    """
    if f.n > NAIVE_DEFENSE_CAP:
        raise CapExceededError(f.n, NAIVE_DEFENSE_CAP)
    _owned(f, a)
    e_mask = mask_of(f, e)
    bit = 1 << a.index
    tails = [tail for tail, head in f._atk if head == bit]
    for candidate in range(1 << f.n):
        if closure_mask(f, candidate) != candidate:
            continue
        if not any(tail & ~candidate == 0 for tail in tails):
            continue
        if not attacks_mask(f, e_mask, candidate):
            return False
    return True


def is_admissible(f: Framework, e: Extension) -> bool:
    """Conflict-free, closed, and defends each of its members."""
    return _adm_mask(f, mask_of(f, e))


def is_complete(f: Framework, e: Extension) -> bool:
    """Admissible and contains every argument it defends."""
    return _com_mask(f, mask_of(f, e))


def is_stable(f: Framework, e: Extension) -> bool:
    """Admissible and defeats everything outside itself."""
    return _stb_mask(f, mask_of(f, e))


# -- exhaustive enumeration ---------------------------------------------------


@lru_cache(maxsize=None)
def _extension_masks(f: Framework, sem: Semantics, cap: int) -> tuple[int, ...]:
    if f.n > cap:
        raise CapExceededError(f.n, cap)

    if sem is Semantics.CONFLICT_FREE:
        test = _cf_mask
    elif sem is Semantics.ADMISSIBLE or sem is Semantics.PREFERRED:
        test = _adm_mask
    elif sem is Semantics.COMPLETE or sem is Semantics.GROUNDED:
        test = _com_mask
    elif sem is Semantics.STABLE:
        test = _stb_mask
    else:  # pragma: no cover - enum is closed
        raise ValueError(sem)

    hits = [m for m in range(1 << f.n) if test(f, m)]
    if sem is Semantics.PREFERRED:
        hits = [m for m in hits if not any(h != m and m & ~h == 0 for h in hits)]
    elif sem is Semantics.GROUNDED:
        hits = [m for m in hits if not any(h != m and h & ~m == 0 for h in hits)]
    return tuple(hits)


def enumerate_extensions(
    f: Framework, sem: Semantics, cap: int = DEFAULT_ENUM_CAP
) -> frozenset[Extension]:
    """Exact extension set of ``f`` under ``sem`` by subset filtering.

    Preferred/grounded are the inclusion-maximal admissible resp.
    inclusion-minimal complete sets; grounded is therefore a set of
    extensions and may be empty or hold several incomparable members.
    """
    return frozenset(extension_of(f, m) for m in _extension_masks(f, sem, cap))
