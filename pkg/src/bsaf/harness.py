"""Differential testing and benchmarking of the splitting pipelines.

Every report compares a pipeline's output against the exhaustive
enumeration oracle on the same framework.  ``Equal`` and ``Violation``
mean what they say; ``SoundSubset`` (output correct but incomplete) is
the expected outcome for the semantics whose splitting theorems hold in
one direction only: grounded under every mode, preferred under the
support and combined modes.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .attack_split import derive_attack_splitting, solve_attack_split
from .combined_split import derive_splitting, solve_split
from .core import Extension, Framework
from .errors import InvalidCutError
from .generate import GenConfig, SplitMix64, gen_random
from .semantics import Semantics, enumerate_extensions
from .split_finder import enumerate_cuts
from .support_split import derive_support_splitting, solve_support_split


class SplitMode(enum.Enum):
    ATTACK = "attack"
    SUPPORT = "support"
    COMBINED = "combined"


_SOLVERS = {
    SplitMode.ATTACK: solve_attack_split,
    SplitMode.SUPPORT: solve_support_split,
    SplitMode.COMBINED: solve_split,
}

_VALIDATORS = {
    SplitMode.ATTACK: derive_attack_splitting,
    SplitMode.SUPPORT: derive_support_splitting,
    SplitMode.COMBINED: derive_splitting,
}


class Verdict(enum.Enum):
    EQUAL = "equal"
    SOUND_SUBSET = "sound-subset"
    VIOLATION = "violation"


#: (mode, semantics) pairs for which the pipeline may legitimately miss
#: extensions; everything else must be an exact match.
SOUND_ONLY: frozenset[tuple[SplitMode, Semantics]] = frozenset(
    {
        (SplitMode.ATTACK, Semantics.GROUNDED),
        (SplitMode.SUPPORT, Semantics.GROUNDED),
        (SplitMode.SUPPORT, Semantics.PREFERRED),
        (SplitMode.COMBINED, Semantics.GROUNDED),
        (SplitMode.COMBINED, Semantics.PREFERRED),
    }
)


def allowed_verdicts(mode: SplitMode, sem: Semantics) -> frozenset[Verdict]:
    if (mode, sem) in SOUND_ONLY:
        return frozenset({Verdict.EQUAL, Verdict.SOUND_SUBSET})
    return frozenset({Verdict.EQUAL})


@dataclass(frozen=True)
class DiffReport:
    semantics: Semantics
    cut: Extension
    missing: frozenset[Extension]  # oracle-only
    extra: frozenset[Extension]  # split-only
    verdict: Verdict


def differential(
    f: Framework, a1: Extension, sem: Semantics, mode: SplitMode
) -> DiffReport:
    """Compare the mode's pipeline with the oracle on ``f`` along ``a1``."""
    split = _SOLVERS[mode](f, a1, sem)
    oracle = enumerate_extensions(f, sem)
    missing = frozenset(oracle - split)
    extra = frozenset(split - oracle)
    if extra:
        verdict = Verdict.VIOLATION
    elif missing:
        verdict = Verdict.SOUND_SUBSET
    else:
        verdict = Verdict.EQUAL
    return DiffReport(sem, a1, missing, extra, verdict)


def applicable_modes(f: Framework, a1: Extension) -> list[SplitMode]:
    """Pipelines whose validity conditions the cut satisfies."""
    modes = []
    for mode in SplitMode:
        try:
            _VALIDATORS[mode](f, a1)
        except InvalidCutError:
            continue
        modes.append(mode)
    return modes


# -- benchmarking -------------------------------------------------------------

BENCH_CSV_HEADER = "n,cut_size,semantics,oracle_ms,split_ms,ext_count"


@dataclass(frozen=True)
class BenchRecord:
    n: int
    cut_size: int
    semantics: Semantics
    oracle_ms: float
    split_ms: float
    ext_count: int

    def csv_row(self) -> str:
        return (
            f"{self.n},{self.cut_size},{self.semantics.value},"
            f"{self.oracle_ms:.3f},{self.split_ms:.3f},{self.ext_count}"
        )


def bench(f: Framework, a1: Extension, sem: Semantics) -> BenchRecord:
    """Wall-clock oracle vs combined split solve on one cut.

    Output correctness gates the timings: the split result must equal
    the oracle, except for the sound-only semantics where it must be a
    subset.
    """
    t0 = time.perf_counter()
    oracle = enumerate_extensions(f, sem)
    t1 = time.perf_counter()
    split = solve_split(f, a1, sem)
    t2 = time.perf_counter()

    if not split <= oracle:
        raise AssertionError("split produced extensions the oracle rejects")
    if (SplitMode.COMBINED, sem) not in SOUND_ONLY and split != oracle:
        raise AssertionError("split and oracle disagree on the extension set")

    return BenchRecord(
        n=f.n,
        cut_size=len(a1.members),
        semantics=sem,
        oracle_ms=(t1 - t0) * 1000.0,
        split_ms=(t2 - t1) * 1000.0,
        ext_count=len(oracle),
    )


# -- fuzz campaigns ------------------------------------------------------------


@dataclass(frozen=True)
class FuzzCase:
    seed: int
    cut: Extension
    mode: SplitMode
    report: DiffReport


@dataclass
class FuzzResult:
    cases: list[FuzzCase]
    violations: list[FuzzCase]

    def verdict_counts(self) -> dict[Verdict, int]:
        counts = {v: 0 for v in Verdict}
        for case in self.cases:
            counts[case.report.verdict] += 1
        return counts


def frame_config(
    seed: int,
    max_args: int,
    p_attack: float = 0.3,
    p_support: float = 0.25,
    max_tail: int = 2,
    support_dag: bool = True,
) -> GenConfig:
    """The per-seed draw used by fuzz campaigns; n varies with the seed."""
    n = 2 + SplitMix64(seed ^ 0xC0FFEE).below(max(1, max_args - 1))
    return GenConfig(
        seed=seed,
        n_args=n,
        p_attack=p_attack,
        p_support=p_support,
        max_tail=max_tail,
        support_dag=support_dag,
    )


def run_fuzz(
    sem: Semantics,
    seed0: int,
    count: int,
    max_args: int,
    p_attack: float = 0.3,
    p_support: float = 0.25,
    modes: tuple[SplitMode, ...] | None = None,
) -> FuzzResult:
    """Differential-check ``count`` seeded frames on every valid prefix cut.

    A case whose verdict falls outside :func:`allowed_verdicts` for its
    (mode, semantics) pair lands in ``violations``; the caller decides
    whether a ``SoundSubset`` for an exactness pair is a failure (it is).
    """
    cases: list[FuzzCase] = []
    violations: list[FuzzCase] = []
    for seed in range(seed0, seed0 + count):
        f = gen_random(frame_config(seed, max_args, p_attack, p_support))
        for cut in enumerate_cuts(f):
            wanted = modes or tuple(SplitMode)
            for mode in applicable_modes(f, cut):
                if mode not in wanted:
                    continue
                report = differential(f, cut, sem, mode)
                case = FuzzCase(seed, cut, mode, report)
                cases.append(case)
                if report.verdict not in allowed_verdicts(mode, sem):
                    violations.append(case)
    return FuzzResult(cases=cases, violations=violations)
