"""Command-line interface.

Exit codes: 0 on success, 1 on violations or invalid input, 2 on usage
errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as fmt
from .attack_split import solve_attack_split
from .combined_split import build_reduced, derive_splitting, solve_split
from .core import Extension, Framework, extension_from_names
from .errors import BsafError, ParseError
from .generate import GenConfig, gen_random
from .harness import (
    BENCH_CSV_HEADER,
    SOUND_ONLY,
    SplitMode,
    Verdict,
    bench,
    run_fuzz,
)
from .semantics import Semantics, enumerate_extensions
from .split_finder import enumerate_cuts
from .support_split import solve_support_split

_MODE_SOLVERS = {
    SplitMode.ATTACK: solve_attack_split,
    SplitMode.SUPPORT: solve_support_split,
    SplitMode.COMBINED: solve_split,
}

INCOMPLETENESS_WARNING = (
    "# warning: sound but possibly incomplete under this semantics"
)

_SEMANTICS = {s.value: s for s in Semantics}


def _load_framework(path: str) -> Framework:
    return fmt.parse_framework(Path(path).read_text(encoding="utf-8"))


def _load_cut(path: str, f: Framework) -> Extension:
    return fmt.parse_cut(Path(path).read_text(encoding="utf-8"), f)


def _semantics(token: str) -> Semantics:
    return _SEMANTICS[token]


def _cmd_enumerate(args) -> int:
    f = _load_framework(args.file)
    exts = enumerate_extensions(f, _semantics(args.semantics))
    sys.stdout.write(fmt.serialize_extensions(exts))
    return 0


def _cmd_check(args) -> int:
    f = _load_framework(args.file)
    print(
        f"framework ok: {f.n} args, {len(f.attacks)} attacks, "
        f"{len(f.supports)} supports"
    )
    if args.cut:
        cut = _load_cut(args.cut, f)
        spec = derive_splitting(f, cut)
        print(
            f"cut ok: {len(cut.members)}/{f.n - len(cut.members)} args, "
            f"{len(spec.r3)} shared attacks, {len(spec.s3)} shared supports"
        )
    return 0


def _cmd_gen(args) -> int:
    cfg = GenConfig(
        seed=args.seed,
        n_args=args.args,
        p_attack=args.p_att,
        p_support=args.p_sup,
        max_tail=args.max_tail,
        support_dag=not args.cyclic_supports,
    )
    sys.stdout.write(fmt.serialize_framework(gen_random(cfg)))
    return 0


def _cmd_split_find(args) -> int:
    f = _load_framework(args.file)
    for cut in enumerate_cuts(f):
        print(",".join(a.name for a in cut.sorted_members()))
    return 0


def _cmd_split_solve(args) -> int:
    f = _load_framework(args.file)
    cut = _load_cut(args.cut, f)
    sem = _semantics(args.semantics)
    mode = SplitMode(args.mode)
    if (mode, sem) in SOUND_ONLY:
        print(INCOMPLETENESS_WARNING)
    split = _MODE_SOLVERS[mode](f, cut, sem)
    sys.stdout.write(fmt.serialize_extensions(split))
    return 0


def _cmd_split_trace(args) -> int:
    f = _load_framework(args.file)
    cut = _load_cut(args.cut, f)
    names = [t for t in args.extension.replace("{}", "").split(",") if t]
    spec = derive_splitting(f, cut)
    e1 = extension_from_names(spec.f1, names)
    trace = build_reduced(spec, e1)
    out = sys.stdout
    out.write("# stage hat_f2\n")
    out.write(fmt.serialize_framework(trace.hat_f2))
    out.write("# stage hat_r3\n")
    out.write(fmt.serialize_links(trace.hat_r3))
    for stage in ("reduct", "star", "final"):
        out.write(f"# stage {stage}\n")
        out.write(fmt.serialize_framework(getattr(trace, stage)))
    return 0


def _cmd_diff(args) -> int:
    sem = _semantics(args.semantics)
    result = run_fuzz(sem, args.seed, args.count, args.max_args)
    counts = result.verdict_counts()
    print(
        f"cases={len(result.cases)} equal={counts[Verdict.EQUAL]} "
        f"sound-subset={counts[Verdict.SOUND_SUBSET]} "
        f"violations={counts[Verdict.VIOLATION]}"
    )
    for case in result.violations:
        cut = ",".join(a.name for a in case.cut.sorted_members())
        print(
            f"violation: seed={case.seed} mode={case.mode.value} cut={cut}",
            file=sys.stderr,
        )
    return 1 if result.violations else 0


def _cmd_bench(args) -> int:
    f = _load_framework(args.file)
    cut = _load_cut(args.cut, f)
    record = bench(f, cut, _semantics(args.semantics))
    print(BENCH_CSV_HEADER)
    print(record.csv_row())
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsaf",
        description="Solve and split bipolar set-based argumentation frameworks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sem_choices = sorted(_SEMANTICS)

    p = sub.add_parser("enumerate", help="list all extensions of a framework")
    p.add_argument("--semantics", required=True, choices=sem_choices)
    p.add_argument("file")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="validate a framework file and optionally a cut")
    p.add_argument("--cut")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="print a seeded random framework")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--args", type=int, required=True)
    p.add_argument("--p-att", type=float, required=True)
    p.add_argument("--p-sup", type=float, required=True)
    p.add_argument("--max-tail", type=int, required=True)
    p.add_argument("--cyclic-supports", action="store_true")
    p.set_defaults(func=_cmd_gen)

    split = sub.add_parser("split", help="cut discovery, incremental solving, traces")
    split_sub = split.add_subparsers(dest="split_command", required=True)

    p = split_sub.add_parser("find", help="list candidate cuts, one per line")
    p.add_argument("file")
    p.set_defaults(func=_cmd_split_find)

    p = split_sub.add_parser("solve", help="solve through a splitting pipeline")
    p.add_argument("--semantics", required=True, choices=sorted(set(sem_choices) - {"cf"}))
    p.add_argument("--cut", required=True)
    p.add_argument(
        "--mode",
        choices=[m.value for m in SplitMode],
        default=SplitMode.COMBINED.value,
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_split_solve)

    p = split_sub.add_parser("trace", help="dump every pipeline stage for one e1")
    p.add_argument("--cut", required=True)
    p.add_argument("--extension", required=True, help='comma-separated names, "" for empty')
    p.add_argument("file")
    p.set_defaults(func=_cmd_split_trace)

    p = sub.add_parser("diff", help="fuzz the pipelines against the oracle")
    p.add_argument("--semantics", required=True, choices=sorted(set(sem_choices) - {"cf"}))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-args", type=int, required=True)
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("bench", help="time oracle vs split solve, emit a CSV row")
    p.add_argument("--semantics", required=True, choices=sorted(set(sem_choices) - {"cf"}))
    p.add_argument("--cut", required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        where = f" at {exc.span}" if exc.span else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return 1
    except (BsafError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
