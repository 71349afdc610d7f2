"""Command-line interface: ``pfsemi <subcommand> ...``.

Exit codes: 0 success (an empty result that is proved empty counts as
success), 1 usage or input error, 2 random search ran out of attempts,
3 time budget exhausted (partial output is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import semigroups_with_pseudo_frobenius
from .errors import PFSemiError, TimeBudgetExceeded
from .forced import Fail, ForcedState, PFTarget, forced_integers, forced_integers_quick
from .irreducible import enumerate_via_irreducibles, irreducibles_containing, irreducibles_with_frobenius
from .oracle import DEFAULT_BOUND, all_semigroups_with_frobenius, build_index
from .randomized import AttemptsExhausted, DefinitelyEmpty, RandomConfig, random_search
from .semigroup import NumSemigroup, minimal_generators

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EXHAUSTED = 2
EXIT_TIMEOUT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(values) -> list[int]:
    out = []
    for chunk in values or []:
        for piece in chunk.replace(" ", ",").split(","):
            if not piece:
                continue
            try:
                out.append(int(piece))
            except ValueError:
                raise UsageError(f"not an integer: {piece!r}") from None
    return out


def parse_pf(values) -> PFTarget:
    raw = _int_list(values)
    if not raw:
        raise UsageError("--pf needs at least one integer")
    unique = sorted(set(raw))
    if len(unique) != len(raw):
        _warn(f"duplicate values removed from --pf: {raw}")
    try:
        return PFTarget(tuple(unique))
    except PFSemiError as exc:
        raise UsageError(str(exc)) from None


def _fmt_semigroup(s: NumSemigroup) -> str:
    return "<" + ", ".join(map(str, minimal_generators(s))) + ">"


def render_intervals(state: ForcedState) -> str:
    """One row per block of ten integers: G forced gap, E forced element, . free."""
    frob = state.frob
    rows = []
    for start in range(0, frob + 2, 10):
        cells = []
        for k in range(start, min(start + 10, frob + 2)):
            if (state.gap_mask >> k) & 1:
                cells.append("G")
            elif (state.element_mask >> k) & 1:
                cells.append("E")
            else:
                cells.append(".")
        rows.append(f"{start:>5} | {' '.join(cells)}")
    return "\n".join(rows)


def _warn(message: str) -> None:
    print(f"pfsemi: warning: {message}", file=sys.stderr)


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- subcommands -----------------------------------------------------------


def cmd_forced(args) -> int:
    target = parse_pf(args.pf)
    outcome = forced_integers_quick(target) if args.quick else forced_integers(target, saturate=args.saturate)
    if args.json:
        _dump({"pf": list(target.pf), **outcome.to_dict()})
        return EXIT_OK
    if isinstance(outcome, Fail):
        print(str(outcome))
        print("no numerical semigroup has this set of pseudo-Frobenius numbers")
        return EXIT_OK
    print(f"forced gaps:     {outcome.gaps}")
    print(f"forced elements: {outcome.elements}")
    print(f"free:            {outcome.free}")
    if args.picture:
        print(render_intervals(outcome))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    target = parse_pf(args.pf)
    code = EXIT_OK
    try:
        if args.method == "irreducible":
            result = enumerate_via_irreducibles(target)
        else:
            result = semigroups_with_pseudo_frobenius(
                target, workers=args.threads, time_budget=args.time_budget
            )
    except TimeBudgetExceeded as exc:
        _warn(f"time budget of {args.time_budget}s exhausted; output is partial")
        result = exc.partial
        code = EXIT_TIMEOUT
    if args.json:
        payload = result.to_dict(with_stats=True)
        if not args.stats:
            payload.pop("stats")
        _dump(payload)
        return code
    print(f"{result.count} numerical semigroup(s) with pseudo-Frobenius numbers {list(target.pf)}")
    for s in result:
        print(_fmt_semigroup(s))
    if args.stats:
        st = result.stats
        print(
            f"nodes={st.nodes} fail_prunes={st.fail_prunes} leaves={st.leaves} "
            f"wall_time={st.wall_time:.4f}s complete={result.complete}"
        )
    return code


def cmd_random(args) -> int:
    target = parse_pf(args.pf)
    if args.max_attempts < 1:
        raise UsageError("--max-attempts must be at least 1")
    search = random_search(target, RandomConfig(args.max_attempts, args.seed))
    outcome = search.outcome
    if isinstance(outcome, NumSemigroup):
        status, code = "found", EXIT_OK
    elif isinstance(outcome, DefinitelyEmpty):
        status, code = "empty", EXIT_OK
    else:
        status, code = "exhausted", EXIT_EXHAUSTED
    if args.json:
        payload = {"pf": list(target.pf), "status": status, "attempts": search.attempts}
        if isinstance(outcome, NumSemigroup):
            payload["semigroup"] = outcome.to_dict()
        elif isinstance(outcome, DefinitelyEmpty):
            payload["reason"] = outcome.reason
        _dump(payload)
        return code
    if isinstance(outcome, NumSemigroup):
        print(_fmt_semigroup(outcome))
    elif isinstance(outcome, DefinitelyEmpty):
        print(f"fail: no numerical semigroup has these pseudo-Frobenius numbers ({outcome.reason})")
    else:
        assert isinstance(outcome, AttemptsExhausted)
        print(f"nothing found in {outcome.attempts} attempts; increase --max-attempts")
    return code


def cmd_irreducibles(args) -> int:
    f = args.frobenius
    if f < 1:
        raise UsageError("--frobenius must be positive")
    required = _int_list(args.containing)
    found = irreducibles_containing(f, required) if required else irreducibles_with_frobenius(f)
    if args.json:
        _dump({"frobenius": f, "containing": required, "count": len(found),
               "semigroups": [s.to_dict() for s in found]})
        return EXIT_OK
    print(f"{len(found)} irreducible numerical semigroup(s) with Frobenius number {f}")
    for s in found:
        print(_fmt_semigroup(s))
    return EXIT_OK


def cmd_oracle(args) -> int:
    f = args.frobenius
    try:
        if args.group_by_pf:
            index = build_index(f, args.bound, args.cache_dir)
            groups = sorted(index.groups.items())
            total = index.total
        else:
            total = len(all_semigroups_with_frobenius(f, args.bound, args.cache_dir))
            groups = None
    except PFSemiError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        payload = {"frobenius": f, "total": total}
        if groups is not None:
            payload["groups"] = [{"pf": list(pf), "count": len(g)} for pf, g in groups]
        _dump(payload)
        return EXIT_OK
    print(f"{total} numerical semigroup(s) with Frobenius number {f}")
    if groups is not None:
        for pf, g in groups:
            print(f"{list(pf)}: {len(g)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfsemi", description="Numerical semigroups with prescribed pseudo-Frobenius numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_pf(p):
        p.add_argument("--pf", action="append", required=True,
                       help="pseudo-Frobenius candidates, comma separated; may be repeated")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("forced", help="forced gaps and elements")
    add_pf(p)
    p.add_argument("--quick", action="store_true", help="skip non-admissibility probing")
    p.add_argument("--saturate", action="store_true",
                   help="extension: repeat non-admissibility probing until nothing changes")
    p.add_argument("--picture", action="store_true", help="ASCII view of forced and free integers")
    p.set_defaults(func=cmd_forced)

    p = sub.add_parser("enumerate", help="all semigroups with the given PF set")
    add_pf(p)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--method", choices=("tree", "irreducible"), default="tree")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the tree method")
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", help="one semigroup with the given PF set, found at random")
    add_pf(p)
    p.add_argument("--max-attempts", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("irreducibles", help="irreducible semigroups with a given Frobenius number")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--containing", action="append", help="integers that must be elements")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_irreducibles)

    p = sub.add_parser("oracle", help="brute-force list of semigroups with a given Frobenius number")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--group-by-pf", action="store_true")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--cache-dir", default=None, help="defaults to $PFSEMI_CACHE_DIR")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pfsemi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
