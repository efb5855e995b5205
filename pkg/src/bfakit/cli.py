"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
4 internal bound-check failure.
"""

from __future__ import annotations

import argparse
import sys

from .boolfn import ExpressionError
from .complexity import DEFAULT_MAX, bounds_report
from .convert import (
    bfa_to_afa,
    bfa_to_dfa,
    bfa_to_mnfa,
    determinize,
    dfa_to_afa_of_reverse,
    dfa_to_bfa_of_reverse,
    mnfa_to_nfa,
)
from .errors import AutomatonError, BoundCheckError, PreconditionError
from .fileformat import FormatError, parse_automaton, print_automaton
from .machines import Bfa, Dfa, Mnfa, accepts, dfa_as_mnfa, embed_dfa, embed_mnfa, state_count
from .oracle import minimize
from .ops import Model, Operation, apply
from .witnesses import WITNESSES

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BOUND = range(5)

OP_ALIASES = {
    "comp": "complement",
    "inter": "intersection",
    "diff": "difference",
    "xor": "symmetric_difference",
    "symdiff": "symmetric_difference",
    "concat": "concatenation",
    "rev": "reversal",
    "lq": "left_quotient",
    "rq": "right_quotient",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str | None):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_automaton(text)


def _as_bfa(X) -> Bfa:
    if isinstance(X, Bfa):
        return X
    if isinstance(X, Dfa):
        return embed_dfa(X)
    return embed_mnfa(X)


def _as_dfa(X) -> Dfa:
    if isinstance(X, Bfa):
        return bfa_to_dfa(X)
    if isinstance(X, Mnfa):
        return determinize(X)
    return X


def _emit(X) -> None:
    sys.stdout.write(print_automaton(X))


def cmd_witness(args) -> None:
    if args.id not in WITNESSES:
        raise UsageError(f"unknown witness {args.id!r}; choose from {', '.join(WITNESSES)}")
    size = args.n if args.n is not None else args.m
    if size is None:
        raise UsageError("witness needs --n or --m")
    _emit(WITNESSES[args.id](size))


def cmd_apply(args) -> None:
    name = OP_ALIASES.get(args.op, args.op)
    try:
        op = Operation(name)
    except ValueError:
        raise UsageError(f"unknown operation {args.op!r}") from None
    if op.binary and args.B is None:
        raise UsageError(f"{op.value} needs two automata")
    if not op.binary and args.B is not None:
        raise UsageError(f"{op.value} takes one automaton")
    A = _as_bfa(_read(args.A))
    B = _as_bfa(_read(args.B)) if op.binary else None
    _emit(apply(op, Model(args.model), A, B))


def cmd_convert(args) -> None:
    X = _read(args.A)
    target = args.target
    if target == "to-mnfa":
        _emit(bfa_to_mnfa(_as_bfa(X)) if not isinstance(X, Mnfa) else X)
    elif target == "to-nfa":
        M = X if isinstance(X, Mnfa) else dfa_as_mnfa(X) if isinstance(X, Dfa) else bfa_to_mnfa(X)
        _emit(M if len(M.initials) == 1 else mnfa_to_nfa(M))
    elif target == "to-dfa":
        _emit(_as_dfa(X))
    elif target == "to-bfa-of-reverse":
        _emit(dfa_to_bfa_of_reverse(_as_dfa(X)))
    elif target == "to-afa-of-reverse":
        try:
            A = dfa_to_afa_of_reverse(_as_dfa(X))
        except PreconditionError as e:
            raise BoundCheckError(f"half-final padding impossible: {e}") from None
        _emit(A)
    else:
        _emit(bfa_to_afa(_as_bfa(X)))


def cmd_minimize(args) -> None:
    _emit(minimize(_as_dfa(_read(args.A))))


def cmd_equiv(args) -> None:
    D1, D2 = _as_dfa(_read(args.A)), _as_dfa(_read(args.B))
    if D1.alphabet != D2.alphabet:
        raise AutomatonError(f"alphabet mismatch: {','.join(D1.alphabet)} vs {','.join(D2.alphabet)}")
    print("equivalent" if minimize(D1) == minimize(D2) else "different")


def cmd_accept(args) -> None:
    print("accepted" if accepts(_read(args.A), args.word) else "rejected")


def cmd_states(args) -> None:
    print(state_count(_read(args.A)))


def cmd_bounds_table(args) -> None:
    ops = None
    if args.ops:
        try:
            ops = [Operation(OP_ALIASES.get(o, o)) for o in args.ops.split(",") if o]
        except ValueError as e:
            raise UsageError(str(e)) from None
    report = bounds_report(ops, max_m=args.max_m, max_n=args.max_n, seed=args.seed)
    sys.stdout.write(report.to_tsv())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bfakit", description="Boolean and alternating finite automata toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("witness", help="print a witness automaton")
    s.add_argument("id", help=", ".join(WITNESSES))
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("apply", help="run a regular-operation construction")
    s.add_argument("op")
    s.add_argument("--model", choices=[m.value for m in Model], default="bfa")
    s.add_argument("A", nargs="?")
    s.add_argument("B", nargs="?")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("convert", help="convert between machine models")
    s.add_argument("target", choices=["to-mnfa", "to-nfa", "to-dfa", "to-bfa-of-reverse",
                                      "to-afa-of-reverse", "to-afa"])
    s.add_argument("A", nargs="?")
    s.set_defaults(func=cmd_convert)

    for name, func, help_ in [("minimize", cmd_minimize, "print the minimal DFA"),
                              ("states", cmd_states, "print the number of states")]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("A", nargs="?")
        s.set_defaults(func=func)

    s = sub.add_parser("equiv", help="compare two languages")
    s.add_argument("A")
    s.add_argument("B")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("accept", help="test membership of a word ('' is the empty word)")
    s.add_argument("A")
    s.add_argument("word")
    s.set_defaults(func=cmd_accept)

    s = sub.add_parser("bounds-table", help="measure state-complexity rows as TSV")
    s.add_argument("--max-m", type=int, default=DEFAULT_MAX)
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX)
    s.add_argument("--ops", help="comma-separated operations")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bounds_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # options may sit between the operation and its files: `apply concat --model afa A B`
    if args.command == "apply" and extra and not any(x.startswith("-") and x != "-" for x in extra):
        files = [f for f in (args.A, args.B) if f is not None] + extra
        if len(files) > 2:
            parser.error(f"unrecognized arguments: {' '.join(files[2:])}")
        args.A, args.B = (files + [None, None])[:2]
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        args.func(args)
    except UsageError as e:
        print(f"bfakit: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, ExpressionError) as e:
        print(f"bfakit: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except BoundCheckError as e:
        print(f"bfakit: bound check failed: {e}", file=sys.stderr)
        return EXIT_BOUND
    except AutomatonError as e:
        print(f"bfakit: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
