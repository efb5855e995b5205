"""Line-oriented text format for a single automaton.

    # Example: a 2-state BFA
    type: bfa
    states: 2
    alphabet: a,b
    initial: q1&q2
    final: 1
    trans: q1,a = q1|q2
    ...

BFA states are ``q1..qn`` (``final`` may list them bare or with the ``q``);
MNFA and DFA states are ``0..k-1`` and a transition lists target states,
with an empty right side meaning no successor.
"""

from __future__ import annotations

import re

from .boolfn import ExpressionError, parse_expr, print_expr
from .errors import AutomatonError
from .machines import Bfa, Dfa, Mnfa

HEADER_KEYS = ("type", "states", "alphabet", "initial", "final")
TYPES = ("bfa", "mnfa", "dfa")
_SYMBOL = re.compile(r"[A-Za-z0-9]$")


class FormatError(AutomatonError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class _Line:
    def __init__(self, number: int, raw: str):
        self.number = number
        self.raw = raw

    def error(self, message: str, fragment: str | None = None, offset: int = 0) -> FormatError:
        column = None
        if fragment is not None:
            pos = self.raw.find(fragment)
            column = (pos if pos >= 0 else 0) + offset + 1
        return FormatError(message, self.number, column)


def _state_list(text: str, line: _Line, bfa: bool, n: int) -> list[int]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        body = item[1:] if bfa and item.startswith("q") else item
        if not body.isdigit():
            raise line.error(f"bad state {item!r}", item)
        q = int(body)
        lo, hi = (1, n) if bfa else (0, n - 1)
        if not lo <= q <= hi:
            raise line.error(f"state {item} out of range {lo}..{hi}", item)
        out.append(q)
    return out


def parse_automaton(text: str) -> Bfa | Mnfa | Dfa:
    header: dict[str, tuple[str, _Line]] = {}
    trans: list[tuple[str, str, _Line]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        line = _Line(number, raw)
        key, sep, value = content.partition(":")
        key = key.strip()
        if not sep:
            raise line.error("expected 'key: value'", content.strip())
        if key == "trans":
            lhs, eq, rhs = value.partition("=")
            if not eq:
                raise line.error("transition needs '='", value.strip())
            trans.append((lhs.strip(), rhs.strip(), line))
        elif key in HEADER_KEYS:
            if key in header:
                raise line.error(f"duplicate {key!r} line", key)
            header[key] = (value.strip(), line)
        else:
            raise line.error(f"unknown key {key!r}", key)
    for key in HEADER_KEYS:
        if key not in header:
            raise FormatError(f"missing {key!r} line")

    kind, kline = header["type"]
    if kind not in TYPES:
        raise kline.error(f"type must be one of {', '.join(TYPES)}", kind)
    size_text, sline = header["states"]
    if not size_text.isdigit() or int(size_text) < 1:
        raise sline.error("states must be a positive integer", size_text or "states")
    n = int(size_text)
    alpha_text, aline = header["alphabet"]
    alphabet = tuple(s.strip() for s in alpha_text.split(","))
    for s in alphabet:
        if not _SYMBOL.match(s):
            raise aline.error(f"symbol {s!r} must be a single ASCII letter or digit", s or "alphabet")
    if len(set(alphabet)) != len(alphabet):
        raise aline.error("duplicate symbol in alphabet", alpha_text)
    bfa = kind == "bfa"

    final_text, fline = header["final"]
    finals = frozenset(_state_list(final_text, fline, bfa, n))

    targets: dict[tuple[int, str], tuple[str, _Line]] = {}
    for lhs, rhs, line in trans:
        state_text, comma, symbol = lhs.partition(",")
        state_text, symbol = state_text.strip(), symbol.strip()
        if not comma:
            raise line.error("transition left side must be 'state,symbol'", lhs)
        (q,) = _state_list(state_text, line, bfa, n) or [None]
        if q is None:
            raise line.error("missing state", lhs)
        if symbol not in alphabet:
            raise line.error(f"symbol {symbol!r} not in alphabet {','.join(alphabet)}", symbol)
        if (q, symbol) in targets:
            raise line.error(f"duplicate transition for {state_text},{symbol}", lhs)
        targets[q, symbol] = (rhs, line)

    init_text, iline = header["initial"]
    if bfa:
        def expr(text: str, line: _Line):
            try:
                return parse_expr(text, n)
            except ExpressionError as e:
                col = None if e.pos is None else e.pos
                raise line.error(str(e), text, col or 0) from None

        for q in range(1, n + 1):
            for a in alphabet:
                if (q, a) not in targets:
                    raise FormatError(f"missing transition for q{q},{a}")
        delta = [[expr(*targets[q, a]) for q in range(1, n + 1)] for a in alphabet]
        return Bfa(n, alphabet, delta, expr(init_text, iline), finals)

    initials = _state_list(init_text, iline, False, n)
    delta = [[frozenset(_state_list(*targets[q, a], False, n)) if (q, a) in targets else frozenset()
              for q in range(n)] for a in alphabet]
    if kind == "mnfa":
        return Mnfa(n, alphabet, delta, frozenset(initials), finals)
    if len(initials) != 1:
        raise iline.error("a DFA has exactly one initial state", init_text or "initial")
    rows = []
    for s, a in enumerate(alphabet):
        row = []
        for q in range(n):
            if (q, a) not in targets:
                raise FormatError(f"missing transition for {q},{a}")
            if len(delta[s][q]) != 1:
                rhs, line = targets[q, a]
                raise line.error("a DFA transition has exactly one target", rhs or "=")
            (t,) = delta[s][q]
            row.append(t)
        rows.append(row)
    return Dfa(n, alphabet, rows, initials[0], finals)


def _states(states, prefix: str = "") -> str:
    return ",".join(f"{prefix}{q}" for q in sorted(states))


def print_automaton(X: Bfa | Mnfa | Dfa) -> str:
    """Canonical text: header, then transitions by state and then symbol."""
    alphabet = ",".join(X.alphabet)
    if isinstance(X, Bfa):
        lines = ["type: bfa", f"states: {X.n}", f"alphabet: {alphabet}",
                 f"initial: {print_expr(X.init)}", f"final: {_states(X.finals)}"]
        for q in range(1, X.n + 1):
            for s, a in enumerate(X.alphabet):
                lines.append(f"trans: q{q},{a} = {print_expr(X.delta[s][q - 1])}")
    elif isinstance(X, Mnfa):
        lines = ["type: mnfa", f"states: {X.k}", f"alphabet: {alphabet}",
                 f"initial: {_states(X.initials)}", f"final: {_states(X.finals)}"]
        for q in range(X.k):
            for s, a in enumerate(X.alphabet):
                lines.append(f"trans: {q},{a} = {_states(X.delta[s][q])}".rstrip())
    elif isinstance(X, Dfa):
        lines = ["type: dfa", f"states: {X.k}", f"alphabet: {alphabet}",
                 f"initial: {X.initial}", f"final: {_states(X.finals)}"]
        for q in range(X.k):
            for s, a in enumerate(X.alphabet):
                lines.append(f"trans: {q},{a} = {X.delta[s][q]}")
    else:
        raise TypeError(f"cannot print {type(X).__name__}")
    return "\n".join(line.rstrip() for line in lines) + "\n"
