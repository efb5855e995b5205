"""Machine models: Boolean, nondeterministic (multi-initial) and deterministic automata.

BFA states are numbered 1..n so that state ``i`` is the variable ``q_i``.
MNFA and DFA states are numbered 0..k-1.  Transition tables are stored per
symbol, in alphabet order: ``delta[s][q]`` is the target for the ``s``-th
symbol and state ``q`` (for a BFA, state ``q+1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .boolfn import (
    BooleanFunction,
    assignment_index,
    classify,
    constant,
    disjunction,
    parse_expr,
    permute_variables,
    substitution_index,
    variable,
)
from .errors import AutomatonError, UnknownSymbolError

Word = Union[str, Sequence[str]]


def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if not alphabet:
        raise AutomatonError("alphabet must be non-empty")
    if len(set(alphabet)) != len(alphabet):
        raise AutomatonError(f"duplicate symbols in alphabet {alphabet}")
    return alphabet


class _Symbols:
    alphabet: tuple[str, ...]

    def symbol_index(self, a: str) -> int:
        try:
            return self.alphabet.index(a)
        except ValueError:
            raise UnknownSymbolError(a, self.alphabet) from None

    def _word(self, w: Word) -> list[int]:
        return [self.symbol_index(a) for a in w]


@dataclass(frozen=True, eq=True)
class Bfa(_Symbols):
    """Boolean finite automaton ``(Q, alphabet, delta, init, finals)``."""

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[BooleanFunction, ...], ...]
    init: BooleanFunction
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.n < 1:
            raise AutomatonError("a BFA needs at least one state")
        if len(self.delta) != len(self.alphabet):
            raise AutomatonError("one transition row per symbol required")
        for row in self.delta:
            if len(row) != self.n:
                raise AutomatonError("transition row must cover every state")
            for f in row:
                if f.arity != self.n:
                    raise AutomatonError(f"transition function of arity {f.arity}, expected {self.n}")
        if self.init.arity != self.n:
            raise AutomatonError(f"initial function of arity {self.init.arity}, expected {self.n}")
        if not self.finals <= set(range(1, self.n + 1)):
            raise AutomatonError(f"final states {sorted(self.finals)} out of range 1..{self.n}")

    @classmethod
    def build(cls, n, alphabet, transitions: Mapping, init, finals) -> Bfa:
        """Build from ``{(state, symbol): function-or-expression}``."""
        alphabet = _check_alphabet(alphabet)

        def fn(x):
            return parse_expr(x, n) if isinstance(x, str) else x

        delta = []
        for a in alphabet:
            row = []
            for q in range(1, n + 1):
                if (q, a) not in transitions:
                    raise AutomatonError(f"missing transition for state {q} on {a!r}")
                row.append(fn(transitions[q, a]))
            delta.append(row)
        return cls(n, alphabet, delta, fn(init), frozenset(finals))

    def transition(self, state: int, symbol: str) -> BooleanFunction:
        return self.delta[self.symbol_index(symbol)][state - 1]

    @property
    def finality_vector(self) -> tuple[int, ...]:
        return tuple(int(i in self.finals) for i in range(1, self.n + 1))

    @property
    def final_index(self) -> int:
        """Assignment index of the finality vector."""
        return assignment_index(self.finality_vector)

    @cached_property
    def successor_maps(self) -> tuple[np.ndarray, ...]:
        """Per symbol, the map u -> index of (q_1.a(u), ..., q_n.a(u))."""
        return tuple(substitution_index(row) for row in self.delta)


@dataclass(frozen=True, eq=True)
class Mnfa(_Symbols):
    """Nondeterministic automaton with a set of initial states."""

    k: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(t) for t in row) for row in self.delta)
        )
        states = frozenset(range(self.k))
        if len(self.delta) != len(self.alphabet):
            raise AutomatonError("one transition row per symbol required")
        for row in self.delta:
            if len(row) != self.k:
                raise AutomatonError("transition row must cover every state")
            for targets in row:
                if not targets <= states:
                    raise AutomatonError(f"transition target out of range in {sorted(targets)}")
        if not self.initials <= states or not self.finals <= states:
            raise AutomatonError("initial or final state out of range")

    @classmethod
    def build(cls, k, alphabet, transitions: Mapping, initials, finals) -> Mnfa:
        """Build from ``{(state, symbol): iterable of states}``; missing entries mean the empty set."""
        alphabet = _check_alphabet(alphabet)
        delta = [[frozenset(transitions.get((q, a), ())) for q in range(k)] for a in alphabet]
        return cls(k, alphabet, delta, frozenset(initials), frozenset(finals))

    def successors(self, state: int, symbol: str) -> frozenset[int]:
        return self.delta[self.symbol_index(symbol)][state]

    @cached_property
    def edge_arrays(self) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
        out = []
        for row in self.delta:
            src = [q for q, ts in enumerate(row) for _ in ts]
            dst = [t for ts in row for t in sorted(ts)]
            out.append((np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)))
        return tuple(out)


@dataclass(frozen=True, eq=True)
class Dfa(_Symbols):
    """Complete deterministic automaton."""

    k: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(int(t) for t in row) for row in self.delta))
        if self.k < 1:
            raise AutomatonError("a DFA needs at least one state")
        if len(self.delta) != len(self.alphabet):
            raise AutomatonError("one transition row per symbol required")
        for row in self.delta:
            if len(row) != self.k:
                raise AutomatonError("DFA must be complete: one target per state and symbol")
            if any(not 0 <= t < self.k for t in row):
                raise AutomatonError("transition target out of range")
        if not 0 <= self.initial < self.k:
            raise AutomatonError(f"initial state {self.initial} out of range")
        if not self.finals <= set(range(self.k)):
            raise AutomatonError("final state out of range")

    @classmethod
    def build(cls, k, alphabet, transitions: Mapping, initial, finals) -> Dfa:
        alphabet = _check_alphabet(alphabet)
        delta = []
        for a in alphabet:
            row = []
            for q in range(k):
                if (q, a) not in transitions:
                    raise AutomatonError(f"missing transition for state {q} on {a!r}")
                row.append(transitions[q, a])
            delta.append(row)
        return cls(k, alphabet, delta, initial, frozenset(finals))

    def step(self, state: int, symbol: str) -> int:
        return self.delta[self.symbol_index(symbol)][state]

    @cached_property
    def arrays(self) -> np.ndarray:
        """Transition table as an int array of shape (|alphabet|, k)."""
        return np.array(self.delta, dtype=np.int64).reshape(len(self.alphabet), self.k)


# ----------------------------------------------------------------- semantics

def bfa_step(A: Bfa, g: BooleanFunction, a: str) -> BooleanFunction:
    """One letter of the transition extension: g(q_1.a, ..., q_n.a)."""
    s = A.symbol_index(a)
    if g.arity != A.n:
        raise AutomatonError(f"function of arity {g.arity} for a {A.n}-state BFA")
    return BooleanFunction.from_bits(g.bits()[A.successor_maps[s]])


def bfa_run(A: Bfa, w: Word, g: BooleanFunction | None = None) -> BooleanFunction:
    """g.w for the whole word, folding left to right (g defaults to the initial function)."""
    idx = A._word(w)
    bits = (A.init if g is None else g).bits()
    for s in idx:
        bits = bits[A.successor_maps[s]]
    return BooleanFunction.from_bits(bits)


def bfa_accepts(A: Bfa, w: Word) -> bool:
    return bool(bfa_run(A, w).at(A.final_index))


def mnfa_image(M: Mnfa, states: Iterable[int], a: str) -> frozenset[int]:
    row = M.delta[M.symbol_index(a)]
    out: set[int] = set()
    for q in states:
        out |= row[q]
    return frozenset(out)


def mnfa_accepts(M: Mnfa, w: Word) -> bool:
    current = M.initials
    for a in w:
        current = mnfa_image(M, current, a)
    return bool(current & M.finals)


def dfa_run(D: Dfa, w: Word) -> int:
    q = D.initial
    for s in D._word(w):
        q = D.delta[s][q]
    return q


def dfa_accepts(D: Dfa, w: Word) -> bool:
    return dfa_run(D, w) in D.finals


def accepts(X: Bfa | Mnfa | Dfa, w: Word) -> bool:
    if isinstance(X, Bfa):
        return bfa_accepts(X, w)
    if isinstance(X, Mnfa):
        return mnfa_accepts(X, w)
    return dfa_accepts(X, w)


def state_count(X: Bfa | Mnfa | Dfa) -> int:
    return X.n if isinstance(X, Bfa) else X.k


# ------------------------------------------------------------ classification

class MachineClass(NamedTuple):
    bfa: bool
    afa: bool
    mnfa: bool
    nfa: bool
    dfa: bool


def classify_machine(X: Bfa | Mnfa | Dfa) -> MachineClass:
    """Which models of the hierarchy X belongs to, as literally as its form allows.

    For a BFA: AFA iff the initial function is exactly q1; MNFA iff the
    initial function and all transitions are disjunctions of variables;
    NFA iff moreover the initial function is q1; DFA iff moreover every
    transition is a single variable.
    """
    if isinstance(X, Dfa):
        return MachineClass(True, True, True, True, True)
    if isinstance(X, Mnfa):
        nfa = len(X.initials) == 1
        dfa = nfa and all(len(t) == 1 for row in X.delta for t in row)
        return MachineClass(True, nfa, True, nfa, dfa)
    init = classify(X.init)
    afa = init.projection == 1
    forms = [classify(f) for row in X.delta for f in row]
    mnfa = init.disjunction is not None and all(c.disjunction is not None for c in forms)
    nfa = mnfa and afa
    dfa = nfa and all(c.projection is not None for c in forms)
    return MachineClass(True, afa, mnfa, nfa, dfa)


def is_afa(A: Bfa) -> bool:
    return classify(A.init).projection == 1


# ---------------------------------------------------------- structural tools

def reverse_mnfa(M: Mnfa) -> Mnfa:
    """Swap initial and final sets and invert every edge."""
    delta = []
    for row in M.delta:
        rev: list[set[int]] = [set() for _ in range(M.k)]
        for q, targets in enumerate(row):
            for t in targets:
                rev[t].add(q)
        delta.append(rev)
    return Mnfa(M.k, M.alphabet, delta, M.finals, M.initials)


def mnfa_as_dfa(M: Mnfa) -> Dfa:
    """The same automaton as a Dfa; requires one initial state and total singleton transitions."""
    if len(M.initials) != 1 or any(len(t) != 1 for row in M.delta for t in row):
        raise AutomatonError("MNFA is not deterministic and complete")
    delta = [[next(iter(t)) for t in row] for row in M.delta]
    return Dfa(M.k, M.alphabet, delta, next(iter(M.initials)), M.finals)


def is_reverse_deterministic(M: Mnfa) -> bool:
    R = reverse_mnfa(M)
    return len(R.initials) == 1 and all(len(t) == 1 for row in R.delta for t in row)


def dfa_as_mnfa(D: Dfa) -> Mnfa:
    delta = [[frozenset((t,)) for t in row] for row in D.delta]
    return Mnfa(D.k, D.alphabet, delta, frozenset((D.initial,)), D.finals)


def embed_mnfa(M: Mnfa) -> Bfa:
    """The MNFA as a BFA in disjunction form; state q becomes q_{q+1}."""
    n = M.k
    if n < 1:
        raise AutomatonError("cannot embed an MNFA with no states")
    delta = [[disjunction((t + 1 for t in targets), n) for targets in row] for row in M.delta]
    return Bfa(n, M.alphabet, delta, disjunction((q + 1 for q in M.initials), n),
               frozenset(q + 1 for q in M.finals))


def embed_dfa(D: Dfa) -> Bfa:
    """The DFA as an AFA, renumbered so that its initial state is q1."""
    order = [D.initial] + [q for q in range(D.k) if q != D.initial]
    pos = {q: i + 1 for i, q in enumerate(order)}
    n = D.k
    delta = [[variable(pos[row[q]], n) for q in order] for row in D.delta]
    return Bfa(n, D.alphabet, delta, variable(1, n), frozenset(pos[q] for q in D.finals))


def renumber_bfa(A: Bfa, order: Sequence[int]) -> Bfa:
    """Permute states: new state i is old state ``order[i-1]``."""
    if sorted(order) != list(range(1, A.n + 1)):
        raise AutomatonError("order must be a permutation of 1..n")
    new_of = {old: new for new, old in enumerate(order, start=1)}
    perm = [new_of[i] for i in range(1, A.n + 1)]
    delta = [[permute_variables(row[old - 1], perm) for old in order] for row in A.delta]
    return Bfa(A.n, A.alphabet, delta, permute_variables(A.init, perm),
               frozenset(new_of[q] for q in A.finals))


def empty_bfa(alphabet: Sequence[str], accept_epsilon: bool = False) -> Bfa:
    """A one-state BFA for the empty language (or for {epsilon})."""
    alphabet = _check_alphabet(alphabet)
    zero = constant(0, 1)
    return Bfa(1, alphabet, [[zero] for _ in alphabet], variable(1, 1),
               frozenset({1}) if accept_epsilon else frozenset())
