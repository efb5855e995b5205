"""Lower bounds through the reverse language, and the state-complexity harness.

An n-state BFA for L gives a 2**n-state DFA for L^R, so
``ceil(log2 sc(L^R))`` bounds the BFA size of L from below.  For an AFA that
DFA has exactly 2**(n-1) final states, which bounds both the final and the
non-final states of the minimal DFA for L^R.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .boolfn import BooleanFunction
from .convert import bfa_reverse_dfa, bfa_to_dfa, ceil_log2, dfa_to_afa_of_reverse, dfa_to_bfa_of_reverse
from .errors import BoundCheckError, CapExceededError
from .machines import Bfa, Dfa, Mnfa, state_count
from .oracle import (
    complement_dfa,
    concat_dfa,
    function_automaton,
    left_quotient_dfa,
    minimize,
    product_dfa,
    reverse_to_dfa,
    right_quotient_dfa,
    star_dfa,
)
from .ops import Model, Operation, apply, table1_size
from .randgen import random_bfa
from .witnesses import (
    hf_concat_a,
    hf_concat_b,
    maslov_a,
    maslov_b,
    palmovsky_star,
    unary_union_k,
    unary_union_l,
)


def bsc_lower_from_counts(states: int) -> int:
    return ceil_log2(states)


def asc_lower_from_counts(states: int, finals: int) -> int:
    n = 1
    while finals > 1 << (n - 1) or states - finals > 1 << (n - 1):
        n += 1
    return n


def bsc_lower(D: Dfa) -> int:
    """Lower bound on the BFA size of L(D)."""
    return bsc_lower_from_counts(minimize(reverse_to_dfa(D)).k)


def asc_lower(D: Dfa) -> int:
    """Lower bound on the AFA size of L(D)."""
    R = minimize(reverse_to_dfa(D))
    return asc_lower_from_counts(R.k, len(R.finals))


def _subset_closure(M: Mnfa, start: frozenset[int], step) -> set[frozenset[int]]:
    seen = {start}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        for s in range(len(M.alphabet)):
            T = step(S, s)
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return seen


def check_singletons(M: Mnfa) -> bool:
    """Is every singleton reachable (as a forward image) and co-reachable (as an accepting set)?"""

    def forward(S, s):
        out = set()
        for q in S:
            out |= M.delta[s][q]
        return frozenset(out)

    def backward(S, s):
        return frozenset(q for q in range(M.k) if M.delta[s][q] & S)

    reach = _subset_closure(M, M.initials, forward)
    coreach = _subset_closure(M, M.finals, backward)
    return all(frozenset((q,)) in reach and frozenset((q,)) in coreach for q in range(M.k))


def all_bfas(n: int, alphabet: str = "ab") -> Iterable[Bfa]:
    size = 1 << (1 << n)
    fns = [BooleanFunction(n, t) for t in range(size)]
    finals_choices = [frozenset(q for q in range(1, n + 1) if bits >> (q - 1) & 1) for bits in range(1 << n)]
    cells = len(alphabet) * n
    for init in fns:
        for trans in itertools.product(fns, repeat=cells):
            delta = [trans[s * n:(s + 1) * n] for s in range(len(alphabet))]
            for finals in finals_choices:
                yield Bfa(n, tuple(alphabet), delta, init, finals)


def exhaustive_dfa_sizes(n: int = 1, alphabet: str = "ab") -> Counter:
    """Minimal-DFA sizes of every n-state BFA over the alphabet (n = 1 is instant)."""
    return Counter(minimize(bfa_to_dfa(A)).k for A in all_bfas(n, alphabet))


def search_dfa_size(n: int, target: int, trials: int, seed: int = 0, alphabet: str = "ab") -> Bfa | None:
    """Random search for an n-state BFA whose minimal DFA has ``target`` states."""
    rng = random.Random(seed)
    for _ in range(trials):
        A = random_bfa(rng, n, alphabet)
        if minimize(bfa_to_dfa(A)).k == target:
            return A
    return None


# ------------------------------------------------------------------ report

HEADER = ("operation", "model", "m", "n", "constructed", "formula", "lower", "tight")


@dataclass(frozen=True)
class BoundsRow:
    operation: str
    model: str
    m: int | None
    n: int
    constructed: int
    formula: int
    lower: int
    witness: str = field(default="", compare=False)

    @property
    def tight(self) -> bool:
        return self.constructed == self.formula == self.lower

    def cells(self) -> tuple[str, ...]:
        m = "-" if self.m is None else str(self.m)
        return (self.operation, self.model, m, str(self.n), str(self.constructed),
                str(self.formula), str(self.lower), "yes" if self.tight else "no")


@dataclass
class BoundsReport:
    rows: list[BoundsRow]
    metadata: dict = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["\t".join(HEADER)]
        lines += ["\t".join(r.cells()) for r in self.rows]
        lines += [f"# {k}: {v}" for k, v in sorted(self.metadata.items())]
        return "\n".join(lines) + "\n"

    def row(self, operation, model, m, n) -> BoundsRow:
        op, model = Operation(operation).value, Model(model).value
        for r in self.rows:
            if (r.operation, r.model, r.m, r.n) == (op, model, m, n):
                return r
        raise KeyError((op, model, m, n))


# A case yields the operands, the DFA of the reversed target language, and a label.
Case = tuple[tuple[Bfa, ...], Dfa, str]

ROW_ORDER = [
    Operation.COMPLEMENT, Operation.UNION, Operation.INTERSECTION, Operation.DIFFERENCE,
    Operation.SYMMETRIC_DIFFERENCE, Operation.STAR, Operation.REVERSAL,
    Operation.RIGHT_QUOTIENT, Operation.LEFT_QUOTIENT, Operation.CONCATENATION, Operation.SQUARE,
]

# rows with dedicated witness families; the rest use seeded random operands
WITNESSED = {
    Operation.COMPLEMENT, Operation.UNION, Operation.INTERSECTION, Operation.DIFFERENCE,
    Operation.SYMMETRIC_DIFFERENCE, Operation.STAR, Operation.CONCATENATION,
}


def _to_model(model: Model) -> Callable[[Dfa], Bfa]:
    return dfa_to_afa_of_reverse if model is Model.AFA else dfa_to_bfa_of_reverse


def _boolean_case(op: Operation, model: Model, m: int, n: int) -> Case:
    afa = model is Model.AFA
    # the (2^k - 1)-cycle goes on the operand with the larger parameter
    if m > n:
        WA, WB = unary_union_l(m, padded=afa), unary_union_k(n)
        label = f"L({m}) op K({n})"
    else:
        WA, WB = unary_union_k(m), unary_union_l(n, padded=afa)
        label = f"K({m}) op L({n})"
    if op is Operation.INTERSECTION:
        WA, WB = complement_dfa(WA), complement_dfa(WB)
        label = "complements: " + label
    elif op is Operation.DIFFERENCE:
        WB = complement_dfa(WB)
        label = "minus complement: " + label
    conv = _to_model(model)
    target = product_dfa(op.value, WA, WB)
    return (conv(WA), conv(WB)), target, label


def _random_operands(rng: random.Random, sizes, afa: bool) -> tuple[tuple[Bfa, ...], list[Dfa]]:
    while True:
        As = tuple(random_bfa(rng, k, afa=afa) for k in sizes)
        Ds = [minimize(function_automaton(A)) for A in As]
        if all(D.k > 1 for D in Ds):
            return As, Ds


def witness_case(op: Operation | str, model: Model | str, m: int | None, n: int, seed: int = 0) -> Case:
    """Operands and reversed-target DFA for one report row, built as each lower-bound argument prescribes."""
    op, model = Operation(op), Model(model)
    afa = model is Model.AFA
    conv = _to_model(model)
    if op is Operation.COMPLEMENT:
        W = unary_union_k(n)
        return (conv(W),), complement_dfa(W), f"K({n})"
    if op in (Operation.UNION, Operation.INTERSECTION, Operation.DIFFERENCE,
              Operation.SYMMETRIC_DIFFERENCE):
        return _boolean_case(op, model, m, n)
    if op is Operation.CONCATENATION:
        if afa:
            K, L, label = hf_concat_a(1 << n), hf_concat_b(1 << m), "half-final"
        else:
            K, L, label = maslov_a(1 << n), maslov_b(1 << m), "Maslov"
        return (conv(L), conv(K)), concat_dfa(K, L), f"{label} K({1 << n}) L({1 << m}) reversed"
    if op is Operation.STAR:
        P = palmovsky_star(1 << n)
        return (dfa_to_afa_of_reverse(P),), star_dfa(P), f"Palmovsky({1 << n}) reversed"

    rng = random.Random(f"{seed}:{op.value}:{model.value}:{m}:{n}")
    if op is Operation.SQUARE:
        (A,), (D,) = _random_operands(rng, [n], afa)
        R = reverse_to_dfa(D)
        return (A,), concat_dfa(R, R), f"random(seed={seed})"
    if op is Operation.REVERSAL:
        (A,), (D,) = _random_operands(rng, [n], afa)
        return (A,), D, f"random(seed={seed})"
    (K, L), (DK, DL) = _random_operands(rng, [m, n], afa)
    if op is Operation.RIGHT_QUOTIENT:
        target = right_quotient_dfa(DK, DL)
    else:
        target = left_quotient_dfa(DK, DL)
    return (K, L), reverse_to_dfa(target), f"random(seed={seed})"


def bounds_row(op: Operation | str, model: Model | str, m: int | None, n: int, seed: int = 0) -> BoundsRow:
    op, model = Operation(op), Model(model)
    operands, target_rev, label = witness_case(op, model, m, n, seed)
    result = apply(op, model, *operands)
    # the construction must accept exactly the target language
    if minimize(bfa_reverse_dfa(result)) != minimize(target_rev):
        raise BoundCheckError(f"{op.value}/{model.value} at m={m}, n={n}: language mismatch")
    R = minimize(target_rev)
    if model is Model.AFA:
        lower = asc_lower_from_counts(R.k, len(R.finals))
    else:
        lower = bsc_lower_from_counts(R.k)
    return BoundsRow(op.value, model.value, m if op.binary else None, n,
                     state_count(result), table1_size(op, model, m or 0, n), lower, label)


DEFAULT_MAX = 3
STAR_MAX = 3


def bounds_report(operations: Iterable[Operation | str] | None = None, max_m: int = DEFAULT_MAX,
                  max_n: int = DEFAULT_MAX, seed: int = 0, min_size: int = 2) -> BoundsReport:
    """Measure every requested row for m, n in min_size..max."""
    if max_m > 4 or max_n > 4:
        raise CapExceededError("bounds_report is capped at m, n <= 4")
    ops = ROW_ORDER if operations is None else [Operation(o) for o in operations]
    rows = []
    for op in sorted(set(ops), key=ROW_ORDER.index):
        for model in (Model.BFA, Model.AFA):
            ns = range(min_size, (min(max_n, STAR_MAX) if op is Operation.STAR else max_n) + 1)
            ms = range(min_size, max_m + 1) if op.binary else [None]
            for m, n in itertools.product(ms, ns):
                rows.append(bounds_row(op, model, m, n, seed))
    meta = {"max_m": max_m, "max_n": max_n, "seed": seed, "star_max_n": STAR_MAX,
            "witnessed": ",".join(o.value for o in ROW_ORDER if o in WITNESSED)}
    return BoundsReport(rows, meta)
