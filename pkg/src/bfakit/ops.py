"""Regular operations on BFAs and AFAs.

Every constructor checks the size of its result against the exact bound
it is meant to achieve and raises :class:`BoundCheckError` otherwise.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Callable

from .boolfn import (
    BooleanFunction,
    combine,
    constant,
    disjunction,
    negate,
    permute_variables,
)
from .convert import (
    bfa_reverse_dfa,
    bfa_to_afa,
    bfa_to_mnfa,
    determinize,
    dfa_to_afa_of_reverse,
    pad_dfa,
)
from .errors import AutomatonError, BoundCheckError, CapExceededError, PreconditionError
from .machines import Bfa, Dfa, Mnfa, bfa_step, embed_dfa, embed_mnfa, is_afa


class Operation(str, enum.Enum):
    COMPLEMENT = "complement"
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric_difference"
    CONCATENATION = "concatenation"
    SQUARE = "square"
    STAR = "star"
    REVERSAL = "reversal"
    LEFT_QUOTIENT = "left_quotient"
    RIGHT_QUOTIENT = "right_quotient"

    @property
    def binary(self) -> bool:
        return self not in (Operation.COMPLEMENT, Operation.SQUARE, Operation.STAR, Operation.REVERSAL)


class Model(str, enum.Enum):
    BFA = "bfa"
    AFA = "afa"


BOOLEAN_OPS = {
    Operation.UNION: "or",
    Operation.INTERSECTION: "and",
    Operation.DIFFERENCE: "diff",
    Operation.SYMMETRIC_DIFFERENCE: "xor",
}


def _expect(result: Bfa, size: int, what: str) -> Bfa:
    if result.n != size:
        raise BoundCheckError(f"{what}: built {result.n} states, bound is {size}")
    return result


def _same_alphabet(A: Bfa, B: Bfa) -> None:
    if A.alphabet != B.alphabet:
        raise AutomatonError(f"alphabet mismatch: {','.join(A.alphabet)} vs {','.join(B.alphabet)}")


def _require_afa(*automata: Bfa) -> None:
    for A in automata:
        if not is_afa(A):
            raise PreconditionError("operation expects an AFA (initial function q1)")


def _shift(f: BooleanFunction, offset: int, arity: int) -> BooleanFunction:
    """Re-index q_i as q_{i+offset} inside a function of the given arity."""
    return permute_variables(f, range(offset + 1, offset + f.arity + 1), arity)


# ------------------------------------------------------------- complement

def complement_bfa(A: Bfa) -> Bfa:
    """Negate the initial function; substitution commutes with negation."""
    return _expect(Bfa(A.n, A.alphabet, A.delta, negate(A.init), A.finals), A.n, "complement")


def dual(f: BooleanFunction) -> BooleanFunction:
    """u -> not f(not u)."""
    return BooleanFunction.from_bits(~f.bits()[::-1])


def complement_afa(A: Bfa) -> Bfa:
    """Dualize every transition and complement the finals; q1 is self-dual."""
    _require_afa(A)
    delta = [[dual(f) for f in row] for row in A.delta]
    finals = frozenset(range(1, A.n + 1)) - A.finals
    return _expect(Bfa(A.n, A.alphabet, delta, A.init, finals), A.n, "complement")


# ------------------------------------------------------- Boolean operations

def boolean_op_bfa(op: Operation | str, A: Bfa, B: Bfa) -> Bfa:
    """Disjoint union of the two BFAs with the initial functions combined by ``op``."""
    op = Operation(op)
    _same_alphabet(A, B)
    n = A.n + B.n
    delta = [
        [_shift(f, 0, n) for f in ra] + [_shift(f, A.n, n) for f in rb]
        for ra, rb in zip(A.delta, B.delta)
    ]
    ga, gb = _shift(A.init, 0, n), _shift(B.init, A.n, n)
    kind = BOOLEAN_OPS[op]
    if kind == "diff":
        init = combine("and", ga, negate(gb))
    else:
        init = combine(kind, ga, gb)
    finals = set(A.finals) | {q + A.n for q in B.finals}
    return _expect(Bfa(n, A.alphabet, delta, init, frozenset(finals)), n, op.value)


def _full_product(D1: Dfa, D2: Dfa, final: Callable[[bool, bool], bool]) -> Dfa:
    # every pair, reachable or not: the half-final count depends on it
    k1 = D1.k
    delta = [
        [r1[p % k1] + k1 * r2[p // k1] for p in range(k1 * D2.k)]
        for r1, r2 in zip(D1.delta, D2.delta)
    ]
    finals = frozenset(
        p for p in range(k1 * D2.k) if final(p % k1 in D1.finals, p // k1 in D2.finals)
    )
    return Dfa(k1 * D2.k, D1.alphabet, delta, D1.initial + k1 * D2.initial, finals)


def boolean_op_afa(op: Operation | str, A: Bfa, B: Bfa) -> Bfa:
    """m+n+1 states via the BFA construction; symmetric difference in m+n states.

    For symmetric difference the DFAs of both reverses have exactly half of
    their states final, so does their full xor-product, and converting that
    product back gives an (m+n)-state AFA.
    """
    op = Operation(op)
    _require_afa(A, B)
    _same_alphabet(A, B)
    if op is not Operation.SYMMETRIC_DIFFERENCE:
        return _expect(bfa_to_afa(boolean_op_bfa(op, A, B)), A.n + B.n + 1, op.value)
    P = _full_product(bfa_reverse_dfa(A), bfa_reverse_dfa(B), lambda x, y: x != y)
    if 2 * len(P.finals) != P.k:
        raise BoundCheckError("xor product of half-final DFAs is not half final")
    return _expect(dfa_to_afa_of_reverse(P, A.n + B.n), A.n + B.n, op.value)


# ---------------------------------------------------------- concatenation

def concat_bfa(A: Bfa, B: Bfa) -> Bfa:
    """2**m + n states: the MNFA of A followed by B.

    The unique final state of the MNFA additionally injects ``g_B . a``.
    If A accepts the empty word the initial function also includes g_B; if
    B accepts it, the MNFA's final state is final in the result.
    """
    _same_alphabet(A, B)
    M = bfa_to_mnfa(A)
    (fm,) = M.finals
    k = M.k
    n = k + B.n
    delta = []
    for a, mrow, brow in zip(A.alphabet, M.delta, B.delta):
        row = []
        for q, targets in enumerate(mrow):
            f = disjunction((t + 1 for t in targets), n)
            if q == fm:
                f = f | _shift(bfa_step(B, B.init, a), k, n)
            row.append(f)
        row += [_shift(f, k, n) for f in brow]
        delta.append(row)
    init = disjunction((q + 1 for q in M.initials), n)
    if fm in M.initials:
        init = init | _shift(B.init, k, n)
    finals = {q + k for q in B.finals}
    if B.init.at(B.final_index):
        finals.add(fm + 1)
    return _expect(Bfa(n, A.alphabet, delta, init, frozenset(finals)), k + B.n, "concatenation")


def concat_afa(A: Bfa, B: Bfa) -> Bfa:
    _require_afa(A, B)
    return _expect(bfa_to_afa(concat_bfa(A, B)), (1 << A.n) + B.n + 1, "concatenation")


def square_bfa(A: Bfa) -> Bfa:
    return concat_bfa(A, A)


def square_afa(A: Bfa) -> Bfa:
    return concat_afa(A, A)


# ------------------------------------------------------ star and reversal

STAR_MAX_N = 3


def _star_mnfa(D: Dfa) -> Mnfa:
    """Kleene star of a DFA as an MNFA (fresh start state only when needed)."""
    restart = lambda t: {t, D.initial} if t in D.finals else {t}  # noqa: E731
    rows = [[restart(t) for t in row] for row in D.delta]
    if D.initial in D.finals:
        return Mnfa(D.k, D.alphabet, rows, {D.initial}, D.finals)
    start = D.k
    rows = [r + [r[D.initial]] for r in rows]
    return Mnfa(D.k + 1, D.alphabet, rows, {start}, D.finals | {start})


def star_bfa(A: Bfa, max_n: int = STAR_MAX_N) -> Bfa:
    """A 2**n-state AFA for L(A)*.

    L(A)^R has a 2**n-state DFA; its star is determinized, padded to
    exactly 2**(2**n) states with half of them final, and converted back,
    using (L*)^R = (L^R)*.
    """
    if A.n > max_n:
        raise CapExceededError(f"star of a {A.n}-state BFA exceeds the cap n <= {max_n}")
    size = 1 << A.n
    S = determinize(_star_mnfa(bfa_reverse_dfa(A)))
    half = 1 << (size - 1)
    f = len(S.finals)
    if f > half or S.k - f > half:
        raise BoundCheckError(
            f"star DFA has {f} final and {S.k - f} non-final states; cannot reach {half} + {half}"
        )
    S = pad_dfa(S, 1 << size, extra_finals=half - f)
    return _expect(dfa_to_afa_of_reverse(S, size), size, "star")


star_afa = star_bfa


def reverse_bfa(A: Bfa) -> Bfa:
    """The 2**n-state DFA for L(A)^R, as an AFA."""
    return _expect(embed_dfa(bfa_reverse_dfa(A)), 1 << A.n, "reversal")


reverse_afa = reverse_bfa


# -------------------------------------------------------------- quotients

def right_quotient_bfa(K: Bfa, L: Bfa) -> Bfa:
    """{w | wu in K for some u in L}: the MNFA of K with re-chosen finals."""
    _same_alphabet(K, L)
    M = bfa_to_mnfa(K)
    DL = determinize(bfa_to_mnfa(L))
    # backward reachability in M x DL towards (final of M, final of DL)
    preds: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for mrow, lrow in zip(M.delta, DL.delta):
        for q, targets in enumerate(mrow):
            for r in range(DL.k):
                for t in targets:
                    preds.setdefault((t, lrow[r]), []).append((q, r))
    good = {(q, r) for q in M.finals for r in DL.finals}
    queue = deque(good)
    while queue:
        x = queue.popleft()
        for y in preds.get(x, ()):
            if y not in good:
                good.add(y)
                queue.append(y)
    finals = frozenset(q for q in range(M.k) if (q, DL.initial) in good)
    R = Mnfa(M.k, M.alphabet, M.delta, M.initials, finals)
    return _expect(embed_mnfa(R), 1 << K.n, "right quotient")


def right_quotient_afa(K: Bfa, L: Bfa) -> Bfa:
    _require_afa(K)
    return _expect(bfa_to_afa(right_quotient_bfa(K, L)), (1 << K.n) + 1, "right quotient")


LEFT_QUOTIENT_CAP = 1 << 16


def left_quotient_bfa(K: Bfa, L: Bfa, cap: int = LEFT_QUOTIENT_CAP) -> Bfa:
    """{w | uw in K for some u in L}: K with initial function OR{init.u : u in L}."""
    _same_alphabet(K, L)
    DL = determinize(bfa_to_mnfa(L))
    start = (K.init, DL.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        g, r = queue.popleft()
        for s, a in enumerate(K.alphabet):
            y = (bfa_step(K, g, a), DL.delta[s][r])
            if y not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(f"left quotient exploration exceeds {cap} pairs")
                seen.add(y)
                queue.append(y)
    init = constant(0, K.n)
    for g, r in seen:
        if r in DL.finals:
            init = init | g
    return _expect(Bfa(K.n, K.alphabet, K.delta, init, K.finals), K.n, "left quotient")


def left_quotient_afa(K: Bfa, L: Bfa, cap: int = LEFT_QUOTIENT_CAP) -> Bfa:
    _require_afa(K)
    return _expect(bfa_to_afa(left_quotient_bfa(K, L, cap)), K.n + 1, "left quotient")


# ------------------------------------------------------------ dispatching

def apply(op: Operation | str, model: Model | str, A: Bfa, B: Bfa | None = None) -> Bfa:
    """Run the constructor for one operation and model."""
    op, model = Operation(op), Model(model)
    if op.binary and B is None:
        raise AutomatonError(f"{op.value} needs two operands")
    afa = model is Model.AFA
    if op is Operation.COMPLEMENT:
        return complement_afa(A) if afa else complement_bfa(A)
    if op in BOOLEAN_OPS:
        return boolean_op_afa(op, A, B) if afa else boolean_op_bfa(op, A, B)
    if op is Operation.CONCATENATION:
        return concat_afa(A, B) if afa else concat_bfa(A, B)
    if op is Operation.SQUARE:
        return square_afa(A) if afa else square_bfa(A)
    if op is Operation.STAR:
        if afa:
            _require_afa(A)
        return star_bfa(A)
    if op is Operation.REVERSAL:
        if afa:
            _require_afa(A)
        return reverse_bfa(A)
    if op is Operation.LEFT_QUOTIENT:
        return left_quotient_afa(A, B) if afa else left_quotient_bfa(A, B)
    return right_quotient_afa(A, B) if afa else right_quotient_bfa(A, B)


def table1_size(op: Operation | str, model: Model | str, m: int, n: int) -> int:
    """Upper bound on the result size; unary operations use n for the single operand."""
    op, model = Operation(op), Model(model)
    afa = model is Model.AFA
    if op is Operation.COMPLEMENT:
        return n
    if op is Operation.SYMMETRIC_DIFFERENCE:
        return m + n
    if op in BOOLEAN_OPS:
        return m + n + afa
    if op is Operation.CONCATENATION:
        return (1 << m) + n + afa
    if op is Operation.SQUARE:
        return (1 << n) + n + afa
    if op in (Operation.STAR, Operation.REVERSAL):
        return 1 << n
    if op is Operation.RIGHT_QUOTIENT:
        return (1 << m) + afa
    return m + afa
