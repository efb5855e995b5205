"""Conversions between BFAs, MNFAs, NFAs and DFAs.

The bijection between the 2**n states of an MNFA/DFA and the assignments of
an n-state BFA is the binary encoding of the state index, q1 least
significant, unless an explicit ``encoding`` is supplied.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

import numpy as np

from .boolfn import BooleanFunction, permute_variables, variable
from .errors import CapExceededError, PreconditionError
from .machines import (
    Bfa,
    Dfa,
    Mnfa,
    bfa_step,
    dfa_as_mnfa,
    is_reverse_deterministic,
    reverse_mnfa,
)


def _log2_exact(k: int) -> int | None:
    n = k.bit_length() - 1
    return n if k == 1 << n else None


def ceil_log2(k: int) -> int:
    return (k - 1).bit_length() if k > 0 else 0


def bfa_to_mnfa(A: Bfa) -> Mnfa:
    """The 2**n-state MNFA whose reverse is a DFA.

    States are assignments; initials are the assignments where the initial
    function is 1; the only final state is the finality vector; and ``u.a``
    is the set of assignments that the per-symbol substitution maps onto u.
    """
    k = 1 << A.n
    delta = []
    for vmap in A.successor_maps:
        targets: list[list[int]] = [[] for _ in range(k)]
        for v, u in enumerate(vmap.tolist()):
            targets[u].append(v)
        delta.append([frozenset(t) for t in targets])
    initials = frozenset(np.flatnonzero(A.init.bits()).tolist())
    return Mnfa(k, A.alphabet, delta, initials, frozenset((A.final_index,)))


def bfa_reverse_dfa(A: Bfa) -> Dfa:
    """The reverse of ``bfa_to_mnfa(A)`` as a DFA: a 2**n-state DFA for L(A)^R."""
    initials = np.flatnonzero(A.init.bits()).tolist()
    delta = [vmap.tolist() for vmap in A.successor_maps]
    return Dfa(1 << A.n, A.alphabet, delta, A.final_index, frozenset(initials))


def _predecessors(M: Mnfa) -> list[list[int]]:
    """For each symbol and state u, the unique q with u in q.a (reverse determinism)."""
    preds = []
    for row in M.delta:
        pred = [-1] * M.k
        for q, targets in enumerate(row):
            for u in targets:
                pred[u] = q
        preds.append(pred)
    return preds


def mnfa_to_bfa(M: Mnfa, encoding: Sequence[int] | None = None) -> Bfa:
    """The n-state BFA of a reverse-deterministic 2**n-state MNFA.

    ``encoding[q]`` is the assignment index representing state q (identity
    by default).  The initial function is 1 exactly on the encoded initial
    states, the finals are the 1-bits of the encoded final state, and the
    components of ``(q1.a, ..., qn.a)`` at u encode the a-predecessor of u.
    """
    n = _log2_exact(M.k)
    if n is None or n < 1:
        raise PreconditionError(f"state count {M.k} is not a power of two >= 2")
    if not is_reverse_deterministic(M):
        raise PreconditionError("MNFA reverse is not deterministic")
    enc = list(range(M.k)) if encoding is None else list(encoding)
    if sorted(enc) != list(range(M.k)):
        raise PreconditionError("encoding must be a bijection onto 0..2**n-1")
    dec = [0] * M.k
    for q, u in enumerate(enc):
        dec[u] = q
    delta = []
    for pred in _predecessors(M):
        codes = np.array([enc[pred[dec[u]]] for u in range(M.k)], dtype=np.int64)
        delta.append([BooleanFunction.from_bits((codes >> j) & 1) for j in range(n)])
    init_bits = np.zeros(M.k, dtype=bool)
    for q in M.initials:
        init_bits[enc[q]] = True
    (f,) = M.finals
    finals = frozenset(j + 1 for j in range(n) if enc[f] >> j & 1)
    return Bfa(n, M.alphabet, delta, BooleanFunction.from_bits(init_bits), finals)


def half_encoding(marked: Sequence[int] | frozenset[int], k: int) -> list[int]:
    """An encoding putting the marked states exactly on the assignments with q1 = 1.

    Requires ``len(marked) == k // 2``.
    """
    marked = set(marked)
    if 2 * len(marked) != k:
        raise PreconditionError(f"{len(marked)} marked states out of {k}, need exactly half")
    enc = [0] * k
    odd, even = 1, 0
    for q in range(k):
        if q in marked:
            enc[q], odd = odd, odd + 2
        else:
            enc[q], even = even, even + 2
    return enc


def determinize(M: Mnfa, max_states: int | None = None) -> Dfa:
    """Reachable-subset construction.

    Subsets are numbered in BFS discovery order with symbols in alphabet
    order; the empty subset, if reachable, is the last state.
    """
    edges = M.edge_arrays
    start = np.zeros(M.k, dtype=bool)
    start[list(M.initials)] = True
    final_mask = np.zeros(M.k, dtype=bool)
    final_mask[list(M.finals)] = True

    index: dict[bytes, int] = {}
    subsets: list[np.ndarray] = []

    def intern(S: np.ndarray) -> int:
        key = np.packbits(S).tobytes()
        if key not in index:
            if max_states is not None and len(subsets) >= max_states:
                raise CapExceededError(f"determinization exceeds {max_states} states")
            index[key] = len(subsets)
            subsets.append(S)
            queue.append(index[key])
        return index[key]

    queue: deque[int] = deque()
    trans: list[list[int]] = [[] for _ in M.alphabet]
    intern(start)
    while queue:
        i = queue.popleft()
        S = subsets[i]
        for s, (src, dst) in enumerate(edges):
            T = np.zeros(M.k, dtype=bool)
            T[dst[S[src]]] = True
            trans[s].append(intern(T))
            # trans[s] is filled in the same order states are dequeued
    order = list(range(len(subsets)))
    empty = [i for i, S in enumerate(subsets) if not S.any()]
    if empty and empty[0] != len(subsets) - 1:
        order.remove(empty[0])
        order.append(empty[0])
    new = {old: pos for pos, old in enumerate(order)}
    delta = [[new[row[old]] for old in order] for row in trans]
    finals = frozenset(new[i] for i, S in enumerate(subsets) if (S & final_mask).any())
    return Dfa(len(subsets), M.alphabet, delta, new[0], finals)


def bfa_to_dfa(A: Bfa, max_states: int | None = None) -> Dfa:
    return determinize(bfa_to_mnfa(A), max_states)


def mnfa_to_nfa(M: Mnfa) -> Mnfa:
    """Add a fresh unique initial state 0 (old states shift up by one)."""
    delta = []
    for row in M.delta:
        first = frozenset(t + 1 for q in M.initials for t in row[q])
        delta.append([first] + [frozenset(t + 1 for t in ts) for ts in row])
    finals = {q + 1 for q in M.finals}
    if M.initials & M.finals:
        finals.add(0)
    return Mnfa(M.k + 1, M.alphabet, delta, frozenset((0,)), frozenset(finals))


def pad_dfa(D: Dfa, size: int, extra_finals: int = 0) -> Dfa:
    """Append unreachable self-looping states up to ``size``; the first ``extra_finals`` are final."""
    extra = size - D.k
    if extra < 0 or not 0 <= extra_finals <= extra:
        raise PreconditionError(f"cannot pad {D.k} states to {size} with {extra_finals} final pads")
    delta = [list(row) + list(range(D.k, size)) for row in D.delta]
    finals = set(D.finals) | set(range(D.k, D.k + extra_finals))
    return Dfa(size, D.alphabet, delta, D.initial, frozenset(finals))


def _reverse_bfa_core(D: Dfa, enc: Sequence[int]) -> Bfa:
    return mnfa_to_bfa(reverse_mnfa(dfa_as_mnfa(D)), encoding=enc)


def dfa_to_bfa_of_reverse(D: Dfa, n: int | None = None) -> Bfa:
    """An n-state BFA for L(D)^R, n = ceil(log2 |D|) unless given."""
    n = max(1, ceil_log2(D.k)) if n is None else n
    if n < 1 or D.k > 1 << n:
        raise PreconditionError(f"{D.k} states do not fit 2**{n}")
    P = pad_dfa(D, 1 << n)
    return _reverse_bfa_core(P, range(P.k))


def dfa_to_afa_of_reverse(D: Dfa, n: int | None = None) -> Bfa:
    """An n-state AFA (initial function q1) for L(D)^R.

    After padding to 2**n states exactly half must be final, so both the
    final and the non-final states of D must number at most 2**(n-1).
    """
    n = max(1, ceil_log2(D.k)) if n is None else n
    half = 1 << (n - 1)
    f = len(D.finals)
    if n < 1 or f > half or D.k - f > half:
        raise PreconditionError(
            f"{D.k}-state DFA with {f} final and {D.k - f} non-final states "
            f"cannot be padded to {1 << n} states with {half} final"
        )
    P = pad_dfa(D, 1 << n, extra_finals=half - f)
    return _reverse_bfa_core(P, half_encoding(P.finals, P.k))


def bfa_to_afa(A: Bfa) -> Bfa:
    """An (n+1)-state AFA: a fresh state q1 simulates the old initial function."""
    m = A.n + 1
    shift = list(range(2, m + 1))
    delta = []
    for a, row in zip(A.alphabet, A.delta):
        first = permute_variables(bfa_step(A, A.init, a), shift, m)
        delta.append([first] + [permute_variables(f, shift, m) for f in row])
    finals = {q + 1 for q in A.finals}
    if A.init.at(A.final_index):
        finals.add(1)
    return Bfa(m, A.alphabet, delta, variable(1, m), frozenset(finals))
