"""DFA-level reference implementations.

Everything here works on complete DFAs with plain Python sets so that it
stays independent of the BFA/MNFA conversion code it is used to check.
Minimal DFAs are returned in canonical form: states numbered in BFS order
from the initial state, symbols in alphabet order.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable

import numpy as np

from .errors import AutomatonError, CapExceededError
from .machines import Bfa, Dfa, bfa_step

OPS = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symmetric_difference": lambda x, y: x != y,
}


def _explore(alphabet, start: Hashable, step: Callable, is_final: Callable,
             max_states: int | None = None) -> Dfa:
    index = {start: 0}
    states = [start]
    delta: list[list[int]] = [[] for _ in alphabet]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s, a in enumerate(alphabet):
            y = step(x, a)
            if y not in index:
                if max_states is not None and len(states) >= max_states:
                    raise CapExceededError(f"exploration exceeds {max_states} states")
                index[y] = len(states)
                states.append(y)
                queue.append(y)
            delta[s].append(index[y])
    finals = frozenset(i for i, x in enumerate(states) if is_final(x))
    return Dfa(len(states), alphabet, delta, 0, finals)


def _same_alphabet(D1: Dfa, D2: Dfa) -> None:
    if D1.alphabet != D2.alphabet:
        raise AutomatonError(f"alphabet mismatch: {D1.alphabet} vs {D2.alphabet}")


def minimize(D: Dfa) -> Dfa:
    """Minimal canonical DFA (reachability, Moore refinement, BFS renumbering)."""
    arr = D.arrays
    # reachable part
    seen = np.zeros(D.k, dtype=bool)
    seen[D.initial] = True
    frontier = [D.initial]
    while frontier:
        nxt = np.unique(arr[:, frontier].ravel())
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt.tolist()
    reach = np.flatnonzero(seen)
    local = np.full(D.k, -1, dtype=np.int64)
    local[reach] = np.arange(len(reach))
    sub = local[arr[:, reach]]
    fin = np.array([q in D.finals for q in reach.tolist()], dtype=np.int64)

    classes = np.unique(fin, return_inverse=True)[1].ravel()
    count = classes.max() + 1
    while True:
        sig = np.vstack([classes[None, :], classes[sub]]).T
        _, classes = np.unique(sig, axis=0, return_inverse=True)
        classes = classes.ravel()
        if classes.max() + 1 == count:
            break
        count = classes.max() + 1

    # canonical BFS numbering of the quotient
    rep = np.zeros(count, dtype=np.int64)
    rep[classes[::-1]] = np.arange(len(classes))[::-1]
    order = {classes[local[D.initial]]: 0}
    queue = deque([classes[local[D.initial]]])
    delta: list[list[int]] = [[] for _ in D.alphabet]
    while queue:
        c = queue.popleft()
        for s in range(len(D.alphabet)):
            t = classes[sub[s, rep[c]]]
            if t not in order:
                order[t] = len(order)
                queue.append(t)
            delta[s].append(order[t])
    finals = frozenset(order[c] for c in order if fin[rep[c]])
    return Dfa(len(order), D.alphabet, delta, 0, finals)


def equivalent(D1: Dfa, D2: Dfa) -> bool:
    _same_alphabet(D1, D2)
    return minimize(D1) == minimize(D2)


def count_finals(D: Dfa) -> int:
    return len(D.finals)


def complement_dfa(D: Dfa) -> Dfa:
    return Dfa(D.k, D.alphabet, D.delta, D.initial, frozenset(range(D.k)) - D.finals)


def product_dfa(op: str, D1: Dfa, D2: Dfa) -> Dfa:
    """Reachable product with finality given by a Boolean connective."""
    _same_alphabet(D1, D2)
    combine = OPS[op]
    return _explore(
        D1.alphabet,
        (D1.initial, D2.initial),
        lambda x, a: (D1.step(x[0], a), D2.step(x[1], a)),
        lambda x: combine(x[0] in D1.finals, x[1] in D2.finals),
    )


def _nfa_to_dfa(k: int, alphabet, rows, initials, finals) -> Dfa:
    """Subset construction for an NFA given as per-symbol successor lists."""
    index = {a: s for s, a in enumerate(alphabet)}

    def step(S, a):
        row = rows[index[a]]
        out = set()
        for q in S:
            out |= row[q]
        return frozenset(out)

    return _explore(tuple(alphabet), frozenset(initials), step, lambda S: bool(S & finals))


def _reverse_determinize(k: int, alphabet, rows, initials, finals) -> Dfa:
    rev = [[set() for _ in range(k)] for _ in alphabet]
    for s, row in enumerate(rows):
        for q, targets in enumerate(row):
            for t in targets:
                rev[s][t].add(q)
    return _nfa_to_dfa(k, alphabet, rev, frozenset(finals), frozenset(initials))


def brzozowski(k: int, alphabet, rows, initials, finals) -> Dfa:
    """Minimal DFA of an NFA by determinizing its reverse twice."""
    R = _reverse_determinize(k, alphabet, rows, initials, finals)
    rows2 = [[{t} for t in row] for row in R.delta]
    return minimize(_reverse_determinize(R.k, alphabet, rows2, {R.initial}, R.finals))


def concat_dfa(D1: Dfa, D2: Dfa) -> Dfa:
    """Minimal DFA for L(D1)L(D2)."""
    _same_alphabet(D1, D2)
    off = D1.k
    rows = []
    for r1, r2 in zip(D1.delta, D2.delta):
        row = []
        for t in r1:
            row.append({t, D2.initial + off} if t in D1.finals else {t})
        row += [{t + off} for t in r2]
        rows.append(row)
    initials = {D1.initial}
    if D1.initial in D1.finals:
        initials.add(D2.initial + off)
    finals = {q + off for q in D2.finals}
    return brzozowski(D1.k + D2.k, D1.alphabet, rows, initials, frozenset(finals))


def star_dfa(D: Dfa) -> Dfa:
    """Minimal DFA for L(D)*; a fresh start state k accepts the empty word."""
    start = D.k
    rows = []
    for row in D.delta:
        succ = [{t, D.initial} if t in D.finals else {t} for t in row]
        succ.append(set(succ[D.initial]))
        rows.append(succ)
    return brzozowski(D.k + 1, D.alphabet, rows, {start}, frozenset(D.finals | {start}))


def reverse_to_dfa(D: Dfa) -> Dfa:
    """Subset construction on the edge-reversed DFA."""
    rows = [[{t} for t in row] for row in D.delta]
    return _reverse_determinize(D.k, D.alphabet, rows, {D.initial}, D.finals)


def _product_pairs(DK: Dfa, DL: Dfa):
    for p in range(DK.k):
        for r in range(DL.k):
            yield p, r


def right_quotient_dfa(DK: Dfa, DL: Dfa) -> Dfa:
    """DFA for {w | wu in K for some u in L}: DK with moved finals."""
    _same_alphabet(DK, DL)
    good = {(p, r) for p, r in _product_pairs(DK, DL) if p in DK.finals and r in DL.finals}
    changed = True
    while changed:
        changed = False
        for p, r in _product_pairs(DK, DL):
            if (p, r) in good:
                continue
            if any((DK.delta[s][p], DL.delta[s][r]) in good for s in range(len(DK.alphabet))):
                good.add((p, r))
                changed = True
    finals = frozenset(p for p in range(DK.k) if (p, DL.initial) in good)
    return Dfa(DK.k, DK.alphabet, DK.delta, DK.initial, finals)


def left_quotient_dfa(DK: Dfa, DL: Dfa) -> Dfa:
    """DFA for {w | uw in K for some u in L}."""
    _same_alphabet(DK, DL)
    seen = {(DK.initial, DL.initial)}
    queue = deque(seen)
    while queue:
        p, r = queue.popleft()
        for s in range(len(DK.alphabet)):
            y = (DK.delta[s][p], DL.delta[s][r])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    start = {p for p, r in seen if r in DL.finals}
    rows = [[{t} for t in row] for row in DK.delta]
    return brzozowski(DK.k, DK.alphabet, rows, start, DK.finals)


def function_automaton(A: Bfa, max_states: int | None = None) -> Dfa:
    """DFA for L(A) whose states are the distinct functions init.w.

    This follows the BFA semantics directly and never builds the MNFA.
    """
    f = A.final_index
    return _explore(A.alphabet, A.init, lambda g, a: bfa_step(A, g, a),
                    lambda g: bool(g.at(f)), max_states)


def words(alphabet, max_len: int):
    """All words up to max_len in length-lexicographic order."""
    layer = [""]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + a for w in layer for a in alphabet]
