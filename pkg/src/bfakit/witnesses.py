"""Witness automata for the lower-bound arguments.

DFA witnesses are drawn with states 1..m; here they are shifted to 0..m-1.
"""

from __future__ import annotations

from .errors import AutomatonError
from .machines import Dfa, Mnfa


def fig1_mnfa(n: int) -> Mnfa:
    """2**n-state binary MNFA whose reverse is a DFA with half of its states final.

    a rotates the states; b keeps 0, sends the top state to every nonzero
    state, and is undefined elsewhere.
    """
    if n < 2:
        raise AutomatonError("fig1_mnfa needs n >= 2")
    k = 1 << n
    top = k - 1
    trans = {}
    for i in range(k):
        trans[i, "a"] = {(i + 1) % k}
    trans[0, "b"] = {0}
    trans[top, "b"] = set(range(1, k))
    return Mnfa.build(k, "ab", trans, range(k // 2), {top})


def maslov_a(m: int) -> Dfa:
    """a cycles through all states, b is the identity; the last state is final."""
    if m < 2:
        raise AutomatonError("maslov_a needs m >= 2")
    trans = {}
    for i in range(m):
        trans[i, "a"] = (i + 1) % m
        trans[i, "b"] = i
    return Dfa.build(m, "ab", trans, 0, {m - 1})


def maslov_b(n: int) -> Dfa:
    """b counts up to the last state and stays; a swaps the two top states."""
    if n < 2:
        raise AutomatonError("maslov_b needs n >= 2")
    trans = {}
    for i in range(n):
        trans[i, "b"] = min(i + 1, n - 1)
        trans[i, "a"] = i
    trans[n - 2, "a"] = n - 1
    trans[n - 1, "a"] = n - 2
    return Dfa.build(n, "ab", trans, 0, {n - 1})


def _even(size: int, name: str, least: int = 2) -> None:
    if size < least or size % 2:
        raise AutomatonError(f"{name} needs an even size >= {least}, got {size}")


def hf_concat_a(m: int) -> Dfa:
    """Upper half final; a cycles, b moves one state down (state 1 stays)."""
    _even(m, "hf_concat_a")
    trans = {}
    for i in range(m):
        trans[i, "a"] = (i + 1) % m
        trans[i, "b"] = max(i - 1, 0)
    return Dfa.build(m, "ab", trans, 0, range(m // 2, m))


def hf_concat_b(n: int) -> Dfa:
    """Upper half final; a fixes state 1 and cycles 2..n, b is 1->2->3 and fixes the rest.

    The b-edge 2->3 needs a third state, so n >= 4.
    """
    _even(n, "hf_concat_b", least=4)
    trans = {}
    for i in range(n):
        trans[i, "a"] = 0 if i == 0 else (1 + i % (n - 1))
        trans[i, "b"] = i + 1 if i < 2 else i
    return Dfa.build(n, "ab", trans, 0, range(n // 2, n))


def palmovsky_star(n: int) -> Dfa:
    """Upper half final; a cycles; b fixes 1 and n, sends n-1 to 1 and i to i+1 otherwise."""
    _even(n, "palmovsky_star", least=4)
    trans = {}
    for i in range(n):
        trans[i, "a"] = (i + 1) % n
    trans[0, "b"] = 0
    for i in range(1, n - 2):
        trans[i, "b"] = i + 1
    trans[n - 2, "b"] = 0
    trans[n - 1, "b"] = n - 1
    return Dfa.build(n, "ab", trans, 0, range(n // 2, n))


def unary_union_k(m: int) -> Dfa:
    """Unary 2**m-cycle with the upper half of the states final."""
    if m < 1:
        raise AutomatonError("unary_union_k needs m >= 1")
    k = 1 << m
    return Dfa.build(k, "a", {(i, "a"): (i + 1) % k for i in range(k)}, 0, range(k // 2, k))


def unary_union_l(n: int, padded: bool = False) -> Dfa:
    """Unary (2**n - 1)-cycle with finals 2**(n-1)..2**n-2.

    With ``padded`` an unreachable final state is appended, giving 2**n
    states of which exactly half are final.
    """
    if n < 1:
        raise AutomatonError("unary_union_l needs n >= 1")
    k = (1 << n) - 1
    trans = {(i, "a"): (i + 1) % k for i in range(k)}
    finals = set(range(1 << (n - 1), k))
    if padded:
        trans[k, "a"] = k
        finals.add(k)
        k += 1
    return Dfa.build(k, "a", trans, 0, finals)


WITNESSES = {
    "fig1": fig1_mnfa,
    "maslov_a": maslov_a,
    "maslov_b": maslov_b,
    "hf_concat_a": hf_concat_a,
    "hf_concat_b": hf_concat_b,
    "palmovsky": palmovsky_star,
    "unary_union_k": unary_union_k,
    "unary_union_l": unary_union_l,
    "unary_union_l_padded": lambda n: unary_union_l(n, padded=True),
}
