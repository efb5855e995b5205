"""Seeded random automata for property tests and the bounds harness."""

from __future__ import annotations

import random

from .boolfn import BooleanFunction, variable
from .machines import Bfa, Dfa, Mnfa


def random_function(rng: random.Random, arity: int) -> BooleanFunction:
    return BooleanFunction(arity, rng.getrandbits(1 << arity))


def random_bfa(rng: random.Random, n: int, alphabet="ab", afa: bool = False) -> Bfa:
    delta = [[random_function(rng, n) for _ in range(n)] for _ in alphabet]
    init = variable(1, n) if afa else random_function(rng, n)
    finals = frozenset(q for q in range(1, n + 1) if rng.random() < 0.5)
    return Bfa(n, tuple(alphabet), delta, init, finals)


def random_dfa(rng: random.Random, k: int, alphabet="ab") -> Dfa:
    delta = [[rng.randrange(k) for _ in range(k)] for _ in alphabet]
    finals = frozenset(q for q in range(k) if rng.random() < 0.5)
    return Dfa(k, tuple(alphabet), delta, rng.randrange(k), finals)


def random_mnfa(rng: random.Random, k: int, alphabet="ab", density: float = 0.3) -> Mnfa:
    delta = [
        [frozenset(t for t in range(k) if rng.random() < density) for _ in range(k)]
        for _ in alphabet
    ]
    initials = frozenset(q for q in range(k) if rng.random() < 0.4)
    finals = frozenset(q for q in range(k) if rng.random() < 0.4)
    return Mnfa(k, tuple(alphabet), delta, initials, finals)
