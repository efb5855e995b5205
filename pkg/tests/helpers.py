"""Shared oracle-comparison harness for the property and acceptance suites."""

import random

from bfakit.convert import bfa_to_mnfa, determinize
from bfakit.oracle import (
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
from bfakit.ops import Model, Operation, apply
from bfakit.randgen import random_bfa

SUITE_SIZE = 200
SUITE_SEED = 1


def lang(A):
    """Minimized determinization of a constructed BFA."""
    return minimize(determinize(bfa_to_mnfa(A)))


def _oracle(op, DA, DB):
    if op is Operation.COMPLEMENT:
        return complement_dfa(DA)
    if op in (Operation.UNION, Operation.INTERSECTION, Operation.DIFFERENCE,
              Operation.SYMMETRIC_DIFFERENCE):
        return product_dfa(op.value, DA, DB)
    if op is Operation.CONCATENATION:
        return concat_dfa(DA, DB)
    if op is Operation.SQUARE:
        return concat_dfa(DA, DA)
    if op is Operation.STAR:
        return star_dfa(DA)
    if op is Operation.REVERSAL:
        return reverse_to_dfa(DA)
    if op is Operation.RIGHT_QUOTIENT:
        return right_quotient_dfa(DA, DB)
    return left_quotient_dfa(DA, DB)


def suite_cases():
    for op in Operation:
        for model in Model:
            yield op, model


def run_suite(op, model, count=SUITE_SIZE, seed=SUITE_SEED, max_n=3):
    """Compare construction and oracle on ``count`` random instances; return the failures."""
    op, model = Operation(op), Model(model)
    rng = random.Random(f"{seed}:{op.value}:{model.value}")
    afa = model is Model.AFA
    failures = []
    for i in range(count):
        A = random_bfa(rng, rng.randint(1, max_n), afa=afa)
        B = random_bfa(rng, rng.randint(1, max_n), afa=afa) if op.binary else None
        R = apply(op, model, A, B)
        want = minimize(_oracle(op, function_automaton(A), function_automaton(B) if B else None))
        if lang(R) != want:
            failures.append((i, A, B))
    return failures
