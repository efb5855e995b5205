import random

import pytest

from bfakit.boolfn import BooleanFunction
from bfakit.convert import bfa_reverse_dfa, bfa_to_dfa, dfa_to_afa_of_reverse
from bfakit.errors import AutomatonError, CapExceededError, PreconditionError
from bfakit.machines import Bfa, classify_machine, embed_dfa, is_afa
from bfakit.oracle import complement_dfa, function_automaton, minimize, product_dfa, reverse_to_dfa
from bfakit.ops import (
    Model,
    Operation,
    apply,
    boolean_op_afa,
    boolean_op_bfa,
    complement_afa,
    complement_bfa,
    concat_afa,
    concat_bfa,
    dual,
    left_quotient_bfa,
    reverse_bfa,
    right_quotient_afa,
    right_quotient_bfa,
    star_bfa,
    table1_size,
)
from bfakit.randgen import random_bfa
from bfakit.witnesses import hf_concat_a, hf_concat_b

from helpers import lang, run_suite, suite_cases


@pytest.mark.parametrize("op,model", list(suite_cases()), ids=lambda x: x.value)
def test_matches_oracle(op, model):
    failures = run_suite(op, model)
    assert not failures, f"{len(failures)} mismatches, first instance #{failures[0][0]}"


class TestSizes:
    @pytest.mark.parametrize("op", list(Operation), ids=lambda x: x.value)
    @pytest.mark.parametrize("model", list(Model), ids=lambda x: x.value)
    def test_table1_sizes(self, op, model):
        rng = random.Random(f"sizes:{op.value}:{model.value}")
        for _ in range(10):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            afa = model is Model.AFA
            A = random_bfa(rng, m if op.binary else n, afa=afa)
            B = random_bfa(rng, n, afa=afa) if op.binary else None
            R = apply(op, model, A, B)
            assert R.n == table1_size(op, model, m, n)
            if afa:
                assert is_afa(R)

    def test_formulas(self):
        assert table1_size("union", "bfa", 2, 3) == 5
        assert table1_size("union", "afa", 2, 3) == 6
        assert table1_size("symmetric_difference", "afa", 2, 3) == 5
        assert table1_size("concatenation", "bfa", 3, 2) == 10
        assert table1_size("concatenation", "afa", 2, 2) == 7
        assert table1_size("square", "afa", 0, 2) == 7
        assert table1_size("star", "afa", 0, 3) == 8
        assert table1_size("right_quotient", "afa", 3, 1) == 9
        assert table1_size("left_quotient", "bfa", 3, 1) == 3


class TestComplement:
    def test_dual_examples(self):
        x = BooleanFunction(2, 0b1000)  # q1&q2
        assert dual(x) == BooleanFunction(2, 0b1110)  # q1|q2
        assert dual(dual(x)) == x

    def test_involution(self):
        rng = random.Random(31)
        for _ in range(50):
            A = random_bfa(rng, rng.randint(1, 3))
            assert lang(complement_bfa(complement_bfa(A))) == lang(A)
            Aa = random_bfa(rng, rng.randint(1, 3), afa=True)
            assert lang(complement_afa(complement_afa(Aa))) == lang(Aa)

    def test_afa_complement_keeps_q1(self):
        A = random_bfa(random.Random(32), 3, afa=True)
        assert classify_machine(complement_afa(A)).afa

    def test_afa_required(self, example1):
        with pytest.raises(PreconditionError):
            complement_afa(example1)


class TestAlgebra:
    def test_de_morgan(self):
        rng = random.Random(33)
        for _ in range(100):
            A, B = random_bfa(rng, rng.randint(1, 3)), random_bfa(rng, rng.randint(1, 3))
            left = complement_bfa(boolean_op_bfa("union", A, B))
            right = boolean_op_bfa("intersection", complement_bfa(A), complement_bfa(B))
            assert lang(left) == lang(right)
            left = complement_bfa(boolean_op_bfa("intersection", A, B))
            right = boolean_op_bfa("union", complement_bfa(A), complement_bfa(B))
            assert lang(left) == lang(right)

    def test_reverse_of_concatenation(self):
        rng = random.Random(34)
        for _ in range(100):
            K, L = random_bfa(rng, rng.randint(1, 2)), random_bfa(rng, rng.randint(1, 2))
            left = reverse_to_dfa(lang(concat_bfa(K, L)))
            # 2**4 + 4 states: evaluate through the BFA semantics, not the 2**20-state MNFA
            right = minimize(function_automaton(concat_bfa(reverse_bfa(L), reverse_bfa(K))))
            assert minimize(left) == right

    def test_difference_is_intersection_with_complement(self):
        rng = random.Random(35)
        for _ in range(50):
            A, B = random_bfa(rng, 2), random_bfa(rng, 2)
            assert lang(boolean_op_bfa("difference", A, B)) == lang(
                boolean_op_bfa("intersection", A, complement_bfa(B)))


class TestConcatenation:
    def test_empty_word_in_second(self):
        # B accepts only the empty word: KL = K
        rng = random.Random(36)
        eps = Bfa.build(1, "ab", {(1, "a"): "0", (1, "b"): "0"}, "q1", {1})
        for _ in range(30):
            K = random_bfa(rng, 2)
            assert lang(concat_bfa(K, eps)) == lang(K)

    def test_afa_witness_size(self):
        A = dfa_to_afa_of_reverse(hf_concat_b(4))
        B = dfa_to_afa_of_reverse(hf_concat_a(4))
        R = concat_afa(A, B)
        assert R.n == 7 and classify_machine(R).afa

    def test_alphabet_mismatch(self):
        rng = random.Random(37)
        with pytest.raises(AutomatonError, match="alphabet"):
            concat_bfa(random_bfa(rng, 1, "ab"), random_bfa(rng, 1, "a"))


class TestOthers:
    def test_symmetric_difference_afa_is_m_plus_n(self):
        rng = random.Random(38)
        A, B = random_bfa(rng, 2, afa=True), random_bfa(rng, 3, afa=True)
        R = boolean_op_afa("symmetric_difference", A, B)
        assert R.n == 5 and is_afa(R)
        assert lang(R) == minimize(product_dfa("symmetric_difference", function_automaton(A), function_automaton(B)))

    def test_star_cap(self):
        with pytest.raises(CapExceededError):
            star_bfa(random_bfa(random.Random(39), 4))

    def test_reversal_is_lifted_dfa(self):
        A = random_bfa(random.Random(40), 2)
        R = reverse_bfa(A)
        assert classify_machine(R).dfa and R.n == 4

    def test_quotient_sizes(self):
        rng = random.Random(41)
        K, L = random_bfa(rng, 3, afa=True), random_bfa(rng, 2)
        assert right_quotient_bfa(K, L).n == 8
        assert right_quotient_afa(K, L).n == 9
        assert left_quotient_bfa(K, L).n == 3
        assert apply("left_quotient", "afa", K, L).n == 4

    def test_left_quotient_keeps_transitions(self):
        rng = random.Random(42)
        K, L = random_bfa(rng, 2), random_bfa(rng, 2)
        assert left_quotient_bfa(K, L).delta == K.delta

    def test_binary_needs_two(self):
        with pytest.raises(AutomatonError):
            apply("union", "bfa", random_bfa(random.Random(0), 1))
