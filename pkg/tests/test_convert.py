import random

import pytest

from bfakit.boolfn import variable
from bfakit.convert import (
    bfa_reverse_dfa,
    bfa_to_afa,
    bfa_to_dfa,
    bfa_to_mnfa,
    ceil_log2,
    determinize,
    dfa_to_afa_of_reverse,
    dfa_to_bfa_of_reverse,
    half_encoding,
    mnfa_to_bfa,
    mnfa_to_nfa,
    pad_dfa,
)
from bfakit.errors import PreconditionError
from bfakit.machines import (
    Bfa,
    Dfa,
    accepts,
    bfa_accepts,
    classify_machine,
    dfa_as_mnfa,
    embed_dfa,
    is_reverse_deterministic,
    dfa_run,
    mnfa_accepts,
    mnfa_image,
    reverse_mnfa,
)
from bfakit.oracle import function_automaton, minimize, reverse_to_dfa, words
from bfakit.randgen import random_bfa, random_dfa, random_mnfa
from bfakit.witnesses import fig1_mnfa, unary_union_k, unary_union_l


def lang(X):
    if isinstance(X, Bfa):
        return minimize(function_automaton(X))
    if isinstance(X, Dfa):
        return minimize(X)
    return minimize(determinize(X))


@pytest.fixture
def flip():
    """One state, q1.a = !q1, initial q1, final."""
    return Bfa.build(1, "a", {(1, "a"): "!q1"}, "q1", {1})


class TestBfaToMnfa:
    def test_flip(self, flip):
        M = bfa_to_mnfa(flip)
        assert M.initials == {1} and M.finals == {1}
        assert M.delta[0][0] == {1} and M.delta[0][1] == {0}
        for w in words("a", 6):
            assert mnfa_accepts(M, w) == bfa_accepts(flip, w) == (len(w) % 2 == 0)

    def test_example1(self, example1):
        M = bfa_to_mnfa(example1)
        assert M.k == 4 and M.finals == {1}
        for w in words("ab", 5):
            assert mnfa_accepts(M, w) == bfa_accepts(example1, w)

    def test_random(self):
        rng = random.Random(11)
        for _ in range(200):
            A = random_bfa(rng, rng.randint(1, 3))
            M = bfa_to_mnfa(A)
            assert is_reverse_deterministic(M)
            assert lang(M) == lang(A)

    def test_reverse_dfa_is_reverse(self):
        rng = random.Random(12)
        for _ in range(50):
            A = random_bfa(rng, rng.randint(1, 3))
            R = reverse_mnfa(bfa_to_mnfa(A))
            D = bfa_reverse_dfa(A)
            assert R.initials == {D.initial} and R.finals == D.finals
            assert all(R.delta[s][q] == {D.delta[s][q]} for s in range(2) for q in range(D.k))
            assert minimize(bfa_reverse_dfa(A)) == minimize(reverse_to_dfa(function_automaton(A)))

    def test_lifted_dfa(self):
        rng = random.Random(13)
        for _ in range(30):
            D = random_dfa(rng, rng.randint(1, 5))
            assert lang(bfa_to_mnfa(embed_dfa(D))) == minimize(D)


class TestMnfaToBfa:
    def test_round_trip(self):
        rng = random.Random(14)
        for _ in range(200):
            A = random_bfa(rng, rng.randint(1, 3))
            B = mnfa_to_bfa(bfa_to_mnfa(A))
            assert B.n == A.n
            assert lang(B) == lang(A)

    def test_flip_round_trip(self, flip):
        B = mnfa_to_bfa(bfa_to_mnfa(flip))
        assert B.n == 1 and lang(B) == lang(flip)

    def test_fig1_gives_afa(self):
        M = fig1_mnfa(3)
        A = mnfa_to_bfa(M, half_encoding(M.initials, M.k))
        assert A.n == 3 and classify_machine(A).afa
        assert lang(A) == lang(M)

    def test_fig1_plain_encoding_is_bfa(self):
        # with the plain binary encoding the lower half is where q3 = 0
        M = fig1_mnfa(3)
        A = mnfa_to_bfa(M)
        assert A.init == ~variable(3, 3)
        assert lang(A) == lang(M)

    def test_rejects_wrong_size(self):
        with pytest.raises(PreconditionError, match="power of two"):
            mnfa_to_bfa(dfa_as_mnfa(random_dfa(random.Random(0), 3)))

    def test_rejects_non_reverse_deterministic(self):
        M = random_mnfa(random.Random(1), 4, density=0.9)
        with pytest.raises(PreconditionError, match="reverse"):
            mnfa_to_bfa(M)

    def test_half_encoding(self):
        enc = half_encoding({0, 3}, 4)
        assert sorted(enc) == [0, 1, 2, 3]
        assert enc[0] % 2 == 1 and enc[3] % 2 == 1
        with pytest.raises(PreconditionError):
            half_encoding({0}, 4)


class TestDeterminize:
    def test_dfa_is_isomorphic(self):
        rng = random.Random(15)
        for _ in range(30):
            D = minimize(random_dfa(rng, rng.randint(1, 6)))
            assert minimize(determinize(dfa_as_mnfa(D))) == D
            assert determinize(dfa_as_mnfa(D)).k == D.k

    def test_fig1(self):
        M = fig1_mnfa(3)
        D = determinize(M)
        for w in words("ab", 6):
            assert accepts(D, w) == mnfa_accepts(M, w)

    def test_dead_state_last(self):
        rng = random.Random(16)
        seen_empty = 0
        for _ in range(50):
            M = random_mnfa(rng, 4, density=0.2)
            D = determinize(M)
            # map every reachable subset to the DFA state of the same word
            subset_of = {}
            for w in words("ab", 6):
                S = M.initials
                for a in w:
                    S = mnfa_image(M, S, a)
                subset_of.setdefault(dfa_run(D, w), set()).add(S)
            assert all(len(v) == 1 for v in subset_of.values())
            empties = [q for q, v in subset_of.items() if frozenset() in v]
            if empties:
                seen_empty += 1
                assert empties == [D.k - 1]
        assert seen_empty > 10

    def test_complete_and_equivalent(self):
        rng = random.Random(17)
        for _ in range(50):
            M = random_mnfa(rng, rng.randint(1, 6))
            D = determinize(M)
            for w in words("ab", 4):
                assert accepts(D, w) == mnfa_accepts(M, w)


class TestNfa:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_fig1(self, n):
        N = mnfa_to_nfa(fig1_mnfa(n))
        assert N.k == 2 ** n + 1 and len(N.initials) == 1
        assert lang(N) == lang(fig1_mnfa(n))

    def test_nfa_input(self):
        D = random_dfa(random.Random(18), 4)
        N = mnfa_to_nfa(dfa_as_mnfa(D))
        assert N.k == 5 and lang(N) == minimize(D)

    def test_random(self):
        rng = random.Random(19)
        for _ in range(50):
            M = random_mnfa(rng, rng.randint(1, 6))
            assert lang(mnfa_to_nfa(M)) == lang(M)


class TestReverseCorollaries:
    def test_odd_length(self):
        D = Dfa.build(2, "a", {(0, "a"): 1, (1, "a"): 0}, 0, {1})
        A = dfa_to_bfa_of_reverse(D)
        assert A.n == 1 and lang(A) == minimize(D)

    def test_unary_k(self):
        K = unary_union_k(2)
        A = dfa_to_bfa_of_reverse(K)
        assert A.n == 2 and lang(A) == minimize(K)

    def test_round_trip_padded(self):
        rng = random.Random(20)
        for _ in range(50):
            D = random_dfa(rng, rng.randint(1, 7))
            A = dfa_to_bfa_of_reverse(D)
            assert A.n == max(1, ceil_log2(D.k))
            assert minimize(bfa_reverse_dfa(A)) == minimize(D)
            assert lang(A) == minimize(reverse_to_dfa(D))

    @pytest.mark.parametrize("n", [2, 3])
    def test_fig1_reverse_gives_afa(self, n):
        R = reverse_mnfa(fig1_mnfa(n))
        D = Dfa(R.k, R.alphabet, [[next(iter(t)) for t in row] for row in R.delta], next(iter(R.initials)), R.finals)
        A = dfa_to_afa_of_reverse(D)
        assert A.n == n and classify_machine(A).afa
        assert lang(A) == lang(fig1_mnfa(n))

    def test_padded_l(self):
        A = dfa_to_afa_of_reverse(unary_union_l(2, padded=True))
        assert A.n == 2 and classify_machine(A).afa
        assert lang(A) == minimize(unary_union_l(2))

    def test_too_many_finals(self):
        D = Dfa.build(4, "a", {(i, "a"): (i + 1) % 4 for i in range(4)}, 0, {0, 1, 2})
        with pytest.raises(PreconditionError, match="3 final"):
            dfa_to_afa_of_reverse(D)

    def test_random_afa(self):
        rng = random.Random(21)
        done = 0
        while done < 50:
            D = random_dfa(rng, rng.randint(1, 8))
            f = len(D.finals)
            n = max(1, ceil_log2(D.k))
            if f > 2 ** (n - 1) or D.k - f > 2 ** (n - 1):
                continue
            A = dfa_to_afa_of_reverse(D)
            assert classify_machine(A).afa
            assert lang(A) == minimize(reverse_to_dfa(D))
            done += 1

    def test_pad(self):
        D = random_dfa(random.Random(22), 3)
        P = pad_dfa(D, 8, extra_finals=2)
        assert P.k == 8 and len(P.finals) == len(D.finals) + 2
        assert P.finals - D.finals == {3, 4}
        assert minimize(P) == minimize(D)


class TestBfaToAfa:
    def test_example1(self, example1):
        A = bfa_to_afa(example1)
        assert A.n == 3 and classify_machine(A).afa
        for w in words("ab", 5):
            assert bfa_accepts(A, w) == bfa_accepts(example1, w)

    def test_random(self):
        rng = random.Random(23)
        for _ in range(100):
            B = random_bfa(rng, rng.randint(1, 3), afa=rng.random() < 0.3)
            A = bfa_to_afa(B)
            assert A.n == B.n + 1 and classify_machine(A).afa
            assert (1 in A.finals) == bfa_accepts(B, "")
            assert lang(A) == lang(B)
