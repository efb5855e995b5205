"""How many DFA/NFA states a small BFA or AFA needs.

Covers the 2**(2**n) determinization ceiling, the 2**n + 1 NFA simulation
of AFAs, and the half-final condition that separates AFAs from BFAs.
"""

# %% Determinization ceiling at n = 1: enumerate all 128 one-state binary BFAs
from bfakit.complexity import check_singletons, exhaustive_dfa_sizes, search_dfa_size
from bfakit.convert import bfa_to_dfa, dfa_to_afa_of_reverse, mnfa_to_bfa, mnfa_to_nfa, half_encoding
from bfakit.errors import PreconditionError
from bfakit.machines import classify_machine
from bfakit.oracle import minimize
from bfakit.witnesses import fig1_mnfa, maslov_a

sizes = exhaustive_dfa_sizes(1)
print("minimal DFA sizes over all one-state BFAs:", dict(sorted(sizes.items())))

# %% At n = 2 a random search hits the ceiling 16 almost immediately
A = search_dfa_size(2, 16, trials=10_000, seed=0)
print("two-state BFA with a 16-state minimal DFA:", A is not None, minimize(bfa_to_dfa(A)).k)

# %% The MNFA family whose reverse is a half-final DFA: an n-state AFA, 2**n + 1 NFA states
for n in (2, 3, 4):
    M = fig1_mnfa(n)
    N = mnfa_to_nfa(M)
    afa = mnfa_to_bfa(M, half_encoding(M.initials, M.k))
    print(f"n={n}: MNFA {M.k} states, NFA {N.k} states, AFA with {afa.n} states "
          f"(AFA: {classify_machine(afa).afa}), singletons reachable and co-reachable: {check_singletons(M)}")

# %% Plain binary encoding gives initial function !q_n: a BFA, but not literally an AFA
print("plain encoding, n=3, initial function:", mnfa_to_bfa(fig1_mnfa(3)).init)

# %% Half-final padding fails when too many states are non-final
try:
    dfa_to_afa_of_reverse(maslov_a(8))
except PreconditionError as e:
    print("no 3-state AFA from this DFA:", e)
