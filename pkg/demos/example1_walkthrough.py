"""A two-state BFA, traced letter by letter.

Run with ``python demos/example1_walkthrough.py``.
"""

# %% The automaton
from bfakit import Bfa, bfa_to_dfa, bfa_to_mnfa, classify_machine, minimize, print_automaton
from bfakit.machines import bfa_accepts, bfa_step

A = Bfa.build(
    2, "ab",
    {(1, "a"): "q1|q2", (1, "b"): "q1", (2, "a"): "q2", (2, "b"): "q1&!q2"},
    "q1&q2", {1},
)
print(print_automaton(A))
print("classified as", classify_machine(A))

# %% Reading "ab": substitute the transition functions into the current function
g = A.init
for letter in "ab":
    g = bfa_step(A, g, letter)
    print(f"after {letter!r}: {g!r}")
# the finality vector is (1, 0): q1 final, q2 not
print("value at the finality vector:", g(*A.finality_vector))
print("ab accepted:", bfa_accepts(A, "ab"), " empty word accepted:", bfa_accepts(A, ""))

# %% The 4-state MNFA behind it: states are assignments, its reverse is a DFA
M = bfa_to_mnfa(A)
print(print_automaton(M))

# %% And the minimal DFA of the language
D = minimize(bfa_to_dfa(A))
print(f"minimal DFA: {D.k} states (the ceiling for two BFA states is 2**4 = 16)")
print(print_automaton(D))
