"""State-complexity rows at desk scale: construction sizes against the reversal lower bound.

For each row the witnesses are converted to BFAs or AFAs, the construction
is run, and its language is checked against the DFA-level oracle.  The
lower bound comes from the minimal DFA of the reversed result language.
"""

# %% The full report for m, n in 2..3
from bfakit.complexity import bounds_report
from bfakit.oracle import minimize, product_dfa, star_dfa
from bfakit.witnesses import palmovsky_star, unary_union_k, unary_union_l

report = bounds_report(max_m=3, max_n=3, seed=0)
print(report.to_tsv())

# %% Rows that meet their bound exactly
tight = [r for r in report.rows if r.tight]
print(f"{len(tight)} of {len(report.rows)} rows are tight")
# square, reversal and the quotients use random operands, so only the upper bound is exercised

# %% Why AFA union is not tight at m = n = 2
# the unary witnesses give a 12-state minimal DFA with 8 final states; 8 fits into 2**(4-1),
# so a 4-state AFA is not excluded; from m or n = 3 on the final count exceeds half
for m, n in [(2, 2), (2, 3), (3, 3)]:
    D = minimize(product_dfa("union", unary_union_k(m), unary_union_l(n)))
    print(f"m={m} n={n}: {D.k} states, {len(D.finals)} final, half of 2**(m+n) = {2 ** (m + n - 1)}")

# %% Star: the measured sizes follow 2^(2^n - 1) + 2^(2^n - 1 - 2^(n - 1))
for n in (2, 3):
    k = 2 ** n
    size = minimize(star_dfa(palmovsky_star(k))).k
    print(f"n={n}: {size} states, formula {2 ** (k - 1) + 2 ** (k - 1 - k // 2)}")
