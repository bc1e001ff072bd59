"""
=====================================
Three classical rules, one unitary
=====================================

Steven, Alice and Bob each write down a different reversible classical
rule for a hidden string ``k``. Each then turns the rule into a unitary
by declaring which single-qubit states count as ``|0>`` and ``|1>``.
This script checks which of the resulting unitaries coincide.
"""

# %%
# The classical rules
# -------------------
# Truth tables for ``n = 2`` and ``k = 01`` (text is ``x0 x1 x2``).

from oracle_lens import linalg
from oracle_lens.bits import all_strings, format_bits
from oracle_lens.oracles import alice_oracle, bob_oracle, party_unitary, standard_oracle

n, k = 2, (0, 1)
for f in (standard_oracle(n, k), alice_oracle(n, k), bob_oracle(n, k)):
    print(f.label, " ".join(f"{i}->{o}" for i, o in f.truth_table()))

# %%
# Alice's unitary is Steven's
# ---------------------------
# Alice uses the Hadamard basis on every qubit. Her unitary agrees with
# Steven's entry for entry, for every hidden string.

for n in (1, 2, 3):
    same = all(
        linalg.equals(party_unitary("alice", n, k), party_unitary("standard", n, k))
        for k in all_strings(n)
    )
    print(f"n={n}: U_A == U_S for all k: {same}")

# %%
# Bob's unitary matches only part of the time
# -------------------------------------------
# Bob's rule reads only ``k_n``, so his unitary can only match Steven's
# where Steven's depends on ``k_n`` alone.

n = 3
for k in all_strings(n):
    eq = linalg.equals(party_unitary("bob", n, k), party_unitary("standard", n, k))
    print(format_bits(k), "U_B == U_S" if eq else "differs")
