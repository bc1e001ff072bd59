"""
=========================================
Searching for the best classical reading
=========================================

Given the family of unitaries ``{U_S(k)}``, try every per-qubit basis
assignment from a finite gate set and keep those under which every member
acts as a permutation. Among those, the reading with the fewest classical
queries is the optimal one for that gate set.
"""

# %%
# Scanning with identity and Hadamard
# -----------------------------------

from oracle_lens.bits import unit_string
from oracle_lens.ccp import analyze_single, clifford_gates, gate_set, scan_family
from oracle_lens.oracles import party_unitaries, party_unitary

n = 2
result = scan_family(party_unitaries("standard", n), gate_set("IH"))
for rec in result.records:
    hits = sum(rec.per_k_classical.values())
    cost = rec.complexity.value if rec.complexity else "-"
    print(" ".join(rec.assignment.names), f"{hits}/{len(rec.per_k_classical)} classical", f"queries={cost}")
print("optimal:", [" ".join(r.assignment.names) for r in result.optimal], "at", result.optimal_complexity, "query")

# %%
# A single instance has more readings than the family
# ----------------------------------------------------
# Bob's assignment works for ``k = e_n`` alone.

for a, match in analyze_single(party_unitary("standard", n, unit_string(n, n)), gate_set("IH")):
    print(" ".join(a.names), match.oracle.table)

# %%
# The 24 single-qubit Cliffords
# -----------------------------
# A larger discrete search space finds more assignments, but none beats one
# query.

result = scan_family(party_unitaries("standard", n), clifford_gates())
print(len(result.family_classical), "family-classical assignments of", len(result.records))
print("best query count:", result.optimal_complexity, "reached by", len(result.optimal), "assignments")
