"""
==========================================
Query counts for each classical rule
==========================================

The same unitary has three classical readings, and they are not equally
easy to learn from. Here we compute exact worst-case query counts for
identifying ``k`` and compare them with the single-query quantum run.
"""

# %%
# Exact classical complexity
# --------------------------

from oracle_lens.bits import all_strings, format_bits
from oracle_lens.oracles import build_family
from oracle_lens.query import bv_quantum_run, information_lower_bound, min_adaptive_queries

for kind in ("standard", "alice", "bob"):
    for n in (1, 2, 3, 4):
        if kind == "bob" and n == 1:
            continue
        fam = build_family(kind, n)
        rep = min_adaptive_queries(fam)
        value = rep.value if rep.identifiable else "unidentifiable"
        bound = information_lower_bound(fam) if rep.identifiable else "-"
        print(f"{kind:>8} n={n}: {value} queries (lower bound {bound})")

# %%
# A decision tree for Alice's rule
# --------------------------------
# One query with ``x0 = 1`` copies ``k`` into the output.

rep = min_adaptive_queries(build_family("alice", 2))
print(rep.witness)

# %%
# The quantum run
# ---------------
# One application of Steven's unitary recovers ``k`` with certainty.

for k in all_strings(3):
    res = bv_quantum_run(3, k)
    print(format_bits(k), "->", format_bits(res.recovered), f"p={res.probability:.3f}", f"queries={res.queries_used}")
