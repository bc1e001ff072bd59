"""Exact deterministic query complexity and the single-query quantum run.

The classical model is zero-error adaptive identification: a decision tree
whose internal nodes query the oracle on an input string and branch on the
full output string, and whose leaves name the hidden string.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .bits import BitString, decode_index, format_bits, parse_bits
from .errors import DomainError, ResourceError
from .oracles import OracleFamily, party_unitary

DEFAULT_COMPLEXITY_CAP = 4
#: ``min_adaptive_queries`` refuses families with n above this, whatever the cap.
HARD_COMPLEXITY_LIMIT = 5
DEFAULT_BV_QUBITS = 10


@dataclass
class QueryComplexityReport:
    """Result of :func:`min_adaptive_queries`.

    ``value`` is ``None`` when the family is unidentifiable. ``witness`` is a
    decision tree in its JSON form::

        {"query": "x0x1..xn", "branches": {"<answer>": subtree}}  or  {"leaf": "k1..kn"}
    """

    value: Optional[int]
    witness: Optional[dict] = None
    states_explored: int = 0

    @property
    def identifiable(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "value": self.value if self.value is not None else "unidentifiable",
            "witness": self.witness,
            "states_explored": self.states_explored,
        }


@dataclass
class BVRunResult:
    recovered: BitString
    probability: float
    queries_used: int
    distribution: Dict[BitString, float] = field(default_factory=dict)


def identifiable(family: OracleFamily) -> bool:
    """True iff no two hidden strings share an oracle table."""
    return len(family.distinct_tables()) == len(family)


def _answer_classes(tables: Sequence[Tuple[int, ...]], subset: int, q: int) -> Dict[int, int]:
    classes: Dict[int, int] = {}
    i = 0
    s = subset
    while s:
        if s & 1:
            a = tables[i][q]
            classes[a] = classes.get(a, 0) | (1 << i)
        s >>= 1
        i += 1
    return classes


def min_adaptive_queries(family: OracleFamily, cap: int = DEFAULT_COMPLEXITY_CAP) -> QueryComplexityReport:
    """Minimum worst-case number of queries that identify ``k`` with certainty.

    Solves ``D(S) = 1 + min_q max_a D(S_a)`` over candidate sets ``S``
    (bitmasks over the members), memoized per call. Among equally good
    queries the one with the smallest index is recorded in the witness.
    """
    n = family.n
    if n > min(cap, HARD_COMPLEXITY_LIMIT):
        limit = min(cap, HARD_COMPLEXITY_LIMIT)
        raise ResourceError(
            f"exact query complexity is capped at n <= {limit} (got n={n}); "
            f"the engine would search up to 2**{len(family)} candidate subsets "
            f"with {1 << family.m} queries each"
        )
    if n == HARD_COMPLEXITY_LIMIT:
        warnings.warn("exact query complexity at n = 5 may be slow", RuntimeWarning, stacklevel=2)

    keys = list(family.members)
    if not identifiable(family):
        return QueryComplexityReport(None, None, 0)

    tables = [family.members[k].table for k in keys]
    n_queries = 1 << family.m
    memo: Dict[int, Tuple[int, int]] = {}

    def solve(subset: int) -> int:
        if subset & (subset - 1) == 0:
            return 0
        hit = memo.get(subset)
        if hit is not None:
            return hit[0]
        best, best_q = None, -1
        for q in range(n_queries):
            classes = _answer_classes(tables, subset, q)
            if len(classes) == 1:
                continue
            worst = 0
            for child in classes.values():
                worst = max(worst, solve(child))
                if best is not None and worst + 1 >= best:
                    break
            if best is None or worst + 1 < best:
                best, best_q = worst + 1, q
                if best == 1:
                    break
        # distinct tables guarantee some query splits any subset of size >= 2
        assert best is not None
        memo[subset] = (best, best_q)
        return best

    def tree(subset: int) -> dict:
        if subset & (subset - 1) == 0:
            return {"leaf": format_bits(keys[subset.bit_length() - 1])}
        _, q = memo[subset]
        classes = _answer_classes(tables, subset, q)
        return {
            "query": format_bits(decode_index(q, family.m)),
            "branches": {
                format_bits(decode_index(a, family.m)): tree(child)
                for a, child in sorted(classes.items())
            },
        }

    full = (1 << len(keys)) - 1
    value = solve(full)
    return QueryComplexityReport(value, tree(full), len(memo))


def replay_witness(witness: dict, oracle) -> Tuple[str, int]:
    """Run a witness tree against one oracle; return (leaf label, queries used)."""
    node, used = witness, 0
    while "leaf" not in node:
        answer = format_bits(oracle(parse_bits(node["query"])))
        node = node["branches"][answer]
        used += 1
    return node["leaf"], used


def one_query_identifiable(family: OracleFamily) -> Optional[BitString]:
    """Lowest-index query whose answer alone determines ``k``, if any."""
    tables = [f.table for f in family.members.values()]
    for q in range(1 << family.m):
        if len({t[q] for t in tables}) == len(tables):
            return decode_index(q, family.m)
    return None


def information_lower_bound(family: OracleFamily) -> int:
    """Smallest ``d`` with ``A_max**d >= N``.

    ``N`` counts distinct members and ``A_max`` is the largest number of
    distinct answers any single query can produce.
    """
    if not identifiable(family):
        raise DomainError("information bound is undefined for an unidentifiable family")
    tables = list(family.distinct_tables())
    count = len(tables)
    if count == 1:
        return 0
    a_max = max(len({t[q] for t in tables}) for q in range(1 << family.m))
    d, reach = 0, 1
    while reach < count:
        reach *= a_max
        d += 1
    return d


def bv_quantum_run(n: int, k: Sequence[int], max_qubits: int = DEFAULT_BV_QUBITS,
                   tol: float = linalg.DEFAULT_TOL) -> BVRunResult:
    """Simulate the single-query Bernstein-Vazirani circuit on ``U_S(k)``.

    Start in ``|0...0>``, flip qubit 0, Hadamard every qubit, apply the
    oracle once, Hadamard qubits 1..n, then read qubits 1..n.
    """
    m = n + 1
    if m > max_qubits:
        raise ResourceError(f"BV run needs {m} qubits, cap is {max_qubits}")
    oracle = party_unitary("standard", n, k)
    queries = 0

    def query(state):
        nonlocal queries
        queries += 1
        return oracle @ state

    psi = linalg.basis_state(0, m)
    psi = linalg.apply(linalg.embed_single_qubit(linalg.X, 0, m, max_qubits=max_qubits), psi)
    psi = linalg.kron_qubits([linalg.H] * m, max_qubits) @ psi
    psi = query(psi)
    psi = linalg.kron_qubits([linalg.I2] + [linalg.H] * n, max_qubits) @ psi

    probs = np.abs(psi) ** 2
    # marginalize out qubit 0 (the LSB): index = 2 * outcome + x0
    marginal = probs.reshape(-1, 2).sum(axis=1)
    best = int(np.argmax(marginal))
    distribution = {
        decode_index(i, n): float(p) for i, p in enumerate(marginal) if p > tol
    }
    return BVRunResult(decode_index(best, n), float(marginal[best]), queries, distribution)
