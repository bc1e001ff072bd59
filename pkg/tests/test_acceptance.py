"""Exit criteria A1-A8. Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``.
"""

import json
import random
import subprocess
import sys
import time

import numpy as np
import pytest

from helpers import plain_complexity
from oracle_lens import linalg
from oracle_lens.bits import all_strings, unit_string
from oracle_lens.ccp import clifford_gates, extract_ccp, gate_set, scan_family
from oracle_lens.oracles import ClassicalOracle, LocalBasisAssignment, build_family, party_unitaries, party_unitary, quantum_oracle
from oracle_lens.query import (
    bv_quantum_run,
    information_lower_bound,
    min_adaptive_queries,
    one_query_identifiable,
)

TOL = 1e-9


@pytest.fixture
def verdict(capsys):
    def emit(tag, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{tag}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"{tag}: {detail}"
    return emit


def test_a1_alice_identity(verdict):
    start = time.perf_counter()
    bad = [
        (n, k) for n in (1, 2, 3, 4) for k in all_strings(n)
        if not linalg.equals(party_unitary("alice", n, k), party_unitary("standard", n, k), TOL)
    ]
    elapsed = time.perf_counter() - start
    verdict("A1", not bad and elapsed < 1.0,
            f"U_A(k) == U_S(k) for all k, n<=4; mismatches={bad}; {elapsed:.3f}s (<1s)")


def test_a2_bob_identity_scope(verdict):
    failures = []
    for n in (2, 3):
        target = party_unitary("standard", n, unit_string(n, n))
        ident = np.eye(1 << (n + 1))
        for k in all_strings(n):
            ub = party_unitary("bob", n, k)
            expected = target if k[-1] else ident
            if not linalg.equals(ub, expected, TOL):
                failures.append(("shape", n, k))
            if any(k[:-1]) and linalg.equals(ub, party_unitary("standard", n, k), TOL):
                failures.append(("spurious equality", n, k))
    verdict("A2", not failures, f"U_B(k) = U_S(e_n) iff k_n=1 else I; no equality off e_n; failures={failures}")


def test_a3_classical_query_counts(verdict):
    got = {}
    start = time.perf_counter()
    for n in (1, 2, 3, 4):
        got[("standard", n)] = min_adaptive_queries(build_family("standard", n)).value
        got[("alice", n)] = min_adaptive_queries(build_family("alice", n)).value
    for n in (2, 3, 4):
        got[("bob", n)] = min_adaptive_queries(build_family("bob", n)).value
    elapsed = time.perf_counter() - start
    expected = {("standard", n): n for n in (1, 2, 3, 4)}
    expected.update({("alice", n): 1 for n in (1, 2, 3, 4)})
    expected.update({("bob", n): None for n in (2, 3, 4)})
    verdict("A3", got == expected and elapsed < 10.0,
            f"standard=n, alice=1, bob=unidentifiable; {elapsed:.3f}s (<10s)")


def test_a4_quantum_single_query(verdict):
    start = time.perf_counter()
    bad = []
    for n in range(1, 7):
        for k in all_strings(n):
            res = bv_quantum_run(n, k)
            if res.recovered != k or abs(res.probability - 1) >= TOL or res.queries_used != 1:
                bad.append((n, k))
    elapsed = time.perf_counter() - start
    verdict("A4", not bad and elapsed < 5.0,
            f"BV recovers k with p within 1e-9 of 1 in one query, n<=6; failures={bad}; {elapsed:.3f}s (<5s)")


def test_a5_scan_result(verdict):
    summary = {}
    ok = True
    for n in (2, 3):
        result = scan_family(party_unitaries("standard", n), gate_set("IH"), mode="strict")
        classical = {r.assignment.names: r.complexity.value for r in result.family_classical}
        expected = {("I",) * (n + 1): n, ("H",) * (n + 1): 1}
        optimal = [r.assignment.names for r in result.optimal]
        ok &= len(result.records) == 2 ** (n + 1)
        ok &= classical == expected and optimal == [("H",) * (n + 1)]
        summary[n] = (classical, optimal)
    verdict("A5", ok, f"exactly all-I (complexity n) and all-H (complexity 1); optimal all-H: {summary}")


def test_a6_roundtrip(verdict):
    rng = random.Random(6)
    cl = clifford_gates()
    names = sorted(cl)
    failures = 0
    for _ in range(100):
        m = rng.randint(1, 3)
        perm = list(range(1 << m))
        rng.shuffle(perm)
        f = ClassicalOracle(m, tuple(perm))
        b = LocalBasisAssignment.from_names([rng.choice(names) for _ in range(m)], cl)
        u = quantum_oracle(f, b)
        strict = extract_ccp(u, b, TOL, "strict")
        phase = extract_ccp(u, b, TOL, "phase")
        if strict is None or strict.oracle != f:
            failures += 1
        elif phase is None or phase.oracle != f or not np.allclose(phase.phases, 1, atol=TOL):
            failures += 1
    verdict("A6", failures == 0, f"100 random (f, Clifford B) round trips; failures={failures}")


def test_a7_engine_cross_validation(verdict):
    notes = {}
    ok = True
    for kind in ("standard", "alice", "bob"):
        fam = build_family(kind, 2)
        engine = min_adaptive_queries(fam).value
        plain = plain_complexity([f.table for f in fam.members.values()], 1 << fam.m)
        one = one_query_identifiable(fam)
        ok &= engine == plain
        ok &= (engine == 1) == (one is not None)
        if engine is not None:
            ok &= information_lower_bound(fam) <= engine
        notes[kind] = (engine, plain, one)
    verdict("A7", ok, f"memo vs memo-free vs one-query vs lower bound at n=2: {notes}")


CLI_RUNS = [
    ["bv", "--n", "4", "--k", "1011"],
    ["complexity", "--family", "standard", "--n", "3", "--witness"],
    ["equivalence", "--left", "alice", "--right", "standard", "--n", "3"],
    ["scan", "--family", "standard", "--n", "3", "--gate-set", "IH"],
    ["table", "--family", "bob", "--n", "2", "--k", "01"],
]


def test_a8_determinism(verdict):
    differing = []
    for args in CLI_RUNS:
        outs = [
            subprocess.run([sys.executable, "-m", "oracle_lens", *args, "--format", "json"],
                           capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        json.loads(outs[0])
        if outs[0] != outs[1]:
            differing.append(args[0])
    verdict("A8", not differing, f"byte-identical JSON across repeated runs of every command; differing={differing}")
