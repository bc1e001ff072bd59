import itertools
import random

import pytest

from helpers import bv_amplitude, plain_complexity
from oracle_lens.bits import all_strings, decode_index, format_bits
from oracle_lens.errors import DomainError, ResourceError
from oracle_lens.oracles import ClassicalOracle, OracleFamily, build_family, standard_oracle
from oracle_lens.query import (
    bv_quantum_run,
    identifiable,
    information_lower_bound,
    min_adaptive_queries,
    one_query_identifiable,
    replay_witness,
)


def test_identifiable_examples():
    assert not identifiable(build_family("bob", 2))
    assert identifiable(build_family("standard", 3))
    assert identifiable(build_family("alice", 2))


@pytest.mark.parametrize("kind, n, expected", [
    ("standard", 3, 3),
    ("alice", 3, 1),
    ("bob", 2, None),
])
def test_min_adaptive_queries_examples(kind, n, expected):
    assert min_adaptive_queries(build_family(kind, n)).value == expected


def test_single_member_family_needs_no_query():
    fam = OracleFamily(2, "one", {(1, 0): standard_oracle(2, (1, 0))})
    rep = min_adaptive_queries(fam)
    assert rep.value == 0 and rep.witness == {"leaf": "10"}
    assert information_lower_bound(fam) == 0


def test_cap_error_mentions_cap_and_state_space():
    with pytest.raises(ResourceError, match=r"n <= 4.*2\*\*32"):
        min_adaptive_queries(build_family("standard", 5))


def test_n5_allowed_with_warning_when_cap_raised():
    fam = build_family("alice", 5)
    with pytest.warns(RuntimeWarning):
        assert min_adaptive_queries(fam, cap=5).value == 1
    with pytest.raises(ResourceError):
        min_adaptive_queries(build_family("alice", 6), cap=8)


def test_one_query_identifiable_examples():
    assert one_query_identifiable(build_family("alice", 2)) == (1, 0, 0)
    assert one_query_identifiable(build_family("standard", 1)) == (0, 1)
    # brute force: no query of the standard n=2 family yields 4 distinct answers
    fam = build_family("standard", 2)
    counts = [len({f(decode_index(q, 3)) for f in fam.members.values()}) for q in range(8)]
    assert max(counts) == 2
    assert one_query_identifiable(fam) is None


def answers_per_query(fam):
    return [len({f(decode_index(q, fam.m)) for f in fam.members.values()}) for q in range(1 << fam.m)]


def test_information_lower_bound_examples():
    assert max(answers_per_query(build_family("standard", 3))) == 2
    assert information_lower_bound(build_family("standard", 3)) == 3
    assert max(answers_per_query(build_family("alice", 3))) == 8
    assert information_lower_bound(build_family("alice", 3)) == 1
    with pytest.raises(DomainError):
        information_lower_bound(build_family("bob", 2))


@pytest.mark.parametrize("kind", ["standard", "alice", "bob"])
def test_engine_matches_memo_free_n2(kind):
    fam = build_family(kind, 2)
    tables = [f.table for f in fam.members.values()]
    expected = plain_complexity(tables, 8)
    got = min_adaptive_queries(fam).value
    assert got == expected
    assert (got == 1) == (one_query_identifiable(fam) is not None)


@pytest.mark.parametrize("kind", ["standard", "alice"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lower_bound_sound_and_witness_valid(kind, n):
    fam = build_family(kind, n)
    rep = min_adaptive_queries(fam)
    assert information_lower_bound(fam) <= rep.value
    for k, f in fam.members.items():
        leaf, used = replay_witness(rep.witness, f)
        assert leaf == format_bits(k) and used <= rep.value


def test_witness_prefers_lowest_index_query():
    rep = min_adaptive_queries(build_family("standard", 2))
    # queries 0 and 1 (x1 = x2 = 0) never split; index 2 is x = (0, 1, 0)
    assert rep.witness["query"] == "010"


def test_monotone_under_member_removal():
    rng = random.Random(5)
    for kind in ("standard", "alice"):
        for n in (2, 3):
            fam = build_family(kind, n)
            full = min_adaptive_queries(fam).value
            keys = list(fam.members)
            for _ in range(15):
                sub = rng.sample(keys, rng.randint(1, len(keys)))
                subfam = OracleFamily(n, "sub", {k: fam.members[k] for k in sub})
                assert min_adaptive_queries(subfam).value <= full


def test_random_families_match_memo_free():
    rng = random.Random(17)
    for _ in range(40):
        members = {}
        for k in all_strings(2):
            perm = list(range(8))
            rng.shuffle(perm)
            members[k] = ClassicalOracle(3, tuple(perm))
        fam = OracleFamily(2, "random", members)
        assert min_adaptive_queries(fam).value == plain_complexity([f.table for f in members.values()], 8)


@pytest.mark.parametrize("n, k", [(3, (1, 0, 1)), (4, (0, 0, 0, 0)), (1, (1,))])
def test_bv_examples(n, k):
    res = bv_quantum_run(n, k)
    assert res.recovered == k
    assert abs(res.probability - 1) < 1e-9
    assert res.queries_used == 1


def test_bv_distribution_matches_closed_form():
    for k in all_strings(3):
        res = bv_quantum_run(3, k)
        for y in itertools.product((0, 1), repeat=3):
            assert res.distribution.get(y, 0.0) == pytest.approx(bv_amplitude(k, y) ** 2, abs=1e-12)


def test_bv_point_mass_all_k_up_to_6():
    for n in range(1, 7):
        for k in all_strings(n):
            res = bv_quantum_run(n, k)
            assert list(res.distribution) == [k]
            assert abs(res.probability - 1) < 1e-9


def test_bv_qubit_cap():
    with pytest.raises(ResourceError):
        bv_quantum_run(10, (1,) * 10)


@pytest.mark.parametrize("kind", ["standard", "alice"])
def test_engine_matches_memo_free_n3(kind):
    fam = build_family(kind, 3)
    tables = [f.table for f in fam.members.values()]
    assert min_adaptive_queries(fam).value == plain_complexity(tables, 16)
