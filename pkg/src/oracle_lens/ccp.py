"""Classical counterparts of unitary oracles.

A unitary ``U`` has a classical counterpart under a local basis assignment
``B`` when ``B^dagger U B`` permutes reference basis states. Scanning every
assignment drawn from a finite single-qubit gate set finds all such
counterparts of an oracle family, and the one with the lowest classical
query complexity is the optimal counterpart within that set.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

import numpy as np

from . import linalg
from .bits import BitString
from .errors import DimensionError, DomainError, ResourceError
from .oracles import ClassicalOracle, LocalBasisAssignment, OracleFamily
from .query import DEFAULT_COMPLEXITY_CAP, QueryComplexityReport, min_adaptive_queries

MODES = ("strict", "phase")
DEFAULT_BUDGET = 1 << 20


class ClassicalMatch(NamedTuple):
    """A detected permutation together with its per-column phases.

    In strict mode every phase is exactly 1.
    """

    oracle: ClassicalOracle
    phases: Tuple[complex, ...]
    mode: str


def _canonical_phase(g: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    flat = g.ravel()
    first = flat[np.argmax(np.abs(flat) > tol)]
    return g * (abs(first) / first)


def clifford_gates() -> Dict[str, np.ndarray]:
    """The 24 single-qubit Cliffords modulo global phase.

    Generated breadth-first from products of H and S; each gate is named by
    the shortest word producing it (``"HS"`` is ``H @ S``), identity is
    ``"I"``, and the global phase is fixed by making the first nonzero entry
    real and positive.
    """
    gens = (("H", linalg.H), ("S", linalg.S))

    def key(g):
        return tuple(np.round(g.ravel(), 9).tolist())

    found = {key(linalg.I2): ("I", linalg.I2)}
    frontier = [("", linalg.I2)]
    while frontier:
        nxt = []
        for word, g in frontier:
            for letter, h in gens:
                c = _canonical_phase(g @ h)
                kc = key(c)
                if kc not in found:
                    found[kc] = (word + letter, c)
                    nxt.append((word + letter, c))
        frontier = nxt
    return {name: g for name, g in found.values()}


GATE_SETS = {
    "IH": lambda: {"I": linalg.I2, "H": linalg.H},
    "clifford": clifford_gates,
}


def gate_set(name: str) -> Dict[str, np.ndarray]:
    try:
        return GATE_SETS[name]()
    except KeyError:
        raise DomainError(f"unknown gate set {name!r}; choose from {', '.join(GATE_SETS)}") from None


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise DomainError(f"mode must be 'strict' or 'phase', got {mode!r}")


def _permutations(stack: np.ndarray, tol: float, mode: str) -> List[Optional[Tuple[np.ndarray, np.ndarray]]]:
    """For each matrix in ``stack`` return (row index per column, phases) or None."""
    mag = np.abs(stack)
    if mode == "strict":
        hit = np.abs(stack - 1.0) < tol
    else:
        hit = np.abs(mag - 1.0) < tol
    ok = ((hit | (mag < tol)).all(axis=1) & (hit.sum(axis=1) == 1)).all(axis=1)
    rows = np.argmax(hit, axis=1)
    dim = stack.shape[-1]
    ok &= (np.sort(rows, axis=1) == np.arange(dim)).all(axis=1)
    cols = np.arange(dim)
    return [(rows[i], stack[i, rows[i], cols]) if ok[i] else None for i in range(stack.shape[0])]


def _match(perm: np.ndarray, phases: np.ndarray, mode: str, label: str = "") -> ClassicalMatch:
    m = linalg.num_qubits(len(perm))
    if mode == "strict":
        ph = (1 + 0j,) * len(perm)
    else:
        ph = tuple(complex(z) for z in phases)
    return ClassicalMatch(ClassicalOracle(m, tuple(int(p) for p in perm), label), ph, mode)


def as_classical(mat, tol: float = linalg.DEFAULT_TOL, mode: str = "strict") -> Optional[ClassicalMatch]:
    """Read ``mat`` as a permutation of basis states, or return None.

    Strict mode accepts only columns with a single entry equal to 1 and
    zeros elsewhere. Phase mode accepts any unit-modulus entry in place of
    the 1 and reports those entries as phases.
    """
    _check_mode(mode)
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {mat.shape}")
    linalg.num_qubits(mat.shape[0])
    res = _permutations(mat[None], tol, mode)[0]
    if res is None:
        return None
    return _match(*res, mode)


def extract_ccp(u, basis: LocalBasisAssignment, tol: float = linalg.DEFAULT_TOL,
                mode: str = "strict") -> Optional[ClassicalMatch]:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape[0] != 1 << basis.m:
        raise DimensionError(f"assignment has {basis.m} qubits, matrix has dim {u.shape[0]}")
    return as_classical(linalg.conjugate_by(u, basis.full(), tol), tol, mode)


@dataclass
class CCPRecord:
    assignment: LocalBasisAssignment
    per_k_classical: Dict[BitString, bool]
    mode: str
    extracted_family: Optional[OracleFamily] = None
    complexity: Optional[QueryComplexityReport] = None

    @property
    def family_classical(self) -> bool:
        return all(self.per_k_classical.values())


@dataclass
class ScanResult:
    records: List[CCPRecord]
    mode: str
    optimal: List[CCPRecord] = field(default_factory=list)

    @property
    def family_classical(self) -> List[CCPRecord]:
        return [r for r in self.records if r.family_classical]

    @property
    def optimal_complexity(self) -> Optional[int]:
        return self.optimal[0].complexity.value if self.optimal else None


def _assignment_batches(gates: Mapping[str, np.ndarray], m: int, budget: int):
    """Yield (name tuples, stacked register basis changes) in lexicographic order.

    Each batch fixes qubits 0..m-2 and runs the last qubit over every gate,
    so concatenating batches gives the full lexicographic order.
    """
    total = len(gates) ** m
    if total > budget:
        raise ResourceError(
            f"{len(gates)}**{m} = {total} assignments exceed the scan budget of {budget}"
        )
    names = sorted(gates)
    last = np.stack([gates[nm] for nm in names])

    @functools.lru_cache(maxsize=None)
    def partial(prefix: Tuple[str, ...]) -> np.ndarray:
        # operator for qubits 0..len(prefix)-1: g_j (x) ... (x) g_0
        if not prefix:
            return np.ones((1, 1), dtype=np.complex128)
        return np.kron(gates[prefix[-1]], partial(prefix[:-1]))

    for prefix in itertools.product(names, repeat=m - 1):
        p = partial(prefix)
        dp = p.shape[0]
        stack = (last[:, :, None, :, None] * p[None, None, :, None, :]).reshape(len(names), 2 * dp, 2 * dp)
        yield [prefix + (nm,) for nm in names], stack


def _conjugate_all(bases: np.ndarray, units: np.ndarray) -> np.ndarray:
    """``B^dagger U B`` for every basis change and unitary: shape (nb, nu, d, d)."""
    return bases.conj().transpose(0, 2, 1)[:, None] @ units[None] @ bases[:, None]


def _stack(units: Mapping[BitString, np.ndarray]) -> Tuple[List[BitString], np.ndarray, int]:
    if not units:
        raise DomainError("need at least one unitary to scan")
    keys = sorted(units)
    stack = np.stack([np.asarray(units[k], dtype=np.complex128) for k in keys])
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise DimensionError("all unitaries must be square and of the same dimension")
    return keys, stack, linalg.num_qubits(stack.shape[1])


def scan_family(units: Mapping[BitString, np.ndarray], gates: Mapping[str, np.ndarray],
                mode: str = "strict", tol: float = linalg.DEFAULT_TOL,
                budget: int = DEFAULT_BUDGET,
                complexity_cap: int = DEFAULT_COMPLEXITY_CAP) -> ScanResult:
    """Try every assignment in ``gates**m`` on every member of ``units``.

    Records come out in ascending lexicographic order of the per-qubit gate
    names (qubit 0 first). Family-classical records carry the extracted
    family and its exact query complexity; ``optimal`` lists every record
    attaining the smallest finite complexity.
    """
    _check_mode(mode)
    keys, stack, m = _stack(units)
    gates = {nm: np.asarray(g, dtype=np.complex128) for nm, g in gates.items()}
    for name, g in gates.items():
        linalg.require_unitary(g, tol, f"gate {name!r}")
    n = m - 1
    if n < 1:
        raise DimensionError("oracle unitaries must act on at least two qubits")
    if any(len(k) != n for k in keys):
        raise DimensionError(f"hidden strings must have length {n} for {m}-qubit unitaries")
    if n > complexity_cap:
        raise ResourceError(f"scan needs query complexity at n={n}, cap is n <= {complexity_cap}")

    complexity_cache: Dict[Tuple, QueryComplexityReport] = {}
    records = []
    for batch_names, bases in _assignment_batches(gates, m, budget):
        conj = _conjugate_all(bases, stack)
        found_all = _permutations(conj.reshape(-1, *stack.shape[1:]), tol, mode)
        for i, names in enumerate(batch_names):
            found = found_all[i * len(keys):(i + 1) * len(keys)]
            assignment = LocalBasisAssignment._prevalidated(tuple(gates[nm] for nm in names), names)
            record = CCPRecord(assignment, {k: r is not None for k, r in zip(keys, found)}, mode)
            if record.family_classical:
                members = {k: _match(*r, mode, label=f"ccp{assignment.label()}").oracle
                           for k, r in zip(keys, found)}
                family = OracleFamily(n, "extracted", members)
                cache_key = tuple(f.table for f in family.members.values())
                if cache_key not in complexity_cache:
                    complexity_cache[cache_key] = min_adaptive_queries(family, cap=complexity_cap)
                record.extracted_family = family
                record.complexity = complexity_cache[cache_key]
            records.append(record)

    finite = [r for r in records if r.complexity is not None and r.complexity.identifiable]
    optimal = []
    if finite:
        best = min(r.complexity.value for r in finite)
        optimal = [r for r in finite if r.complexity.value == best]
    return ScanResult(records, mode, optimal)


def analyze_single(u, gates: Mapping[str, np.ndarray], mode: str = "strict",
                   tol: float = linalg.DEFAULT_TOL,
                   budget: int = DEFAULT_BUDGET) -> List[Tuple[LocalBasisAssignment, ClassicalMatch]]:
    """Every assignment under which the single unitary ``u`` is classical."""
    _check_mode(mode)
    _, stack, m = _stack({(): u})
    gates = {nm: np.asarray(g, dtype=np.complex128) for nm, g in gates.items()}
    for name, g in gates.items():
        linalg.require_unitary(g, tol, f"gate {name!r}")
    out = []
    for batch_names, bases in _assignment_batches(gates, m, budget):
        found = _permutations(_conjugate_all(bases, stack)[:, 0], tol, mode)
        for names, res in zip(batch_names, found):
            if res is not None:
                assignment = LocalBasisAssignment._prevalidated(tuple(gates[nm] for nm in names), names)
                out.append((assignment, _match(*res, mode, label=f"ccp{assignment.label()}")))
    return out
