"""Classical oracles, oracle families and the quantum oracles they induce."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .bits import BitString, all_strings, as_bits, decode_index, dot_mod2, encode_index, format_bits
from .errors import DimensionError, DomainError, ResourceError, ValidationError

FAMILY_KINDS = ("standard", "alice", "bob")
#: Largest hidden-string length :func:`build_family` will enumerate.
MAX_FAMILY_N = 10


@dataclass(frozen=True)
class ClassicalOracle:
    """A reversible map on ``m``-bit strings stored as a permutation table.

    ``table[encode_index(x)] == encode_index(f(x))``.
    """

    m: int
    table: Tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        table = tuple(int(t) for t in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != 1 << self.m:
            raise ValidationError(f"table has {len(table)} entries, expected {1 << self.m}")
        if sorted(table) != list(range(len(table))):
            raise ValidationError("oracle table is not a bijection")

    @classmethod
    def from_function(cls, m: int, f: Callable[[BitString], Sequence[int]],
                      label: str = "") -> "ClassicalOracle":
        table = [encode_index(f(decode_index(i, m))) for i in range(1 << m)]
        return cls(m, tuple(table), label)

    def __call__(self, x: Sequence[int]) -> BitString:
        if len(x) != self.m:
            raise DimensionError(f"oracle takes {self.m} bits, got {len(x)}")
        return decode_index(self.table[encode_index(x)], self.m)

    def is_involution(self) -> bool:
        return all(self.table[t] == i for i, t in enumerate(self.table))

    def truth_table(self) -> List[Tuple[str, str]]:
        """Rows ``(input, output)`` as ``"x0x1...xn"`` text, in index order."""
        return [
            (format_bits(decode_index(i, self.m)), format_bits(decode_index(t, self.m)))
            for i, t in enumerate(self.table)
        ]


@dataclass(frozen=True)
class OracleFamily:
    """Oracles indexed by hidden strings.

    Built-in families cover all of ``{0,1}^n``; sub-families (any non-empty
    subset of hidden strings) are accepted so query complexity can be asked
    of them too.
    """

    n: int
    kind: str
    members: Mapping[BitString, ClassicalOracle]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("hidden strings must have n >= 1")
        if not self.members:
            raise DomainError("an oracle family needs at least one member")
        for k, f in self.members.items():
            if len(k) != self.n:
                raise DimensionError(f"hidden string {k} does not have length {self.n}")
            if f.m != self.n + 1:
                raise DimensionError(f"member for k={k} has width {f.m}, expected {self.n + 1}")
        object.__setattr__(self, "members", dict(sorted(self.members.items())))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[BitString]:
        return iter(self.members)

    @property
    def m(self) -> int:
        return self.n + 1

    def distinct_tables(self) -> set:
        return {f.table for f in self.members.values()}


def _check_k(n: int, k: Sequence[int]) -> BitString:
    k = as_bits(k)
    if n < 1 or len(k) != n:
        raise DimensionError(f"hidden string {k} does not have length n={n}")
    return k


def standard_oracle(n: int, k: Sequence[int]) -> ClassicalOracle:
    """``x_0 -> x_0 xor k.x``; all other bits unchanged."""
    k = _check_k(n, k)

    def f(x):
        return (x[0] ^ dot_mod2(k, x),) + x[1:]

    return ClassicalOracle.from_function(n + 1, f, f"standard:{format_bits(k)}")


def alice_oracle(n: int, k: Sequence[int]) -> ClassicalOracle:
    """``x_j -> x_j xor k_j x_0`` for ``j >= 1``; ``x_0`` unchanged."""
    k = _check_k(n, k)

    def f(x):
        return (x[0],) + tuple(xj ^ (kj & x[0]) for kj, xj in zip(k, x[1:]))

    return ClassicalOracle.from_function(n + 1, f, f"alice:{format_bits(k)}")


def bob_oracle(n: int, k: Sequence[int]) -> ClassicalOracle:
    """``x_n -> x_n xor k_n x_0``; every other bit unchanged. Reads only ``k_n``."""
    k = _check_k(n, k)

    def f(x):
        return x[:-1] + (x[-1] ^ (k[-1] & x[0]),)

    return ClassicalOracle.from_function(n + 1, f, f"bob:{format_bits(k)}")


CONSTRUCTORS: Dict[str, Callable[[int, Sequence[int]], ClassicalOracle]] = {
    "standard": standard_oracle,
    "alice": alice_oracle,
    "bob": bob_oracle,
}


def classical_oracle(kind: str, n: int, k: Sequence[int]) -> ClassicalOracle:
    try:
        ctor = CONSTRUCTORS[kind]
    except KeyError:
        raise DomainError(f"unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}") from None
    return ctor(n, k)


def build_family(kind: str, n: int, max_n: int = MAX_FAMILY_N) -> OracleFamily:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ResourceError(f"family size 2**{n} exceeds the cap n <= {max_n}")
    members = {k: classical_oracle(kind, n, k) for k in all_strings(n)}
    return OracleFamily(n, kind, members)


def permutation_matrix(f: ClassicalOracle) -> np.ndarray:
    """Real 0/1 matrix ``P`` with ``P[f(x), x] = 1``."""
    dim = 1 << f.m
    linalg._check_cap(dim, linalg.MAX_QUBITS)
    p = np.zeros((dim, dim), dtype=np.complex128)
    p[list(f.table), np.arange(dim)] = 1.0
    return p


@dataclass(frozen=True, eq=False)
class LocalBasisAssignment:
    """One 2x2 unitary per qubit; columns of ``gates[j]`` are ``|0_j>`` and ``|1_j>``."""

    gates: Tuple[np.ndarray, ...]
    names: Tuple[str, ...]

    def __post_init__(self):
        gates = tuple(np.asarray(g, dtype=np.complex128) for g in self.gates)
        if len(gates) != len(self.names):
            raise DimensionError("need exactly one name per gate")
        for name, g in zip(self.names, gates):
            if g.shape != (2, 2):
                raise DimensionError(f"gate {name!r} is not 2x2")
            linalg.require_unitary(g, what=f"gate {name!r}")
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def from_names(cls, names: Sequence[str], gate_set: Mapping[str, np.ndarray]) -> "LocalBasisAssignment":
        missing = [nm for nm in names if nm not in gate_set]
        if missing:
            raise DomainError(f"unknown gate name(s): {', '.join(missing)}")
        return cls(tuple(gate_set[nm] for nm in names), tuple(names))

    @classmethod
    def _prevalidated(cls, gates: Tuple[np.ndarray, ...], names: Tuple[str, ...]) -> "LocalBasisAssignment":
        # caller guarantees every gate is an already-checked 2x2 unitary
        obj = object.__new__(cls)
        object.__setattr__(obj, "gates", gates)
        object.__setattr__(obj, "names", names)
        return obj

    @property
    def m(self) -> int:
        return len(self.gates)

    def full(self, max_qubits: int = linalg.MAX_QUBITS) -> np.ndarray:
        return linalg.kron_qubits(self.gates, max_qubits)

    def label(self) -> str:
        return "(" + ",".join(self.names) + ")"

    def __eq__(self, other):
        if not isinstance(other, LocalBasisAssignment):
            return NotImplemented
        return self.names == other.names and all(
            np.array_equal(a, b) for a, b in zip(self.gates, other.gates)
        )

    def __hash__(self):
        return hash(self.names)


def steven_assignment(m: int) -> LocalBasisAssignment:
    """Reference basis on every qubit."""
    return LocalBasisAssignment((linalg.I2,) * m, ("I",) * m)


def alice_assignment(m: int) -> LocalBasisAssignment:
    """Hadamard basis on every qubit."""
    return LocalBasisAssignment((linalg.H,) * m, ("H",) * m)


def bob_assignment(m: int) -> LocalBasisAssignment:
    """Hadamard basis on qubits 0 and ``m - 1``, reference basis elsewhere.

    For ``m == 2`` this coincides with :func:`alice_assignment`.
    """
    if m < 2:
        raise DomainError("Bob's assignment needs at least two qubits")
    names = ["I"] * m
    names[0] = names[-1] = "H"
    return LocalBasisAssignment.from_names(names, {"I": linalg.I2, "H": linalg.H})


NAMED_ASSIGNMENTS = {
    "steven": steven_assignment,
    "alice": alice_assignment,
    "bob": bob_assignment,
}

#: Which basis assignment each party pairs with their classical oracle.
PARTY_BASIS = {"standard": "steven", "alice": "alice", "bob": "bob"}


def named_assignment(name: str, m: int) -> LocalBasisAssignment:
    try:
        return NAMED_ASSIGNMENTS[name](m)
    except KeyError:
        raise DomainError(f"unknown assignment {name!r}") from None


def quantum_oracle(f: ClassicalOracle, basis: LocalBasisAssignment) -> np.ndarray:
    """The unitary acting as ``f`` on the computational states chosen by ``basis``.

    Equal to ``B P B^dagger`` with ``B`` the register basis change and ``P``
    the permutation matrix of ``f``.
    """
    if basis.m != f.m:
        raise DimensionError(f"assignment has {basis.m} qubits, oracle has {f.m}")
    b = basis.full()
    return b @ permutation_matrix(f) @ b.conj().T


def party_unitary(kind: str, n: int, k: Sequence[int]) -> np.ndarray:
    """``U_S``, ``U_A`` or ``U_B`` for hidden string ``k``: each party's oracle in their own basis."""
    f = classical_oracle(kind, n, k)
    return quantum_oracle(f, named_assignment(PARTY_BASIS[kind], n + 1))


def party_unitaries(kind: str, n: int) -> Dict[BitString, np.ndarray]:
    return {k: party_unitary(kind, n, k) for k in all_strings(n)}


@dataclass
class BasisSetConfig:
    """Parsed basis-set file: named gates plus named per-qubit assignments."""

    name: str
    gates: Dict[str, np.ndarray]
    assignments: Dict[str, Tuple[str, ...]]

    def assignment(self, name: str) -> LocalBasisAssignment:
        try:
            per_qubit = self.assignments[name]
        except KeyError:
            raise DomainError(f"assignment {name!r} not defined in basis set {self.name!r}") from None
        return LocalBasisAssignment.from_names(per_qubit, self.gates)


def parse_basis_set(obj: Mapping, tol: float = linalg.DEFAULT_TOL) -> BasisSetConfig:
    """Validate the JSON form ``{"name", "gates", "assignments"}``.

    Every gate must be a unitary 2x2 matrix; assignments may only name
    gates defined in the same file.
    """
    if not isinstance(obj, Mapping):
        raise ValidationError("basis-set config must be a JSON object")
    name = str(obj.get("name", "custom"))
    gates = {}
    for gname, gjson in dict(obj.get("gates", {})).items():
        g = linalg.matrix_from_json(gjson)
        if g.shape != (2, 2):
            raise ValidationError(f"gate {gname!r} must be 2x2, got dim {g.shape[0]}")
        linalg.require_unitary(g, tol, f"gate {gname!r}")
        gates[str(gname)] = g
    assignments = {}
    for entry in obj.get("assignments", []):
        try:
            aname, per_qubit = str(entry["name"]), tuple(entry["per_qubit"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed assignment entry: {entry!r}") from exc
        unknown = [g for g in per_qubit if g not in gates]
        if unknown:
            raise ValidationError(f"assignment {aname!r} uses undefined gate(s) {unknown}")
        assignments[aname] = per_qubit
    return BasisSetConfig(name, gates, assignments)


def load_basis_set(path, tol: float = linalg.DEFAULT_TOL) -> BasisSetConfig:
    return parse_basis_set(json.loads(Path(path).read_text(encoding="utf-8")), tol)


def basis_set_to_json(cfg: BasisSetConfig) -> dict:
    return {
        "name": cfg.name,
        "gates": {nm: linalg.matrix_to_json(g) for nm, g in cfg.gates.items()},
        "assignments": [{"name": a, "per_qubit": list(pq)} for a, pq in cfg.assignments.items()],
    }
