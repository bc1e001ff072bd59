"""Classical counterparts of quantum oracles under local basis changes."""

from .bits import decode_index, dot_mod2, encode_index, format_bits, parse_bits
from .ccp import (
    CCPRecord,
    ClassicalMatch,
    ScanResult,
    analyze_single,
    as_classical,
    clifford_gates,
    extract_ccp,
    gate_set,
    scan_family,
)
from .errors import DimensionError, DomainError, OracleLensError, ResourceError, UsageError, ValidationError
from .linalg import apply, conjugate_by, embed_single_qubit, equals, kron, kron_qubits
from .oracles import (
    ClassicalOracle,
    LocalBasisAssignment,
    OracleFamily,
    alice_assignment,
    alice_oracle,
    bob_assignment,
    bob_oracle,
    build_family,
    party_unitary,
    permutation_matrix,
    quantum_oracle,
    standard_oracle,
    steven_assignment,
)
from .query import (
    BVRunResult,
    QueryComplexityReport,
    bv_quantum_run,
    identifiable,
    information_lower_bound,
    min_adaptive_queries,
    one_query_identifiable,
)

__version__ = "0.1.0"
