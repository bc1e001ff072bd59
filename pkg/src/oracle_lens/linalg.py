"""Dense complex linear algebra for small qubit registers.

Matrices and states are plain ``numpy`` arrays of dtype ``complex128``.
Multi-qubit operators follow one ordering rule: for gates ``g_0 ... g_{m-1}``
the register operator is ``g_{m-1} (x) ... (x) g_1 (x) g_0``, so qubit 0
owns the least-significant bit of a basis index (matching
:func:`oracle_lens.bits.encode_index`).
"""

from __future__ import annotations

from typing import Any, Dict, Sequence

import numpy as np

from .errors import DimensionError, ResourceError, ValidationError

DEFAULT_TOL = 1e-9
#: Largest register (in qubits) any operation will materialize.
MAX_QUBITS = 12

_SQRT_HALF = 2 ** -0.5

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF
S = np.array([[1, 0], [0, 1j]], dtype=np.complex128)

# reference single-qubit states
UP = np.array([1, 0], dtype=np.complex128)
DOWN = np.array([0, 1], dtype=np.complex128)


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def num_qubits(dim: int) -> int:
    """Return ``m`` with ``dim == 2**m``."""
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(f"dimension {dim} is not a power of two")
    return dim.bit_length() - 1


def _check_cap(dim: int, max_qubits: int) -> None:
    if dim > 1 << max_qubits:
        raise ResourceError(
            f"matrix dimension {dim} exceeds the cap of 2**{max_qubits}; "
            "raise max_qubits to allow it"
        )


def kron(a, b, max_qubits: int = MAX_QUBITS) -> np.ndarray:
    a = _as_matrix(a)
    b = _as_matrix(b)
    _check_cap(a.shape[0] * b.shape[0], max_qubits)
    return np.kron(a, b)


def kron_qubits(gates: Sequence, max_qubits: int = MAX_QUBITS) -> np.ndarray:
    """Register operator with ``gates[j]`` acting on qubit ``j``."""
    if not gates:
        raise DimensionError("need at least one gate")
    _check_cap(1 << len(gates), max_qubits)
    out = _as_matrix(gates[0])
    for g in gates[1:]:
        out = np.kron(_as_matrix(g), out)
    return out


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = _as_matrix(a)
    err = a @ a.conj().T - np.eye(a.shape[0])
    return bool(np.max(np.abs(err)) < tol)


def require_unitary(a, tol: float = DEFAULT_TOL, what: str = "matrix") -> np.ndarray:
    a = _as_matrix(a)
    if not is_unitary(a, tol):
        raise ValidationError(f"{what} is not unitary within tol={tol:g}")
    return a


def embed_single_qubit(g, j: int, m: int, tol: float = DEFAULT_TOL,
                       max_qubits: int = MAX_QUBITS) -> np.ndarray:
    """Place the 2x2 unitary ``g`` on qubit ``j`` of an ``m``-qubit register."""
    g = require_unitary(g, tol, "gate")
    if g.shape != (2, 2):
        raise DimensionError(f"single-qubit gate must be 2x2, got {g.shape}")
    if not 0 <= j < m:
        raise DimensionError(f"qubit index {j} outside 0..{m - 1}")
    gates = [I2] * m
    gates[j] = g
    return kron_qubits(gates, max_qubits)


def conjugate_by(u, b, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return ``b^dagger u b``."""
    u = _as_matrix(u)
    b = require_unitary(b, tol, "basis change")
    if u.shape != b.shape:
        raise DimensionError(f"shape mismatch: {u.shape} vs {b.shape}")
    return b.conj().T @ u @ b


def equals(a, b, tol: float = DEFAULT_TOL, up_to_global_phase: bool = False) -> bool:
    """Entrywise comparison in max-norm, optionally modulo a global phase.

    In phase mode both matrices are divided by their entry at the position
    of the largest-modulus entry of ``a`` before comparing.
    """
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    if up_to_global_phase:
        pos = np.unravel_index(np.argmax(np.abs(a)), a.shape)
        if abs(b[pos]) < tol:
            return False
        a = a / a[pos]
        b = b / b[pos]
    return bool(np.max(np.abs(a - b)) < tol)


def apply(u, state, tol: float = DEFAULT_TOL) -> np.ndarray:
    u = require_unitary(u, tol, "operator")
    state = np.asarray(state, dtype=np.complex128)
    if state.shape != (u.shape[0],):
        raise DimensionError(f"state of shape {state.shape} does not fit {u.shape}")
    return u @ state


def basis_state(index: int, m: int) -> np.ndarray:
    """Reference-basis state ``|index>`` of an ``m``-qubit register."""
    psi = np.zeros(1 << m, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def matrix_to_json(a) -> Dict[str, Any]:
    """``{"dim": d, "entries": [[re, im], ...]}`` in row-major order."""
    a = _as_matrix(a)
    return {
        "dim": int(a.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_json(obj: Dict[str, Any]) -> np.ndarray:
    try:
        dim = int(obj["dim"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed matrix JSON: {obj!r}") from exc
    if len(entries) != dim * dim:
        raise ValidationError(f"matrix JSON has {len(entries)} entries, expected {dim * dim}")
    flat = np.array([complex(re, im) for re, im in entries], dtype=np.complex128)
    return flat.reshape(dim, dim)
