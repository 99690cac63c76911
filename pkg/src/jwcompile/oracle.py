"""Dense-matrix ground truth for operators and circuits.

Qubit 0 is the rightmost Kronecker factor, i.e. the least significant bit of
a basis-state index.  :func:`matrix_of_fermion` builds ladder matrices
directly from 2x2 blocks and never touches the symbolic Pauli algebra, so it
can be used to check :func:`jwcompile.pauli.jw_map`.
"""

from __future__ import annotations

from functools import lru_cache, reduce

import numpy as np

from .circuit import Circuit
from .fermion import FermionOperator, Kind
from .gates import gate_matrix
from .pauli import PauliSum

__all__ = [
    "MAX_QUBITS",
    "matrix_of_pauli_sum",
    "matrix_of_fermion",
    "matrix_of_ladder",
    "matrix_of_circuit",
    "apply_gate_matrix",
    "expm_antihermitian",
    "equal_up_to_global_phase",
    "phase_residual",
]

MAX_QUBITS = 10

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _check_size(n: int):
    if n > MAX_QUBITS:
        raise ValueError(f"dense oracle supports at most {MAX_QUBITS} qubits, got {n}")
    if n < 0:
        raise ValueError("negative qubit count")


def _kron_desc(factors: list[np.ndarray]) -> np.ndarray:
    """Kronecker product with ``factors[q]`` on qubit ``q`` (qubit 0 rightmost)."""
    return reduce(np.kron, reversed(factors), np.eye(1, dtype=complex))


def matrix_of_pauli_sum(s: PauliSum) -> np.ndarray:
    _check_size(s.n_qubits)
    dim = 2**s.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for t in s.terms:
        out += t.coefficient * _kron_desc([_PAULI[p] for p in t.letters])
    return out


@lru_cache(maxsize=256)
def _ladder(mode: int, create: bool, n: int) -> np.ndarray:
    x, y, z, i2 = _PAULI["X"], _PAULI["Y"], _PAULI["Z"], _PAULI["I"]
    local = 0.5 * (x - 1j * y) if create else 0.5 * (x + 1j * y)
    factors = [z] * mode + [local] + [i2] * (n - mode - 1)
    m = _kron_desc(factors)
    m.setflags(write=False)
    return m


def matrix_of_ladder(mode: int, kind: Kind | str, n: int) -> np.ndarray:
    """Dense matrix of ``a_mode`` or ``a_mode^dagger`` with its Z string."""
    _check_size(n)
    if not 0 <= mode < n:
        raise ValueError(f"mode {mode} out of range for {n} qubits")
    return _ladder(mode, Kind(kind) is Kind.CREATE, n)


def matrix_of_fermion(op: FermionOperator, n: int | None = None) -> np.ndarray:
    n = op.n_modes if n is None else n
    _check_size(n)
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    for term in op.terms:
        m = np.eye(dim, dtype=complex) * term.coefficient
        for lad in term.ops:
            m = m @ matrix_of_ladder(lad.mode, lad.kind, n)
        out += m
    return out


def apply_gate_matrix(u: np.ndarray, mat: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Left-multiply ``u`` by ``mat`` embedded on ``qubits``.

    ``qubits`` lists the gate's qubits from its most significant bit down,
    e.g. ``(control, target)`` for CNOT.
    """
    k = len(qubits)
    cols = u.shape[1]
    t = u.reshape((2,) * n + (cols,))
    axes = [n - 1 - q for q in qubits]
    g = mat.reshape((2,) * (2 * k))
    t = np.tensordot(g, t, axes=(list(range(k, 2 * k)), axes))
    t = np.moveaxis(t, list(range(k)), axes)
    return t.reshape(2**n, cols)


def matrix_of_circuit(c: Circuit) -> np.ndarray:
    """Unitary of ``c``; the first gate acts first."""
    _check_size(c.n_qubits)
    n = c.n_qubits
    u = np.eye(2**n, dtype=complex)
    for g in c.gates:
        if max(g.qubits) >= n:
            raise ValueError(f"gate {g} outside a {n}-qubit circuit")
        u = apply_gate_matrix(u, gate_matrix(g), g.qubits, n)
    return u


def expm_antihermitian(m: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """``exp(m)`` for anti-Hermitian ``m`` via eigh of the Hermitian ``i m``."""
    m = np.asarray(m, dtype=complex)
    dev = np.max(np.abs(m.conj().T + m), initial=0.0)
    if dev > tol:
        raise ValueError(f"matrix is not anti-Hermitian (max |M^dag + M| = {dev:.3e})")
    lam, v = np.linalg.eigh(1j * m)
    return (v * np.exp(-1j * lam)) @ v.conj().T


def phase_residual(a: np.ndarray, b: np.ndarray) -> tuple[float, complex]:
    """``(max|a - phase*b|, phase)`` with the phase anchored at b's largest entry."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    k = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(b[k]) < 1e-12:
        raise ValueError("reference matrix is numerically zero")
    phase = a[k] / b[k]
    return float(np.max(np.abs(a - phase * b))), complex(phase)


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-10) -> tuple[bool, complex]:
    """Whether ``a == phase * b`` for some phase, and that phase."""
    res, phase = phase_residual(a, b)
    return res <= tol, phase
