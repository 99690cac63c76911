"""Exact matrices for the gate set.

Basis ordering is ``|0> = (1, 0)^T``.  Two-qubit matrices put the control on
the most significant bit of the index, so ``CNOT = diag(I, X)``.
"""

from __future__ import annotations

import numpy as np

from .circuit import Gate

__all__ = [
    "I2",
    "X",
    "Y",
    "Z",
    "H",
    "SX",
    "CNOT",
    "rx",
    "rz",
    "gate_matrix",
    "controlled",
    "is_unitary",
    "phase_relation_check",
]

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
SX = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


def rx(angle: float) -> np.ndarray:
    """``exp(-i angle/2 X)``."""
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def rz(angle: float) -> np.ndarray:
    """``exp(-i angle/2 Z)``."""
    return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])


def gate_matrix(gate: Gate | str, angle: float | None = None) -> np.ndarray:
    """Matrix of a :class:`Gate`, or of a gate given by name (and angle)."""
    if isinstance(gate, str):
        name = gate.lower()
    else:
        name, angle = gate.kind, gate.angle
    if name in ("rx", "rz"):
        if angle is None:
            raise ValueError(f"{name} needs an angle")
        return rx(angle) if name == "rx" else rz(angle)
    fixed = {"h": H, "sx": SX, "cx": CNOT, "cnot": CNOT, "x": X, "y": Y, "z": Z, "i": I2, "id": I2}
    try:
        return fixed[name].copy()
    except KeyError:
        raise ValueError(f"unknown gate {gate!r}") from None


def controlled(u: np.ndarray) -> np.ndarray:
    """``diag(I, u)`` for a 2x2 ``u``; the control is the high bit."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"controlled() expects a 2x2 matrix, got shape {u.shape}")
    out = np.eye(4, dtype=complex)
    out[2:, 2:] = u
    return out


def is_unitary(m: np.ndarray, tol: float = 1e-12) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) <= tol)


def phase_relation_check(tol: float = 1e-12) -> dict[str, tuple[bool, float]]:
    """Check the Rx(pi/2) / SX identities; maps name -> (passed, max deviation)."""
    r = rx(np.pi / 2)
    checks = {
        "rx(pi/2)^2 == -iX": r @ r - (-1j * X),
        "sx^2 == X": SX @ SX - X,
        "sx == exp(i pi/4) rx(pi/2)": SX - np.exp(0.25j * np.pi) * r,
    }
    out = {}
    for name, diff in checks.items():
        dev = float(np.max(np.abs(diff)))
        out[name] = (dev <= tol, dev)
    return out
