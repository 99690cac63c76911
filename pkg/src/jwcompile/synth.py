"""Pauli-exponential synthesis: basis change, CNOT parity ladder, RZ, uncompute."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .circuit import Circuit, Gate
from .pauli import PauliSum, PauliTerm

__all__ = [
    "PauliRotation",
    "NonCommutingError",
    "compile_pauli_rotation",
    "cnot_direction_variant",
    "compile_generator_evolution",
    "rotations_for_generator",
]

IMAG_TOL = 1e-12


class NonCommutingError(ValueError):
    """The generator's terms do not pairwise commute."""


@dataclass(frozen=True)
class PauliRotation:
    """``exp(-i (angle/2) axis)`` for a unit-coefficient, non-identity Pauli axis."""

    axis: PauliTerm
    angle: float

    def __post_init__(self):
        if self.axis.coefficient != 1:
            raise ValueError(f"rotation axis must have coefficient 1, got {self.axis.coefficient}")
        if self.axis.weight == 0:
            raise ValueError("rotation axis is the identity")
        if not math.isfinite(self.angle):
            raise ValueError("rotation angle must be finite")
        object.__setattr__(self, "angle", float(self.angle))

    @classmethod
    def from_label(cls, label: str, angle: float) -> PauliRotation:
        return cls(PauliTerm.from_label(label), angle)


def _basis_in(q: int, letter: str) -> list[Gate]:
    if letter == "X":
        return [Gate.h(q)]
    if letter == "Y":
        return [Gate.rx(q, math.pi / 2)]
    return []


def _basis_out(q: int, letter: str) -> list[Gate]:
    if letter == "X":
        return [Gate.h(q)]
    if letter == "Y":
        return [Gate.rx(q, -math.pi / 2)]
    return []


def cnot_direction_variant(rot: PauliRotation, target_choice: str = "highest") -> Circuit:
    """Compile ``rot`` with the RZ on its highest or lowest support qubit.

    ``highest`` runs the ladder upwards (``CNOT(0->1), CNOT(1->2)``);
    ``lowest`` mirrors it downwards.  Both give the same unitary up to phase.
    """
    if target_choice not in ("highest", "lowest"):
        raise ValueError(f"target_choice must be 'highest' or 'lowest', got {target_choice!r}")
    letters = rot.axis.letters
    support = list(rot.axis.support)
    chain = support if target_choice == "highest" else support[::-1]

    compute: list[Gate] = []
    for q in support:
        compute += _basis_in(q, letters[q])
    compute += [Gate.cx(c, t) for c, t in zip(chain, chain[1:])]

    uncompute = [Gate.cx(c, t) for c, t in reversed(list(zip(chain, chain[1:])))]
    for q in reversed(support):
        uncompute += _basis_out(q, letters[q])

    gates = compute + [Gate.rz(chain[-1], rot.angle)] + uncompute
    return Circuit(rot.axis.n_qubits, tuple(gates))


def compile_pauli_rotation(rot: PauliRotation) -> Circuit:
    return cnot_direction_variant(rot, "highest")


def rotations_for_generator(g: PauliSum, theta: float) -> list[PauliRotation]:
    """Per-term rotations whose product is ``exp(theta * G)``.

    Each term ``i r P`` contributes ``exp(i r theta P)``, i.e. a rotation about
    ``P`` by ``-2 r theta``.  Terms must be imaginary and pairwise commuting.
    """
    for t in g.terms:
        if abs(t.coefficient.real) > IMAG_TOL:
            raise ValueError(f"term {t.label} has non-imaginary coefficient {t.coefficient}")
        if t.weight == 0:
            raise ValueError("generator has an identity component")
    for s, t in combinations(g.terms, 2):
        if not s.commutes_with(t):
            raise NonCommutingError(
                f"{s.label} and {t.label} do not commute; sequential exponentials would not be exact"
            )
    return [
        PauliRotation(PauliTerm(1.0, t.letters), -2.0 * t.coefficient.imag * theta)
        for t in g.terms
    ]


def compile_generator_evolution(
    g: PauliSum, theta: float, target_choice: str = "highest"
) -> Circuit:
    """Circuit for ``exp(theta * G)`` with ``G`` an imaginary, commuting Pauli sum."""
    gates: list[Gate] = []
    for rot in rotations_for_generator(g, theta):
        gates += cnot_direction_variant(rot, target_choice).gates
    return Circuit(g.n_qubits, tuple(gates))
