"""Gate and circuit containers with JSON and QASM-2 export."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["Gate", "Circuit"]

SINGLE = ("h", "rx", "rz", "sx")
ROTATIONS = ("rx", "rz")


@dataclass(frozen=True)
class Gate:
    """One gate.  ``qubits`` is ``(q,)`` or ``(control, target)`` for ``cx``."""

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        kind = self.kind.lower()
        if kind == "cnot":
            kind = "cx"
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if kind in SINGLE:
            if len(self.qubits) != 1:
                raise ValueError(f"{kind} acts on exactly one qubit")
        elif kind == "cx":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError("cx needs distinct control and target")
        else:
            raise ValueError(f"unknown gate {self.kind!r}")
        if kind in ROTATIONS:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{kind} needs a finite angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{kind} takes no angle")
        if min(self.qubits) < 0:
            raise ValueError("negative qubit index")

    @classmethod
    def h(cls, q):
        return cls("h", (q,))

    @classmethod
    def sx(cls, q):
        return cls("sx", (q,))

    @classmethod
    def rx(cls, q, angle):
        return cls("rx", (q,), angle)

    @classmethod
    def rz(cls, q, angle):
        return cls("rz", (q,), angle)

    @classmethod
    def cx(cls, control, target):
        return cls("cx", (control, target))

    def to_dict(self) -> dict:
        if self.kind == "cx":
            return {"gate": "cx", "control": self.qubits[0], "target": self.qubits[1]}
        d = {"gate": self.kind, "qubit": self.qubits[0]}
        if self.angle is not None:
            d["angle"] = self.angle
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Gate:
        kind = d["gate"]
        if kind.lower() in ("cx", "cnot"):
            return cls(kind, (d["control"], d["target"]))
        return cls(kind, (d["qubit"],), d.get("angle"))

    def to_qasm(self) -> str:
        if self.kind == "cx":
            c, t = self.qubits
            return f"cx q[{c}],q[{t}];"
        (q,) = self.qubits
        if self.angle is None:
            return f"{self.kind} q[{q}];"
        return f"{self.kind}({_qasm_angle(self.angle)}) q[{q}];"

    def __str__(self):
        if self.kind == "cx":
            return f"cx {self.qubits[0]}->{self.qubits[1]}"
        if self.angle is None:
            return f"{self.kind} q{self.qubits[0]}"
        return f"{self.kind}({self.angle:.4f}) q{self.qubits[0]}"


def _qasm_angle(angle: float) -> str:
    for num, txt in ((1, "pi"), (2, "pi/2"), (4, "pi/4")):
        if angle == math.pi / num:
            return txt
        if angle == -math.pi / num:
            return "-" + txt
    return repr(angle)


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.n_qubits:
                raise ValueError(f"gate {g} outside a {self.n_qubits}-qubit circuit")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if not isinstance(other, Circuit):
            return NotImplemented
        return Circuit(max(self.n_qubits, other.n_qubits), self.gates + other.gates)

    def count(self, kind: str | None = None) -> int:
        return len(self.gates) if kind is None else sum(g.kind == kind for g in self.gates)

    def gates_on(self, qubit: int) -> tuple[Gate, ...]:
        return tuple(g for g in self.gates if qubit in g.qubits)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps([g.to_dict() for g in self.gates], indent=indent)

    @classmethod
    def from_json(cls, text: str, n_qubits: int | None = None) -> Circuit:
        """Load a JSON gate list; ``n_qubits`` defaults to the highest index used."""
        data = json.loads(text)
        if isinstance(data, dict):
            n_qubits = data.get("n_qubits", n_qubits)
            data = data["gates"]
        gates = tuple(Gate.from_dict(d) for d in data)
        if n_qubits is None:
            n_qubits = 1 + max((max(g.qubits) for g in gates), default=-1)
        return cls(n_qubits, gates)

    def to_qasm(self) -> str:
        lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{self.n_qubits}];"]
        lines += [g.to_qasm() for g in self.gates]
        return "\n".join(lines)

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gates)
