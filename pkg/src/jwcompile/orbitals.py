"""Spin-orbital systems and spin-conserving excitation enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from os import PathLike

from .fermion import Excitation

__all__ = [
    "SpinOrbital",
    "OrbitalSystem",
    "h2_sto3g",
    "enumerate_singles",
    "enumerate_doubles",
    "load_system",
]

SPINS = ("alpha", "beta")


@dataclass(frozen=True)
class SpinOrbital:
    index: int
    spin: str
    occupied: bool

    def __post_init__(self):
        if self.spin not in SPINS:
            raise ValueError(f"spin must be one of {SPINS}, got {self.spin!r}")


@dataclass(frozen=True)
class OrbitalSystem:
    orbitals: tuple[SpinOrbital, ...]

    def __post_init__(self):
        object.__setattr__(self, "orbitals", tuple(self.orbitals))
        for k, orb in enumerate(self.orbitals):
            if orb.index != k:
                raise ValueError(f"orbital indices must be contiguous from 0; position {k} has index {orb.index}")

    @classmethod
    def from_spec(cls, entries) -> OrbitalSystem:
        """Build from ``[(spin, occupied), ...]`` or ``[{"spin":..., "occupied":...}, ...]``."""
        orbs = []
        for k, e in enumerate(entries):
            if isinstance(e, dict):
                try:
                    spin, occ = e["spin"], e["occupied"]
                except KeyError as exc:
                    raise ValueError(f"orbital {k} is missing key {exc}") from None
            else:
                spin, occ = e
            if not isinstance(occ, bool):
                raise ValueError(f"orbital {k}: 'occupied' must be a boolean")
            orbs.append(SpinOrbital(k, spin, occ))
        return cls(tuple(orbs))

    @classmethod
    def from_json(cls, text: str) -> OrbitalSystem:
        data = json.loads(text)
        if not isinstance(data, dict) or "orbitals" not in data:
            raise ValueError("system JSON must be an object with an 'orbitals' list")
        return cls.from_spec(data["orbitals"])

    def to_json(self) -> str:
        return json.dumps({"orbitals": [{"spin": o.spin, "occupied": o.occupied} for o in self.orbitals]})

    @property
    def n_orbitals(self) -> int:
        return len(self.orbitals)

    @property
    def occupied(self) -> tuple[int, ...]:
        return tuple(o.index for o in self.orbitals if o.occupied)

    @property
    def virtual(self) -> tuple[int, ...]:
        return tuple(o.index for o in self.orbitals if not o.occupied)

    @property
    def n_electrons(self) -> int:
        return len(self.occupied)

    def spin(self, index: int) -> str:
        return self.orbitals[index].spin

    def is_allowed(self, exc: Excitation) -> bool:
        """Occupancy and pairwise spin-matching check for ``exc``."""
        if max(exc.modes) >= self.n_orbitals:
            return False
        occ = set(self.occupied)
        if not set(exc.from_modes) <= occ or set(exc.to_modes) & occ:
            return False
        return all(self.spin(i) == self.spin(a) for i, a in zip(exc.from_modes, exc.to_modes))


def h2_sto3g() -> OrbitalSystem:
    """H2 in a minimal basis, alpha orbitals first: 0a occ, 1a virt, 2b occ, 3b virt."""
    return OrbitalSystem.from_spec(
        [("alpha", True), ("alpha", False), ("beta", True), ("beta", False)]
    )


def load_system(path: str | PathLike) -> OrbitalSystem:
    with open(path, encoding="utf-8") as fh:
        return OrbitalSystem.from_json(fh.read())


def enumerate_singles(system: OrbitalSystem) -> list[Excitation]:
    return [
        Excitation((i,), (a,))
        for i in system.occupied
        for a in system.virtual
        if system.spin(i) == system.spin(a)
    ]


def enumerate_doubles(system: OrbitalSystem) -> list[Excitation]:
    """Spin-conserving doubles ``i<j -> a,b``, listed in ascending order.

    The virtual pair is written ``a<b`` unless that would pair unlike spins,
    in which case it is swapped so entry ``k`` on each side shares a spin.
    """
    out = []
    for i, j in combinations(system.occupied, 2):
        for a, b in combinations(system.virtual, 2):
            s_ij = sorted((system.spin(i), system.spin(j)))
            if s_ij != sorted((system.spin(a), system.spin(b))):
                continue
            if system.spin(i) != system.spin(a):
                a, b = b, a
            out.append(Excitation((i, j), (a, b)))
    return out
