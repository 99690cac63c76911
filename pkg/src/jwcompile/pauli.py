"""Pauli-string algebra with exact phases, and the Jordan-Wigner transform.

Letters are stored per qubit (``letters[q]`` acts on qubit ``q``) but labels
are displayed with qubit 0 rightmost, so ``"XYII"`` is ``X_3 Y_2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Number

from .fermion import FermionOperator, Kind

__all__ = [
    "PauliTerm",
    "PauliSum",
    "single_pauli_product",
    "term_multiply",
    "sum_multiply",
    "jw_ladder",
    "jw_map",
]

DROP_TOL = 1e-12
LETTERS = "IXYZ"

# powers of i, indexed mod 4; keeps phase products exact
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)

# (a, b) -> (power of i, letter) for the single-qubit product a·b
_TABLE: dict[tuple[str, str], tuple[int, str]] = {}
for _p in LETTERS:
    _TABLE["I", _p] = (0, _p)
    _TABLE[_p, "I"] = (0, _p)
    _TABLE[_p, _p] = (0, "I")
for _a, _b, _c in (("X", "Y", "Z"), ("Y", "Z", "X"), ("Z", "X", "Y")):
    _TABLE[_a, _b] = (1, _c)
    _TABLE[_b, _a] = (3, _c)


def single_pauli_product(a: str, b: str) -> tuple[complex, str]:
    """Return ``(phase, letter)`` with ``a @ b == phase * letter``."""
    k, c = _TABLE[a, b]
    return _I_POW[k], c


def _check_letters(letters):
    bad = set(letters) - set(LETTERS)
    if bad:
        raise ValueError(f"invalid Pauli letters {sorted(bad)}")


@dataclass(frozen=True)
class PauliTerm:
    coefficient: complex
    letters: tuple[str, ...]

    def __post_init__(self):
        c = complex(self.coefficient)
        if c != c or abs(c) == float("inf"):
            raise ValueError("coefficient must be finite")
        object.__setattr__(self, "coefficient", c)
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_letters(self.letters)

    @classmethod
    def from_label(cls, label: str, coefficient: complex = 1.0) -> PauliTerm:
        """``label`` is written with qubit 0 rightmost."""
        return cls(coefficient, tuple(reversed(label)))

    @classmethod
    def from_dict(cls, ops: dict[int, str], n_qubits: int, coefficient: complex = 1.0) -> PauliTerm:
        letters = ["I"] * n_qubits
        for q, p in ops.items():
            letters[q] = p
        return cls(coefficient, tuple(letters))

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> PauliTerm:
        return cls(coefficient, ("I",) * n_qubits)

    @property
    def n_qubits(self) -> int:
        return len(self.letters)

    @property
    def label(self) -> str:
        return "".join(reversed(self.letters))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(q for q, p in enumerate(self.letters) if p != "I")

    @property
    def weight(self) -> int:
        return len(self.support)

    def commutes_with(self, other: PauliTerm) -> bool:
        clashes = sum(
            1 for a, b in zip(self.letters, other.letters) if a != "I" and b != "I" and a != b
        )
        return clashes % 2 == 0

    def __mul__(self, other):
        if isinstance(other, PauliTerm):
            return term_multiply(self, other)
        if isinstance(other, Number):
            return PauliTerm(self.coefficient * other, self.letters)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return PauliTerm(self.coefficient * other, self.letters)
        return NotImplemented

    def __str__(self):
        return f"{_fmt(self.coefficient)} {self.label}"


def term_multiply(s: PauliTerm, t: PauliTerm) -> PauliTerm:
    if s.n_qubits != t.n_qubits:
        raise ValueError(f"qubit count mismatch: {s.n_qubits} vs {t.n_qubits}")
    power = 0
    out = []
    for a, b in zip(s.letters, t.letters):
        k, c = _TABLE[a, b]
        power += k
        out.append(c)
    return PauliTerm(s.coefficient * t.coefficient * _I_POW[power % 4], tuple(out))


def _fmt(c: complex) -> str:
    re_, im = round(c.real, 4) + 0.0, round(c.imag, 4) + 0.0
    return f"{re_:+.4f}{im:+.4f}i"


@dataclass(frozen=True)
class PauliSum:
    """Canonical sum of Pauli terms on ``n_qubits`` qubits.

    Like terms are collected, terms with ``|c| < 1e-12`` are dropped and the
    rest are sorted by display label.
    """

    n_qubits: int
    terms: tuple[PauliTerm, ...] = ()

    def __post_init__(self):
        acc: dict[tuple[str, ...], complex] = {}
        for t in self.terms:
            if t.n_qubits != self.n_qubits:
                raise ValueError(f"term on {t.n_qubits} qubits in a {self.n_qubits}-qubit sum")
            acc[t.letters] = acc.get(t.letters, 0j) + t.coefficient
        terms = sorted(
            (PauliTerm(c, k) for k, c in acc.items() if abs(c) >= DROP_TOL),
            key=lambda t: t.label,
        )
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def identity(cls, n_qubits: int, coefficient: complex = 1.0) -> PauliSum:
        return cls(n_qubits, (PauliTerm.identity(n_qubits, coefficient),))

    @classmethod
    def from_labels(cls, pairs, n_qubits: int | None = None) -> PauliSum:
        """Build from ``{label: coeff}`` or ``[(label, coeff), ...]``."""
        items = pairs.items() if isinstance(pairs, dict) else pairs
        terms = tuple(PauliTerm.from_label(lab, c) for lab, c in items)
        if n_qubits is None:
            if not terms:
                raise ValueError("n_qubits required for an empty sum")
            n_qubits = terms[0].n_qubits
        return cls(n_qubits, terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_dict(self) -> dict[str, complex]:
        return {t.label: t.coefficient for t in self.terms}

    def coefficient(self, label: str) -> complex:
        return self.as_dict().get(label, 0j)

    def __add__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        _same_size(self, other)
        return PauliSum(self.n_qubits, self.terms + other.terms)

    def __sub__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            return sum_multiply(self, other)
        if isinstance(other, Number):
            return PauliSum(self.n_qubits, tuple(t * other for t in self.terms))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self * other
        return NotImplemented

    def equals(self, other: PauliSum, tol: float = 0.0) -> bool:
        if self.n_qubits != other.n_qubits:
            return False
        a, b = self.as_dict(), other.as_dict()
        return a.keys() == b.keys() and all(abs(a[k] - b[k]) <= tol for k in a)

    def to_text(self) -> str:
        """One ``<re><sign><im>i <LETTERS>`` line per term, 4 decimals."""
        return "\n".join(str(t) for t in self.terms)

    def to_json(self, indent: int | None = None) -> str:
        data = [
            {"coeff": [t.coefficient.real, t.coefficient.imag], "letters": t.label}
            for t in self.terms
        ]
        return json.dumps(data, indent=indent)

    @classmethod
    def from_json(cls, text: str, n_qubits: int | None = None) -> PauliSum:
        data = json.loads(text)
        pairs = [(d["letters"], complex(*d["coeff"])) for d in data]
        return cls.from_labels(pairs, n_qubits)

    def __str__(self):
        return self.to_text()


def _same_size(a: PauliSum, b: PauliSum):
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}")


def sum_multiply(a: PauliSum, b: PauliSum) -> PauliSum:
    _same_size(a, b)
    return PauliSum(a.n_qubits, tuple(term_multiply(s, t) for s in a.terms for t in b.terms))


def jw_ladder(p: int, kind: Kind | str, n: int) -> PauliSum:
    """JW image ``(X_p ± iY_p)/2 · Z_{p-1}...Z_0`` of a single ladder operator.

    ``+i`` for annihilation, ``-i`` for creation.
    """
    kind = Kind(kind)
    if not 0 <= p < n:
        raise ValueError(f"mode {p} out of range for {n} qubits")
    tail = ("Z",) * p
    rest = ("I",) * (n - p - 1)
    sign = 1j if kind is Kind.ANNIHILATE else -1j
    return PauliSum(
        n,
        (
            PauliTerm(0.5, tail + ("X",) + rest),
            PauliTerm(0.5 * sign, tail + ("Y",) + rest),
        ),
    )


def jw_map(op: FermionOperator, n: int | None = None) -> PauliSum:
    """Jordan-Wigner image of a fermionic operator on ``n`` qubits."""
    n = op.n_modes if n is None else n
    if op.n_modes > n and any(t.max_mode >= n for t in op.terms):
        raise ValueError(f"operator acts on mode {max(t.max_mode for t in op.terms)} but only {n} qubits")
    cache: dict[tuple[int, Kind], PauliSum] = {}
    total: list[PauliTerm] = []
    for term in op.terms:
        acc = PauliSum.identity(n, term.coefficient)
        for lad in term.ops:
            key = (lad.mode, lad.kind)
            if key not in cache:
                cache[key] = jw_ladder(lad.mode, lad.kind, n)
            acc = sum_multiply(acc, cache[key])
        total.extend(acc.terms)
    return PauliSum(n, tuple(total))
