"""Second-quantized fermionic operators and UCCSD excitation generators.

Operators are sums of products of ladder operators.  A product is stored in
written order: ``a_3^ a_1^ a_2 a_0`` is ``(3^, 1^, 2, 0)`` and the rightmost
operator acts first.  No normal ordering is ever performed.

The text notation used by :func:`parse_operator` is whitespace separated mode
tokens with a trailing ``^`` for creation, an optional ``(re,im) *`` or real
coefficient prefix, and terms joined by ``+`` or ``-``::

    "3^ 1^ 2 0"
    "1^ 0 - 0^ 1"
    "(0,0.5) * 1^ 0 + (0.25,0) * 2^ 2"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from numbers import Number

__all__ = [
    "Kind",
    "LadderOp",
    "FermionTerm",
    "FermionOperator",
    "Excitation",
    "ParseError",
    "conjugate",
    "excitation_to_operator",
    "anti_hermitian_generator",
    "parse_operator",
    "parse_excitation",
]

DROP_TOL = 1e-12


class ParseError(ValueError):
    """Raised for malformed operator or excitation strings."""


class Kind(Enum):
    CREATE = "create"
    ANNIHILATE = "annihilate"

    def dagger(self) -> Kind:
        return Kind.ANNIHILATE if self is Kind.CREATE else Kind.CREATE


@dataclass(frozen=True)
class LadderOp:
    mode: int
    kind: Kind

    def __post_init__(self):
        if not isinstance(self.mode, int) or self.mode < 0:
            raise ValueError(f"mode must be a non-negative int, got {self.mode!r}")

    @classmethod
    def create(cls, mode: int) -> LadderOp:
        return cls(mode, Kind.CREATE)

    @classmethod
    def annihilate(cls, mode: int) -> LadderOp:
        return cls(mode, Kind.ANNIHILATE)

    @property
    def is_create(self) -> bool:
        return self.kind is Kind.CREATE

    def dagger(self) -> LadderOp:
        return LadderOp(self.mode, self.kind.dagger())

    def __str__(self):
        return f"{self.mode}^" if self.is_create else f"{self.mode}"


@dataclass(frozen=True)
class FermionTerm:
    coefficient: complex
    ops: tuple[LadderOp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficient", complex(self.coefficient))
        object.__setattr__(self, "ops", tuple(self.ops))

    @property
    def max_mode(self) -> int:
        return max((op.mode for op in self.ops), default=-1)

    def __str__(self):
        ops = " ".join(str(op) for op in self.ops)
        c = self.coefficient
        return f"({c.real:g},{c.imag:g}) * {ops}".rstrip(" *") if ops else f"({c.real:g},{c.imag:g})"


def _ops_key(ops: tuple[LadderOp, ...]) -> tuple:
    return tuple((o.mode, o.kind.value) for o in ops)


def _collect(terms) -> tuple[FermionTerm, ...]:
    acc: dict[tuple[LadderOp, ...], complex] = {}
    for t in terms:
        acc[t.ops] = acc.get(t.ops, 0j) + t.coefficient
    return tuple(
        FermionTerm(c, ops) for ops, c in acc.items() if abs(c) >= DROP_TOL
    )


@dataclass(frozen=True)
class FermionOperator:
    """Complex-weighted sum of ladder-operator products on ``n_modes`` modes.

    Construction collects terms with identical operator sequences and drops
    coefficients below ``1e-12``; the first-seen order of terms is kept.
    """

    terms: tuple[FermionTerm, ...] = ()
    n_modes: int | None = None

    def __post_init__(self):
        terms = _collect(self.terms)
        highest = max((t.max_mode for t in terms), default=-1)
        n = highest + 1 if self.n_modes is None else int(self.n_modes)
        if highest >= n:
            raise ValueError(f"mode {highest} out of range for {n} modes")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "n_modes", n)

    @classmethod
    def from_ops(cls, ops, coefficient=1.0, n_modes=None) -> FermionOperator:
        return cls((FermionTerm(coefficient, tuple(ops)),), n_modes)

    @classmethod
    def identity(cls, coefficient=1.0, n_modes=0) -> FermionOperator:
        return cls((FermionTerm(coefficient, ()),), n_modes)

    def with_modes(self, n_modes: int) -> FermionOperator:
        return FermionOperator(self.terms, n_modes)

    def _combine(self, other: FermionOperator, sign: float) -> FermionOperator:
        n = max(self.n_modes, other.n_modes)
        flipped = (FermionTerm(sign * t.coefficient, t.ops) for t in other.terms)
        return FermionOperator((*self.terms, *flipped), n)

    def __add__(self, other):
        if not isinstance(other, FermionOperator):
            return NotImplemented
        return self._combine(other, 1.0)

    def __sub__(self, other):
        if not isinstance(other, FermionOperator):
            return NotImplemented
        return self._combine(other, -1.0)

    def __neg__(self):
        return -1 * self

    def __mul__(self, other):
        if isinstance(other, Number):
            return FermionOperator(
                tuple(FermionTerm(other * t.coefficient, t.ops) for t in self.terms),
                self.n_modes,
            )
        if isinstance(other, FermionOperator):
            # operator product: concatenation of written sequences
            prods = (
                FermionTerm(s.coefficient * t.coefficient, s.ops + t.ops)
                for s in self.terms
                for t in other.terms
            )
            return FermionOperator(tuple(prods), max(self.n_modes, other.n_modes))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self * other
        return NotImplemented

    def canonical(self) -> tuple[tuple[tuple[LadderOp, ...], complex], ...]:
        """Order-insensitive key used for term-level equality."""
        return tuple(sorted(((t.ops, t.coefficient) for t in self.terms), key=lambda x: _ops_key(x[0])))

    def equals(self, other: FermionOperator, tol: float = 1e-12) -> bool:
        """Term-level equality (not operator equality; see the oracle for that)."""
        a = dict(self.canonical())
        b = dict(other.canonical())
        if a.keys() != b.keys():
            return False
        return all(abs(a[k] - b[k]) <= tol for k in a)

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


def conjugate(op: FermionOperator) -> FermionOperator:
    """Hermitian adjoint: conjugate coefficients, reverse and dagger each product."""
    terms = tuple(
        FermionTerm(t.coefficient.conjugate(), tuple(o.dagger() for o in reversed(t.ops)))
        for t in op.terms
    )
    return FermionOperator(terms, op.n_modes)


@dataclass(frozen=True)
class Excitation:
    """Single or double orbital transition with a symbolic amplitude label.

    ``from_modes`` are occupied orbitals and ``to_modes`` virtual ones; entry
    ``k`` of each list are paired (same spin).  Spin matching is checked by
    :mod:`jwcompile.orbitals`, which knows the spins.
    """

    from_modes: tuple[int, ...]
    to_modes: tuple[int, ...]
    parameter_label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "from_modes", tuple(int(m) for m in self.from_modes))
        object.__setattr__(self, "to_modes", tuple(int(m) for m in self.to_modes))
        f, t = self.from_modes, self.to_modes
        if len(f) != len(t) or len(f) not in (1, 2):
            raise ValueError(f"excitation needs 1 or 2 modes on each side, got {f}->{t}")
        if len(set(f)) != len(f) or len(set(t)) != len(t):
            raise ValueError(f"repeated mode in excitation {f}->{t}")
        if set(f) & set(t):
            raise ValueError(f"from and to modes overlap in {f}->{t}")
        if min(f + t) < 0:
            raise ValueError("negative mode index")
        if not self.parameter_label:
            object.__setattr__(self, "parameter_label", "t_" + "".join(map(str, f)) + "^" + "".join(map(str, t)))

    @property
    def kind(self) -> str:
        return "single" if len(self.from_modes) == 1 else "double"

    @property
    def modes(self) -> tuple[int, ...]:
        return self.from_modes + self.to_modes

    def __str__(self):
        f = ",".join(map(str, self.from_modes))
        t = ",".join(map(str, self.to_modes))
        return f"{self.kind} {f}->{t}"


def excitation_to_operator(exc: Excitation, n_modes: int | None = None) -> FermionOperator:
    """Unit-coefficient excitation operator.

    ``i->a`` gives ``a_a^ a_i``; ``i,j->a,b`` gives ``a_b^ a_a^ a_j a_i`` so that
    ``0,2->1,3`` is ``a_3^ a_1^ a_2 a_0``.
    """
    if exc.kind == "single":
        (i,), (a,) = exc.from_modes, exc.to_modes
        ops = (LadderOp.create(a), LadderOp.annihilate(i))
    else:
        (i, j), (a, b) = exc.from_modes, exc.to_modes
        ops = (
            LadderOp.create(b),
            LadderOp.create(a),
            LadderOp.annihilate(j),
            LadderOp.annihilate(i),
        )
    return FermionOperator.from_ops(ops, 1.0, n_modes)


def anti_hermitian_generator(exc: Excitation, n_modes: int | None = None) -> FermionOperator:
    """``T - T^dagger`` for the unit excitation ``T``."""
    t = excitation_to_operator(exc, n_modes)
    return t - conjugate(t)


_MODE = re.compile(r"^(\d+)(\^?)$")
_NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_COEFF = re.compile(rf"^\(\s*({_NUMBER})\s*,\s*({_NUMBER})\s*\)$|^({_NUMBER})$")


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split on top-level ``+``/``-`` (not inside parentheses or exponents)."""
    out, depth, start, sign = [], 0, 0, 1
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        elif depth == 0 and ch in "+-" and not (k and text[k - 1] in "eE"):
            out.append((sign, text[start:k]))
            sign = 1 if ch == "+" else -1
            start = k + 1
    if depth:
        raise ParseError(f"unbalanced '(' in {text!r}")
    out.append((sign, text[start:]))
    return out


def _parse_term(chunk: str, sign: int, text: str) -> FermionTerm:
    coeff: complex = 1.0
    body = chunk
    if "*" in chunk:
        head, _, body = chunk.partition("*")
        m = _COEFF.match(head.strip())
        if not m:
            raise ParseError(f"bad coefficient {head.strip()!r} in {text!r}")
        coeff = complex(float(m[1]), float(m[2])) if m[1] is not None else float(m[3])
        if "*" in body:
            raise ParseError(f"more than one '*' in term {chunk.strip()!r}")
    ops = []
    for tok in body.split():
        m = _MODE.match(tok)
        if not m:
            raise ParseError(f"bad mode token {tok!r} in {text!r}")
        ops.append(LadderOp(int(m[1]), Kind.CREATE if m[2] else Kind.ANNIHILATE))
    return FermionTerm(sign * coeff, tuple(ops))


def parse_operator(text: str, n_modes: int | None = None) -> FermionOperator:
    """Parse the text notation; the empty string is the identity."""
    if not text.strip():
        return FermionOperator.identity(1.0, n_modes or 0)
    chunks = _split_terms(text)
    terms = []
    for k, (sign, chunk) in enumerate(chunks):
        if not chunk.strip():
            if k == 0 and len(chunks) > 1:
                continue
            raise ParseError(f"empty term in {text!r}")
        terms.append(_parse_term(chunk, sign, text))
    try:
        return FermionOperator(tuple(terms), n_modes)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


_EXC = re.compile(r"^\s*(\d+)\s*(?:,\s*(\d+)\s*)?->\s*(\d+)\s*(?:,\s*(\d+)\s*)?$")


def parse_excitation(text: str) -> Excitation:
    """Parse ``i->a`` or ``i,j->a,b``."""
    m = _EXC.match(text)
    if not m or (m[2] is None) != (m[4] is None):
        raise ParseError(f"bad excitation {text!r}; expected 'i->a' or 'i,j->a,b'")
    f = (int(m[1]),) if m[2] is None else (int(m[1]), int(m[2]))
    t = (int(m[3]),) if m[4] is None else (int(m[3]), int(m[4]))
    try:
        return Excitation(f, t)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
