"""Cross-checks between the symbolic pipeline and the dense oracle.

Each check returns a :class:`CheckResult` with the largest deviation seen.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fermion import FermionOperator, FermionTerm, Kind, LadderOp, anti_hermitian_generator
from .gates import SX, controlled, phase_relation_check, rx
from .oracle import (
    expm_antihermitian,
    matrix_of_circuit,
    matrix_of_fermion,
    matrix_of_ladder,
    matrix_of_pauli_sum,
    phase_residual,
)
from .orbitals import enumerate_doubles, enumerate_singles, h2_sto3g
from .pauli import jw_map
from .synth import PauliRotation, cnot_direction_variant, compile_generator_evolution

__all__ = ["CheckResult", "random_fermion_operator", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tol: float
    passed: bool

    def __str__(self):
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  {self.name:<40s} max dev {self.deviation:.3e} (tol {self.tol:.0e})"


def _result(name, dev, tol, cmp="le"):
    ok = dev <= tol if cmp == "le" else dev >= tol
    return CheckResult(name, float(dev), tol, bool(ok))


def random_fermion_operator(
    rng: np.random.Generator, max_modes: int = 4, max_ops: int = 4, max_terms: int = 4
) -> FermionOperator:
    n = int(rng.integers(1, max_modes + 1))
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        k = int(rng.integers(0, max_ops + 1))
        ops = tuple(
            LadderOp(int(rng.integers(0, n)), Kind.CREATE if rng.random() < 0.5 else Kind.ANNIHILATE)
            for _ in range(k)
        )
        coeff = complex(rng.normal(), rng.normal())
        terms.append(FermionTerm(coeff, ops))
    return FermionOperator(tuple(terms), n)


def check_jw_against_oracle(n_samples=200, seed=0, tol=1e-12) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_samples):
        f = random_fermion_operator(rng)
        d = np.max(np.abs(matrix_of_pauli_sum(jw_map(f)) - matrix_of_fermion(f)))
        worst = max(worst, d)
    return _result("jw_map vs direct ladder matrices", worst, tol)


def check_car(n=5, tol=1e-12) -> CheckResult:
    eye = np.eye(2**n)
    worst = 0.0
    for p in range(n):
        for q in range(n):
            a_p = matrix_of_ladder(p, Kind.ANNIHILATE, n)
            ad_p = matrix_of_ladder(p, Kind.CREATE, n)
            a_q = matrix_of_ladder(q, Kind.ANNIHILATE, n)
            ad_q = matrix_of_ladder(q, Kind.CREATE, n)
            worst = max(worst, np.max(np.abs(a_p @ ad_q + ad_q @ a_p - (p == q) * eye)))
            worst = max(worst, np.max(np.abs(a_p @ a_q + a_q @ a_p)))
            worst = max(worst, np.max(np.abs(ad_p @ ad_q + ad_q @ ad_p)))
    return _result(f"anticommutation relations, n={n}", worst, tol)


def check_h2_circuits(n_theta=20, seed=1, tol=1e-10) -> CheckResult:
    rng = np.random.default_rng(seed)
    sys = h2_sto3g()
    worst = 0.0
    for exc in enumerate_singles(sys) + enumerate_doubles(sys):
        g = jw_map(anti_hermitian_generator(exc, sys.n_orbitals))
        gm = matrix_of_pauli_sum(g)
        for theta in rng.uniform(-np.pi, np.pi, n_theta):
            u = matrix_of_circuit(compile_generator_evolution(g, theta))
            worst = max(worst, phase_residual(u, expm_antihermitian(theta * gm))[0])
    return _result("H2 excitation circuits vs expm", worst, tol)


def check_cnot_direction(n_theta=20, seed=2, tol=1e-12) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for theta in rng.uniform(-np.pi, np.pi, n_theta):
        rot = PauliRotation.from_label("XY", theta)
        u1 = matrix_of_circuit(cnot_direction_variant(rot, "highest"))
        u2 = matrix_of_circuit(cnot_direction_variant(rot, "lowest"))
        worst = max(worst, phase_residual(u1, u2)[0])
    return _result("CNOT direction options agree", worst, tol)


def check_gate_identities(tol=1e-12) -> list[CheckResult]:
    out = [_result(name, dev, tol) for name, (_, dev) in phase_relation_check(tol).items()]
    dev = phase_residual(controlled(SX), controlled(rx(np.pi / 2)))[0]
    out.append(_result("controlled sx vs rx(pi/2) differ", dev, 0.1, cmp="ge"))
    return out


def run_all(tol: float | None = None) -> list[CheckResult]:
    """Run every cross-check; ``tol`` overrides the equality tolerances."""
    kw = {} if tol is None else {"tol": tol}
    results = [
        check_jw_against_oracle(**kw),
        check_car(**kw),
        check_h2_circuits(**kw),
        check_cnot_direction(**kw),
    ]
    results += check_gate_identities(**kw)
    return results
