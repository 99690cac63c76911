"""
Compiling exp(theta (T - T^dagger)) into gates
==============================================

Basis change, CNOT parity ladder, RZ, and uncompute, for each commuting
Pauli term of the generator.
"""

from jwcompile import (
    Excitation,
    anti_hermitian_generator,
    compile_generator_evolution,
    expm_antihermitian,
    jw_map,
    matrix_of_circuit,
    matrix_of_pauli_sum,
)
from jwcompile.oracle import phase_residual

theta = 0.5
for exc in [Excitation((0,), (1,)), Excitation((0,), (2,)), Excitation((0, 2), (1, 3))]:
    g = jw_map(anti_hermitian_generator(exc, 4), 4)
    circ = compile_generator_evolution(g, theta)
    exact = expm_antihermitian(theta * matrix_of_pauli_sum(g))
    res, _ = phase_residual(matrix_of_circuit(circ), exact)
    print(f"{exc}: {len(g)} terms, {len(circ)} gates, residual {res:.1e}")

print()
print(compile_generator_evolution(jw_map(anti_hermitian_generator(Excitation((0,), (1,)))), theta).to_qasm())
