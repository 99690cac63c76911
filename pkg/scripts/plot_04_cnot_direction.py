"""
Either CNOT direction works
===========================

Z_1 Z_0 is symmetric, so the parity can be collected on either qubit.
"""

from jwcompile import PauliRotation, cnot_direction_variant, matrix_of_circuit
from jwcompile.oracle import phase_residual

rot = PauliRotation.from_label("XY", 0.7)
opt1 = cnot_direction_variant(rot, "highest")
opt2 = cnot_direction_variant(rot, "lowest")
print("target q1:\n" + opt1.to_text())
print("\ntarget q0:\n" + opt2.to_text())

res, phase = phase_residual(matrix_of_circuit(opt1), matrix_of_circuit(opt2))
print(f"\nresidual {res:.1e}, relative phase {phase:.3f}")
