"""
The double excitation a_3^ a_1^ a_2 a_0
========================================

Sixteen Pauli strings, and a check against the matrix built directly from
ladder operators.
"""

import numpy as np

from jwcompile import jw_map, matrix_of_fermion, matrix_of_pauli_sum, parse_operator

op = parse_operator("3^ 1^ 2 0")
ps = jw_map(op, 4)
print(ps)
print(f"{len(ps)} terms")

dev = np.max(np.abs(matrix_of_pauli_sum(ps) - matrix_of_fermion(op, 4)))
print(f"max deviation from the direct matrix: {dev:.1e}")

# grouping by spin species reorders a_2 past a_1^, which costs a sign
regrouped = jw_map(parse_operator("3^ 2 1^ 0"), 4)
print("a_3^ a_2 a_1^ a_0 == -(a_3^ a_1^ a_2 a_0):", regrouped.equals(-1 * ps, tol=1e-15))
