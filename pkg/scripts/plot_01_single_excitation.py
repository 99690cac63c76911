"""
Mapping a single excitation to Pauli strings
============================================

The alpha electron of H2 hopping from orbital 0 to orbital 1.
"""

from jwcompile import jw_ladder, jw_map, parse_operator
from jwcompile.fermion import Kind

# each ladder operator becomes (X +- iY)/2 with a Z string on lower qubits
print("a_0   ->")
print(jw_ladder(0, Kind.ANNIHILATE, 4))
print("a_1^  ->")
print(jw_ladder(1, Kind.CREATE, 4))

# the product collapses the Z_0 tail into the local Paulis on qubit 0
op = parse_operator("1^ 0")
print("\na_1^ a_0 ->")
print(jw_map(op, 4))

# subtracting the adjoint leaves only the two imaginary terms
gen = parse_operator("1^ 0 - 0^ 1")
print("\na_1^ a_0 - a_0^ a_1 ->")
print(jw_map(gen))
