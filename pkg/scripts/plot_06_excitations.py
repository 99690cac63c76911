"""
Which excitations are allowed
=============================

Spin conservation and Pauli exclusion on H2 and on a larger system.
"""

from jwcompile import OrbitalSystem, enumerate_doubles, enumerate_singles, h2_sto3g

h2 = h2_sto3g()
print("H2 / STO-3G")
for exc in enumerate_singles(h2) + enumerate_doubles(h2):
    print("  ", exc)

# three spatial orbitals, two electrons, alpha block then beta block
bigger = OrbitalSystem.from_spec(
    [("alpha", True), ("alpha", False), ("alpha", False), ("beta", True), ("beta", False), ("beta", False)]
)
print("\n6 spin orbitals, 2 electrons")
for exc in enumerate_singles(bigger) + enumerate_doubles(bigger):
    print("  ", exc)
