"""Jordan-Wigner compilation of UCCSD excitations into gate circuits.

Fermionic excitation operators are mapped to Pauli sums, their exponentials
are synthesized into H / RX / RZ / CNOT circuits, and every step can be
checked against dense matrices in :mod:`jwcompile.oracle`.
"""

from .circuit import Circuit, Gate
from .fermion import (
    Excitation,
    FermionOperator,
    FermionTerm,
    Kind,
    LadderOp,
    ParseError,
    anti_hermitian_generator,
    conjugate,
    excitation_to_operator,
    parse_excitation,
    parse_operator,
)
from .gates import controlled, gate_matrix, phase_relation_check
from .oracle import (
    equal_up_to_global_phase,
    expm_antihermitian,
    matrix_of_circuit,
    matrix_of_fermion,
    matrix_of_pauli_sum,
)
from .orbitals import OrbitalSystem, SpinOrbital, enumerate_doubles, enumerate_singles, h2_sto3g, load_system
from .pauli import PauliSum, PauliTerm, jw_ladder, jw_map, single_pauli_product, sum_multiply, term_multiply
from .synth import (
    NonCommutingError,
    PauliRotation,
    cnot_direction_variant,
    compile_generator_evolution,
    compile_pauli_rotation,
)

__version__ = "0.1.0"
