"""
Rx(pi/2) versus SX
==================

Equal up to a global phase alone, but not once controlled.
"""

import numpy as np

from jwcompile import controlled, equal_up_to_global_phase, phase_relation_check
from jwcompile.gates import SX, rx

for name, (ok, dev) in phase_relation_check().items():
    print(f"{name:30s} {'ok' if ok else 'FAILED'} ({dev:.1e})")

ok, phase = equal_up_to_global_phase(SX, rx(np.pi / 2))
print(f"\nSX vs Rx(pi/2): equal up to phase = {ok}, phase angle = {np.angle(phase) / np.pi:.2f} pi")

ok, _ = equal_up_to_global_phase(controlled(SX), controlled(rx(np.pi / 2)))
print(f"controlled versions: equal up to phase = {ok}")
print(np.round(controlled(SX) - controlled(rx(np.pi / 2)), 3))
