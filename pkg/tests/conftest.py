import itertools
from functools import reduce

import numpy as np
import pytest

_P = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1.0, -1.0]),
}


def pauli_decompose(m):
    """Brute-force Pauli coefficients of a 2^n x 2^n matrix by trace projection.

    Labels are written with qubit 0 rightmost.
    """
    dim = m.shape[0]
    n = dim.bit_length() - 1
    out = {}
    for label in itertools.product("IXYZ", repeat=n):
        p = reduce(np.kron, [_P[c] for c in label])
        c = np.trace(p.conj().T @ m) / dim
        if abs(c) > 1e-12:
            out["".join(label)] = complex(c)
    return out


@pytest.fixture
def decompose():
    return pauli_decompose


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    _acceptance.append((marker.args[0], marker.args[1], item.name, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, name, ok in sorted(_acceptance):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}  ({name})")
