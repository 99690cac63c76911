import numpy as np
import pytest

from jwcompile.circuit import Gate
from jwcompile.gates import CNOT, SX, H, X, Y, Z, I2, controlled, gate_matrix, is_unitary, phase_relation_check, rx
from jwcompile.oracle import equal_up_to_global_phase

KET0 = np.array([1, 0])
KET1 = np.array([0, 1])


def test_rx_half_pi():
    expected = np.array([[1, -1j], [-1j, 1]]) / np.sqrt(2)
    np.testing.assert_allclose(gate_matrix(Gate.rx(0, np.pi / 2)), expected, atol=1e-15)


def test_rx_zero_is_identity():
    np.testing.assert_array_equal(gate_matrix(Gate.rx(0, 0.0)), I2)


def test_sx_matrix():
    np.testing.assert_array_equal(gate_matrix(Gate.sx(0)), 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]]))


def test_rz_definition():
    t = 0.37
    np.testing.assert_allclose(gate_matrix("rz", t), np.cos(t / 2) * I2 - 1j * np.sin(t / 2) * Z, atol=1e-15)


@pytest.mark.parametrize(
    "gate",
    [Gate.h(0), Gate.sx(0), Gate.rx(0, 1.1), Gate.rz(0, -2.3), Gate.cx(0, 1), Gate.rx(0, np.pi / 2)],
)
def test_unitary(gate):
    assert is_unitary(gate_matrix(gate))


def test_gate_by_name_errors():
    with pytest.raises(ValueError):
        gate_matrix("rx")
    with pytest.raises(ValueError):
        gate_matrix("toffoli")


def test_controlled():
    np.testing.assert_array_equal(controlled(X), CNOT)
    np.testing.assert_array_equal(controlled(I2), np.eye(4))
    with pytest.raises(ValueError):
        controlled(np.eye(4))


def test_controlled_phase_becomes_relative():
    ok, _ = equal_up_to_global_phase(controlled(SX), controlled(rx(np.pi / 2)))
    assert not ok
    r = controlled(rx(np.pi / 2))
    ratio = controlled(SX)[2:, 2:] / r[2:, 2:]
    np.testing.assert_allclose(ratio, np.exp(0.25j * np.pi), atol=1e-15)
    np.testing.assert_array_equal(controlled(SX)[:2, :2], r[:2, :2])


def test_phase_relations():
    report = phase_relation_check()
    assert len(report) == 3
    assert all(ok for ok, _ in report.values())
    r = rx(np.pi / 2)
    np.testing.assert_allclose(r @ r, -1j * X, atol=1e-15)
    np.testing.assert_allclose(SX @ SX, X, atol=1e-15)
    np.testing.assert_allclose(np.exp(0.25j * np.pi) * r, SX, atol=1e-15)


def test_basis_change_conjugations():
    r = rx(np.pi / 2)
    np.testing.assert_allclose(r @ Y @ r.conj().T, Z, atol=1e-12)
    np.testing.assert_allclose(H @ X @ H, Z, atol=1e-12)


def test_ladder_matrix_identities():
    raise_, lower = X - 1j * Y, X + 1j * Y
    np.testing.assert_array_equal(raise_, [[0, 0], [2, 0]])
    np.testing.assert_array_equal(lower, [[0, 2], [0, 0]])
    np.testing.assert_array_equal(raise_ @ KET0, 2 * KET1)
    np.testing.assert_array_equal(raise_ @ KET1, 0 * KET0)
    np.testing.assert_array_equal(lower @ KET1, 2 * KET0)
    np.testing.assert_array_equal(lower @ KET0, 0 * KET0)


def test_z_parity():
    np.testing.assert_array_equal(Z @ KET0, KET0)
    np.testing.assert_array_equal(Z @ KET1, -KET1)
