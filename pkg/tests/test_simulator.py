import cmath
import math
from functools import reduce

import numpy as np
import pytest
from scipy import stats

from acsim.errors import IndexOutOfRange, LengthMismatch, WidthMismatch
from acsim.gates import Circuit, ControlledPhase, OneQubitPhase, PartialSwap, gate_matrix
from acsim.simulator import (
    StateVector,
    apply,
    circuit_unitary,
    concurrence,
    fidelity,
    init_state,
    measure_all,
    probability,
    run_circuit,
    uniform_state,
)

SY = np.array([[0, -1j], [1j, 0]])


def kron_oracle(gate, width):
    """Full-register matrix from Kronecker products and explicit permutation."""
    dim = 2**width
    if len(gate.qubits) == 1:
        ops = [np.eye(2)] * width
        ops[gate.qubits[0]] = gate_matrix(gate)
        return reduce(np.kron, ops)
    j, k = gate.qubits
    m = gate_matrix(gate)
    full = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        bits = [(col >> (width - 1 - q)) & 1 for q in range(width)]
        sub_in = 2 * bits[j] + bits[k]
        for sub_out in range(4):
            out = list(bits)
            out[j], out[k] = sub_out >> 1, sub_out & 1
            row = sum(b << (width - 1 - q) for q, b in enumerate(out))
            full[row, col] += m[sub_out, sub_in]
    return full


def random_state(rng, width):
    a = rng.normal(size=2**width) + 1j * rng.normal(size=2**width)
    return StateVector(width, a / np.linalg.norm(a))


def random_gate(rng, width):
    kind = rng.integers(3) if width > 1 else rng.integers(2)
    angle = float(rng.uniform(-2 * math.pi, 2 * math.pi))
    if kind == 0:
        return OneQubitPhase(int(rng.integers(width)), angle)
    if kind == 1:
        return PartialSwap(int(rng.integers(width)), angle)
    j, k = rng.choice(width, size=2, replace=False)
    return ControlledPhase(int(j), int(k), angle)


def test_init_state_convention():
    assert init_state(2, "00").amplitudes[0] == 1
    assert init_state(2, "10").amplitudes[2] == 1
    assert init_state(1, "1").amplitudes[1] == 1
    with pytest.raises(LengthMismatch):
        init_state(2, "1")


def test_apply_controlled_phase():
    g = 0.9
    out = apply(init_state(2, "01"), ControlledPhase(0, 1, g))
    assert np.abs(out.amplitudes - init_state(2, "01").amplitudes).max() < 1e-12
    out = apply(init_state(2, "11"), ControlledPhase(0, 1, g))
    assert abs(out.amplitudes[3] - cmath.exp(1j * g)) < 1e-12


def test_apply_full_swap():
    out = apply(init_state(1, "0"), PartialSwap(0, math.pi))
    assert abs(out.amplitudes[1] - 1) < 1e-15 and abs(out.amplitudes[0]) < 1e-15


def test_apply_index_check():
    with pytest.raises(IndexOutOfRange):
        apply(init_state(2, "00"), PartialSwap(2, 0.1))


def test_run_circuit(rng):
    psi = random_state(rng, 2)
    assert np.array_equal(run_circuit(psi, Circuit(2)).amplitudes, psi.amplitudes)
    inv = Circuit(2, [PartialSwap(0, math.pi / 2), PartialSwap(0, -math.pi / 2)])
    assert np.abs(run_circuit(psi, inv).amplitudes - psi.amplitudes).max() < 1e-12
    # u_swap(pi/2)^2 = [[0, -1], [1, 0]] by 2x2 multiplication
    out = run_circuit(init_state(1, "0"), Circuit(1, [PartialSwap(0, math.pi / 2)] * 2))
    assert abs(out.amplitudes[1] - 1) < 1e-12
    with pytest.raises(WidthMismatch):
        run_circuit(psi, Circuit(3))


def test_run_circuit_applies_global_phase():
    out = run_circuit(init_state(1, "0"), Circuit(1, [], math.pi))
    assert abs(out.amplitudes[0] + 1) < 1e-15


def test_probability():
    assert probability(init_state(2, "10"), "10") == 1.0
    assert probability(init_state(2, "10"), "01") == 0.0
    psi = apply(init_state(1, "0"), PartialSwap(0, math.pi / 2))
    assert probability(psi, "0") == pytest.approx(0.5, abs=1e-15)


def test_measure_basis_and_determinism():
    for seed in range(20):
        out = measure_all(init_state(2, "10"), seed)
        assert out.bitstring == "10"
        assert np.array_equal(out.collapsed.amplitudes, init_state(2, "10").amplitudes)
    psi = uniform_state(3)
    assert measure_all(psi, 11).bitstring == measure_all(psi, 11).bitstring


def test_measure_uniform_frequency():
    psi = uniform_state(1)
    zeros = sum(measure_all(psi, s).bitstring == "0" for s in range(10_000))
    assert 0.485 <= zeros / 10_000 <= 0.515


def test_measure_chi_square(rng):
    for _ in range(3):
        psi = random_state(rng, 2)
        counts = np.zeros(4)
        for s in range(10_000):
            counts[int(measure_all(psi, [99, s]).bitstring, 2)] += 1
        expected = 10_000 * np.array([probability(psi, format(i, "02b")) for i in range(4)])
        assert stats.chisquare(counts, expected).pvalue > 0.001


def test_kron_oracle(rng):
    for _ in range(100):
        width = int(rng.integers(1, 4))
        psi, g = random_state(rng, width), random_gate(rng, width)
        want = kron_oracle(g, width) @ psi.amplitudes
        assert np.abs(apply(psi, g).amplitudes - want).max() <= 1e-12


def test_norm_preservation(rng):
    width = 4
    circuit = Circuit(width, [random_gate(rng, width) for _ in range(100)])
    assert abs(run_circuit(random_state(rng, width), circuit).norm() - 1) <= 1e-10


def test_linearity(rng):
    for _ in range(50):
        width = int(rng.integers(1, 4))
        psi, phi, g = random_state(rng, width), random_state(rng, width), random_gate(rng, width)
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        mix = a * psi.amplitudes + b * phi.amplitudes
        scale = np.linalg.norm(mix)
        lhs = apply(StateVector(width, mix / scale), g).amplitudes * scale
        rhs = a * apply(psi, g).amplitudes + b * apply(phi, g).amplitudes
        assert np.abs(lhs - rhs).max() <= 1e-12


def concurrence_by_definition(amps):
    return abs(np.vdot(amps, np.kron(SY, SY) @ amps.conj()))


def test_concurrence_examples():
    assert concurrence(init_state(2, "00")) == 0.0
    bell = StateVector(2, np.array([1, 0, 0, 1]) / math.sqrt(2))
    assert concurrence(bell) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(WidthMismatch):
        concurrence(init_state(3, "000"))


def test_concurrence_after_braid_matches_definition():
    psi = apply(uniform_state(2), ControlledPhase(0, 1, math.pi / 2))
    # direct evaluation of the 4-vector (i, 1, 1, i)/2 gives 1.0
    assert concurrence_by_definition(psi.amplitudes) == pytest.approx(1.0, abs=1e-12)
    assert concurrence(psi) == pytest.approx(1.0, abs=1e-12)


def test_concurrence_matches_definition(rng):
    for _ in range(200):
        psi = random_state(rng, 2)
        assert concurrence(psi) == pytest.approx(concurrence_by_definition(psi.amplitudes), abs=1e-12)
        assert 0 <= concurrence(psi) <= 1 + 1e-12


def test_fidelity_exact_for_identical():
    psi = apply(uniform_state(2), ControlledPhase(0, 1, 0.123))
    assert fidelity(psi, psi) == 1.0


def test_circuit_unitary_matches_kron(rng):
    gates = [random_gate(rng, 3) for _ in range(5)]
    want = reduce(lambda acc, g: kron_oracle(g, 3) @ acc, gates, np.eye(8))
    assert np.abs(circuit_unitary(Circuit(3, gates)) - want).max() < 1e-12
