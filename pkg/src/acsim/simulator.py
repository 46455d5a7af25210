"""State-vector simulation.

Amplitude index convention: the label b0 b1 ... b_{N-1} (qubit 0 leftmost)
sits at index sum(b_j * 2**(N-1-j)), i.e. qubit 0 is the most significant
bit and axis 0 of the ``(2,)*N`` tensor view.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from acsim.errors import IndexOutOfRange, LengthMismatch, WidthMismatch
from acsim.gates import Circuit, Gate, gate_matrix

NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class StateVector:
    width: int
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if a.shape[0] != 2**self.width:
            raise WidthMismatch(f"{a.shape[0]} amplitudes for width {self.width}")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(np.vdot(self.amplitudes, self.amplitudes).real - 1.0) <= tol


@dataclass(frozen=True)
class MeasurementOutcome:
    bitstring: str
    collapsed: StateVector


def _index(width: int, bitstring: str) -> int:
    if len(bitstring) != width:
        raise LengthMismatch(f"bitstring {bitstring!r} has length {len(bitstring)}, expected {width}")
    if set(bitstring) - {"0", "1"}:
        raise LengthMismatch(f"bitstring {bitstring!r} is not binary")
    return int(bitstring, 2)


def init_state(width: int, bitstring: str) -> StateVector:
    a = np.zeros(2**width, dtype=np.complex128)
    a[_index(width, bitstring)] = 1.0
    return StateVector(width, a)


def uniform_state(width: int) -> StateVector:
    return StateVector(width, np.full(2**width, 2 ** (-width / 2), dtype=np.complex128))


def apply(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate; returns a new state."""
    n = state.width
    qubits = gate.qubits
    for q in qubits:
        if not 0 <= q < n:
            raise IndexOutOfRange(f"qubit {q} outside width {n}")
    m = gate_matrix(gate)
    psi = state.amplitudes.reshape((2,) * n)
    k = len(qubits)
    # contract the gate's input indices with the target axes; the output
    # indices land in front and are moved back into place
    out = np.tensordot(m.reshape((2,) * (2 * k)), psi, axes=(list(range(k, 2 * k)), list(qubits)))
    out = np.moveaxis(out, list(range(k)), list(qubits))
    return StateVector(n, out.reshape(-1))


def run_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if circuit.width != state.width:
        raise WidthMismatch(f"circuit width {circuit.width} != state width {state.width}")
    for g in circuit.gates:
        state = apply(state, g)
    if circuit.global_phase:
        state = StateVector(state.width, state.amplitudes * cmath.exp(1j * circuit.global_phase))
    return state


def probability(state: StateVector, bitstring: str) -> float:
    return float(abs(state.amplitudes[_index(state.width, bitstring)]) ** 2)


def probabilities(state: StateVector) -> np.ndarray:
    p = np.abs(state.amplitudes) ** 2
    return p / p.sum()


def measure_all(state: StateVector, seed) -> MeasurementOutcome:
    """Sample every qubit in the computational basis (Born rule)."""
    rng = np.random.default_rng(seed)
    idx = int(rng.choice(2**state.width, p=probabilities(state)))
    bits = format(idx, f"0{state.width}b")
    return MeasurementOutcome(bits, init_state(state.width, bits))


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2 normalised by both norms; exactly 1.0 for identical inputs."""
    ov = np.vdot(a.amplitudes, b.amplitudes)
    na = np.vdot(a.amplitudes, a.amplitudes).real
    nb = np.vdot(b.amplitudes, b.amplitudes).real
    return float(min(1.0, abs(ov) ** 2 / (na * nb)))


def concurrence(state: StateVector) -> float:
    """Pure-state concurrence |<psi| sigma_y x sigma_y |psi*>| of two qubits."""
    if state.width != 2:
        raise WidthMismatch(f"concurrence needs width 2, got {state.width}")
    a00, a01, a10, a11 = state.amplitudes
    return float(abs(2.0 * (a00 * a11 - a01 * a10)))


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full 2^N x 2^N matrix of a circuit, column by column."""
    dim = 2**circuit.width
    cols = []
    for i in range(dim):
        basis = np.zeros(dim, dtype=np.complex128)
        basis[i] = 1.0
        cols.append(run_circuit(StateVector(circuit.width, basis), circuit).amplitudes)
    return np.column_stack(cols)
