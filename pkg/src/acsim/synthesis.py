"""Exact synthesis into phase gates, partial swaps and the braid phase.

One-qubit unitaries are factored as
``U = e^{i phi} u_phase(alpha) u_swap(beta) u_phase(delta)``.
Two-qubit CZ comes from one braid of half-phase pi/2 dressed by phase gates,
and CNOT conjugates it with a synthesized Hadamard on the target.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from acsim.ac_model import ACParameters, quantize
from acsim.errors import DimensionMismatch, NotUnitary
from acsim.gates import Circuit, ControlledPhase, OneQubitPhase, PartialSwap, u_phase_matrix, u_swap_matrix

UNITARY_TOL = 1e-10
GIMBAL_TOL = 1e-12

HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
CZ = np.diag([1, 1, 1, -1]).astype(np.complex128)
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)


@dataclass(frozen=True)
class EulerAngles:
    alpha: float
    beta: float
    delta: float
    global_phase: float

    def matrix(self) -> np.ndarray:
        return (
            cmath.exp(1j * self.global_phase)
            * u_phase_matrix(self.alpha)
            @ u_swap_matrix(self.beta)
            @ u_phase_matrix(self.delta)
        )


def check_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitary(f"not a square matrix: shape {u.shape}")
    err = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if err > tol:
        raise NotUnitary(f"U^dagger U deviates from identity by {err:.3e}")
    return u


def euler_decompose(u) -> EulerAngles:
    """ZYZ angles of a 2x2 unitary, with beta in [0, pi].

    When beta is 0 or pi (within 1e-12) the two Z rotations are degenerate;
    delta is then set to 0 and all of the rotation folded into alpha.
    """
    u = check_unitary(u)
    if u.shape != (2, 2):
        raise DimensionMismatch(f"expected a 2x2 unitary, got {u.shape}")
    phi = 0.5 * cmath.phase(np.linalg.det(u))
    v = cmath.exp(-1j * phi) * u
    c, s = abs(v[0, 0]), abs(v[1, 0])
    beta = 2.0 * math.atan2(s, c)
    if math.sin(0.5 * beta) <= GIMBAL_TOL:
        beta, alpha, delta = 0.0, 2.0 * cmath.phase(v[1, 1]), 0.0
    elif math.cos(0.5 * beta) <= GIMBAL_TOL:
        beta, alpha, delta = math.pi, 2.0 * cmath.phase(v[1, 0]), 0.0
    else:
        plus, minus = cmath.phase(v[1, 1]), cmath.phase(v[1, 0])
        alpha, delta = plus + minus, plus - minus
    # round-off residue on exact angles would otherwise emit no-op gates
    alpha, delta = (0.0 if abs(a) <= GIMBAL_TOL else a for a in (alpha, delta))
    return EulerAngles(alpha, beta, delta, phi)


def synthesize_one_qubit(u, target: int):
    """Gate list (application order) and global phase realizing ``u``.

    Rotations whose angle is exactly zero are dropped.
    """
    e = euler_decompose(u)
    gates = []
    if e.delta != 0.0:
        gates.append(OneQubitPhase(target, e.delta))
    if e.beta != 0.0:
        gates.append(PartialSwap(target, e.beta))
    if e.alpha != 0.0:
        gates.append(OneQubitPhase(target, e.alpha))
    return gates, e.global_phase


def phase_distance(u, v) -> float:
    """sqrt(1 - |tr(U^dagger V)| / d); zero iff U = e^{i phi} V.

    For unitaries 1 - |tr(U^dagger V)|/d equals ||U - e^{i phi} V||_F^2 / (2d)
    with e^{i phi} aligning the trace, and that form is evaluated instead:
    subtracting the overlap from 1 would leave ~1e-8 of rounding noise
    after the square root.
    """
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape:
        raise DimensionMismatch(f"shapes {u.shape} and {v.shape} differ")
    tr = np.trace(u.conj().T @ v)
    align = tr / abs(tr) if abs(tr) > 0 else 1.0
    diff = u - v / align
    return float(min(1.0, math.sqrt(np.vdot(diff, diff).real / (2 * u.shape[0]))))


def cz_construction(params: ACParameters = ACParameters()) -> Circuit:
    """CZ from B(pi/2) and a pi/2 phase gate on each qubit.

    B(pi/2) = diag(i, 1, 1, i) and u_phase(pi/2) x u_phase(pi/2) =
    diag(-i, 1, 1, i), whose product is diag(1, 1, 1, -1) exactly.

    Raises:
        PhaseNotQuantized: pi/2 is not reachable as n * gamma0.
    """
    quantize(math.pi / 2, params.gamma0, params.n_max, 2 * math.pi, 0)
    quantize(-math.pi / 2, params.gamma0, params.n_max, 4 * math.pi, 1)
    return Circuit(
        2,
        [ControlledPhase(0, 1, math.pi / 2), OneQubitPhase(0, math.pi / 2), OneQubitPhase(1, math.pi / 2)],
    )


def cnot_construction(params: ACParameters = ACParameters()) -> Circuit:
    """CNOT (control 0, target 1) as H_1 . CZ . H_1 with synthesized H."""
    h_gates, h_phase = synthesize_one_qubit(HADAMARD, 1)
    h = Circuit(2, h_gates, h_phase)
    return h.then(cz_construction(params)).then(h)


def x_gate(target: int, width: int) -> Circuit:
    gates, phase = synthesize_one_qubit(PAULI_X, target)
    return Circuit(width, gates, phase)


def hadamard_gate(target: int, width: int) -> Circuit:
    gates, phase = synthesize_one_qubit(HADAMARD, target)
    return Circuit(width, gates, phase)
