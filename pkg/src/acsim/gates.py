"""Gate set and logical circuits.

Conventions: sigma_z = |0><0| - |1><1| and sigma_y = -i|0><1| + i|1><0|.
Two-qubit matrices use the ordered basis |00>, |01>, |10>, |11> with the
left symbol belonging to the first listed qubit.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from acsim.errors import IndexOutOfRange, InvalidParameter


def _finite(name, value):
    if not math.isfinite(value):
        raise InvalidParameter(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class OneQubitPhase:
    target: int
    gamma: float

    def __post_init__(self):
        _finite("gamma", self.gamma)

    @property
    def qubits(self):
        return (self.target,)


@dataclass(frozen=True)
class PartialSwap:
    target: int
    theta: float

    def __post_init__(self):
        _finite("theta", self.theta)

    @property
    def qubits(self):
        return (self.target,)


@dataclass(frozen=True)
class ControlledPhase:
    j: int
    k: int
    gamma: float

    def __post_init__(self):
        _finite("gamma", self.gamma)
        if self.j == self.k:
            raise InvalidParameter(f"controlled phase needs two distinct qubits, got {self.j} twice")

    @property
    def qubits(self):
        return (self.j, self.k)


Gate = Union[OneQubitPhase, PartialSwap, ControlledPhase]


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list on ``width`` qubits.

    ``global_phase`` is an overall factor exp(i * global_phase) carried along
    so that a circuit denotes an exact unitary, not a projective one.
    """

    width: int
    gates: tuple = ()
    global_phase: float = 0.0

    def __post_init__(self):
        if int(self.width) != self.width or self.width < 1:
            raise InvalidParameter(f"width must be a positive integer, got {self.width}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for i, g in enumerate(self.gates):
            for q in g.qubits:
                if not 0 <= q < self.width:
                    raise IndexOutOfRange(f"gate {i}: qubit {q} outside width {self.width}")

    def __len__(self):
        return len(self.gates)

    def then(self, other: Circuit) -> Circuit:
        if other.width != self.width:
            raise InvalidParameter("cannot concatenate circuits of different width")
        return Circuit(self.width, self.gates + other.gates, self.global_phase + other.global_phase)


def u_phase_matrix(gamma: float) -> np.ndarray:
    """exp(-i gamma/2 sigma_z) = diag(e^{-i gamma/2}, e^{+i gamma/2})."""
    return np.array(
        [[cmath.exp(-0.5j * gamma), 0.0], [0.0, cmath.exp(0.5j * gamma)]], dtype=np.complex128
    )


def u_swap_matrix(theta: float) -> np.ndarray:
    """exp(-i theta/2 sigma_y), a real rotation mixing |0> and |1>."""
    c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def b_matrix(gamma: float) -> np.ndarray:
    """Controlled phase from braiding: phase e^{i gamma} on |00> and |11>."""
    p = cmath.exp(1j * gamma)
    return np.diag(np.array([p, 1.0, 1.0, p], dtype=np.complex128))


def transmission(theta: float) -> float:
    """Beam-splitter transmission T = cos(theta/2).

    Note: this is the relation as stated for the physical set up. Under the
    usual amplitude convention the transmitted probability of
    :func:`u_swap_matrix` would be cos(theta/2)**2; the two agree only at
    theta = 0 and theta = pi.
    """
    return math.cos(0.5 * theta)


def gate_matrix(g: Gate) -> np.ndarray:
    if isinstance(g, OneQubitPhase):
        return u_phase_matrix(g.gamma)
    if isinstance(g, PartialSwap):
        return u_swap_matrix(g.theta)
    if isinstance(g, ControlledPhase):
        return b_matrix(g.gamma)
    raise TypeError(f"not a gate: {g!r}")
