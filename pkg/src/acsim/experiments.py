"""Robustness experiments and the end-to-end demo.

Both sweeps score a gate by the fidelity of B(gamma) applied to the uniform
two-qubit state, ideal versus realized. The topological gate takes gamma
from the winding number of the perturbed loop; the dynamical comparator
takes it from the loop's enclosed area, so any deformation shows up in its
phase.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from acsim.ac_model import ACParameters, Layout, NoiseSpec, compile_circuit, execute_schedule, realize_loop
from acsim.errors import InvalidParameter, PathTooClose
from acsim.gates import Circuit, ControlledPhase
from acsim.geometry import Point2, Polyline, as_point, circle_path, enclosed_area, winding_number
from acsim.simulator import apply, fidelity, init_state, measure_all, run_circuit, uniform_state
from acsim.synthesis import cnot_construction, hadamard_gate, x_gate

CSV_HEADER = "param,trials,fault_rate,mean_fidelity,std_error"
PHASE_FAULT_TOL = 1e-9
DJ_ORACLES = ("const0", "const1", "balanced_id", "balanced_not")


@dataclass(frozen=True)
class SweepRow:
    param: float
    trials: int
    fault_rate: float
    mean_fidelity: float
    std_error: float  # standard error of fault_rate


@dataclass
class SweepResult:
    label: str
    rows: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for r in self.rows:
            buf.write(
                ",".join(
                    f"{v:.12g}" for v in (r.param, r.trials, r.fault_rate, r.mean_fidelity, r.std_error)
                )
                + "\n"
            )
        return buf.getvalue()


def _row(param, faults, fids) -> SweepRow:
    trials = len(fids)
    p = faults / trials
    return SweepRow(float(param), trials, p, float(np.mean(fids)), math.sqrt(p * (1 - p) / trials))


def dynamical_comparator_phase(path: Polyline, lambda_area: float) -> float:
    """Area-proportional phase: a non-topological stand-in gate."""
    return lambda_area * enclosed_area(path)


def _braid_state(gamma: float):
    return apply(uniform_state(2), ControlledPhase(0, 1, gamma))


def _check_trials(trials):
    if int(trials) != trials or trials < 1:
        raise InvalidParameter(f"trials must be a positive integer, got {trials}")


def sweep_deformation(
    base_path: Polyline,
    center,
    sigmas,
    trials: int,
    seed: int,
    gamma0: float = math.pi / 2,
    lambda_area: float | None = None,
) -> dict:
    """Fault rate and fidelity of the topological gate and the area-based
    comparator under Gaussian path jitter of each ``sigma``.

    ``lambda_area`` defaults to the value that gives the comparator the same
    nominal phase as the topological gate. Returns ``{"topological": ...,
    "dynamical": ...}``.
    """
    _check_trials(trials)
    c = as_point(center)
    try:
        n0 = winding_number(base_path, c).n
    except PathTooClose as exc:
        raise InvalidParameter(f"base path has no clearance: {exc}") from exc
    area0 = enclosed_area(base_path)
    if lambda_area is None:
        lambda_area = n0 * gamma0 / area0 if area0 else 1.0
    topo_ideal_phase = n0 * gamma0
    dyn_ideal_phase = dynamical_comparator_phase(base_path, lambda_area)
    topo_ideal = _braid_state(topo_ideal_phase)
    dyn_ideal = _braid_state(dyn_ideal_phase)

    topo, dyn = SweepResult("topological"), SweepResult("dynamical")
    for si, sigma in enumerate(sigmas):
        if not math.isfinite(sigma) or sigma < 0:
            raise InvalidParameter(f"sigma must be finite and >= 0, got {sigma}")
        t_faults = d_faults = 0
        t_fids, d_fids = [], []
        for t in range(trials):
            rng = np.random.default_rng([int(seed), si, t])
            path, w, _ = realize_loop(base_path, c, sigma, rng)
            n = w.n if w is not None else 0
            if w is None or n != n0:
                t_faults += 1
            t_fids.append(fidelity(topo_ideal, _braid_state(n * gamma0)))
            phase = dynamical_comparator_phase(path, lambda_area)
            if abs(phase - dyn_ideal_phase) > PHASE_FAULT_TOL:
                d_faults += 1
            d_fids.append(fidelity(dyn_ideal, _braid_state(phase)))
        topo.rows.append(_row(sigma, t_faults, t_fids))
        dyn.rows.append(_row(sigma, d_faults, d_fids))
    return {"topological": topo, "dynamical": dyn}


def sweep_winding(
    n_values,
    sigma: float,
    trials: int,
    seed: int,
    radius: float = 0.25,
    gamma0: float = math.pi / 2,
    samples_per_turn: int = 32,
) -> SweepResult:
    """Fault probability of an n-turn circular loop under fixed jitter."""
    _check_trials(trials)
    if not math.isfinite(sigma) or sigma < 0:
        raise InvalidParameter(f"sigma must be finite and >= 0, got {sigma}")
    center = Point2(0.0, 0.0)
    result = SweepResult("winding")
    for ni, n in enumerate(n_values):
        if int(n) != n or n < 1:
            raise InvalidParameter(f"winding values must be integers >= 1, got {n}")
        base = circle_path(center, radius, int(n), samples_per_turn)
        ideal = _braid_state(n * gamma0)
        fid_of = {}
        faults, fids = 0, []
        for t in range(trials):
            rng = np.random.default_rng([int(seed), ni, t])
            _, w, _ = realize_loop(base, center, sigma, rng)
            realized = w.n if w is not None else 0
            if realized != n:
                faults += 1
            if realized not in fid_of:
                fid_of[realized] = fidelity(ideal, _braid_state(realized * gamma0))
            fids.append(fid_of[realized])
        result.rows.append(_row(n, faults, fids))
    return result


def dj_circuit(oracle_id: str, params: ACParameters = ACParameters()) -> Circuit:
    """Two-qubit Deutsch-Jozsa: H x H, oracle, H on the query qubit.

    Qubit 0 is the query, qubit 1 the ancilla (prepared in |1>).
    """
    if oracle_id not in DJ_ORACLES:
        raise InvalidParameter(f"unknown oracle {oracle_id!r}; choose from {', '.join(DJ_ORACLES)}")
    oracle = Circuit(2)
    if oracle_id in ("balanced_id", "balanced_not"):
        oracle = oracle.then(cnot_construction(params))
    if oracle_id in ("const1", "balanced_not"):
        oracle = oracle.then(x_gate(1, 2))
    return hadamard_gate(0, 2).then(hadamard_gate(1, 2)).then(oracle).then(hadamard_gate(0, 2))


def demo_deutsch_jozsa(oracle_id: str, params: ACParameters = ACParameters(), seed: int = 0) -> str:
    """Compile, execute noise-free, simulate and measure; returns the verdict."""
    circuit = dj_circuit(oracle_id, params)
    schedule = compile_circuit(circuit, Layout.canonical(2), params)
    realized, _ = execute_schedule(schedule, params, NoiseSpec(), seed)
    final = run_circuit(init_state(2, "01"), realized)
    bits = measure_all(final, seed).bitstring
    return "constant" if bits[0] == "0" else "balanced"
