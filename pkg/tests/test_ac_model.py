import cmath
import math

import numpy as np
import pytest

from acsim.ac_model import (
    ACParameters,
    BeamSplitter,
    BraidSchedule,
    ConditionalSelfLoop,
    InterQubitLoop,
    Layout,
    NoiseSpec,
    ac_phase,
    canonical_loop,
    compile_circuit,
    crosstalk_phase,
    execute_schedule,
    gate_of_move,
    cond_loop,
    inter_loop,
    quantize,
    schedule_circuit,
)
from acsim.errors import IndexOutOfRange, InvalidParameter, PathTooClose, PhaseNotQuantized, WindingOutOfRange
from acsim.gates import Circuit, ControlledPhase, OneQubitPhase, PartialSwap, gate_matrix, u_phase_matrix
from acsim.geometry import Polyline, circle_path, max_displacement, min_distance, perturb_path, winding_number

G0 = math.pi / 2
PARAMS = ACParameters()
LAYOUT = Layout.canonical(3)


def test_parameters_validation():
    assert PARAMS.gamma0 == G0 and PARAMS.n_max == 64 and PARAMS.crosstalk_lambda == 0
    for bad in (dict(gamma0=0.0), dict(n_max=0), dict(crosstalk_lambda=-1.0)):
        with pytest.raises(InvalidParameter):
            ACParameters(**bad)
    with pytest.raises(InvalidParameter):
        NoiseSpec(sigma_path=-0.1)


def test_canonical_layout():
    lay = Layout.canonical(3, 2.0)
    assert lay.qubits[2].site_a.x == 40.0 and lay.qubits[2].site_b.y == 2.0
    with pytest.raises(InvalidParameter):
        Layout(LAYOUT.qubits, 5.0)
    with pytest.raises(IndexOutOfRange):
        LAYOUT.qubit(3)


def test_ac_phase():
    assert ac_phase(0, PARAMS) == 0
    assert ac_phase(2, PARAMS) == math.pi
    assert ac_phase(-1, PARAMS) == -G0
    with pytest.raises(WindingOutOfRange):
        ac_phase(65, PARAMS)


def test_gate_of_inter_loop():
    site = LAYOUT.qubit(0).site_a
    move = InterQubitLoop(0, 1, circle_path(site, 0.25, 1, 32))
    assert gate_of_move(move, LAYOUT, PARAMS) == (ControlledPhase(0, 1, G0), 0.0)
    move = InterQubitLoop(0, 1, circle_path(site, 0.25, -3, 32))
    assert gate_of_move(move, LAYOUT, PARAMS)[0] == ControlledPhase(0, 1, -3 * G0)


def test_gate_of_conditional_loop_action():
    site = LAYOUT.qubit(1).site_b
    gate, phase = gate_of_move(ConditionalSelfLoop(1, circle_path(site, 0.25, 1, 32)), LAYOUT, PARAMS)
    assert gate == OneQubitPhase(1, -G0)
    # e^{i pi/4} u_phase(-pi/2) = diag(e^{i pi/2}, 1) by direct multiplication
    physical = cmath.exp(1j * phase) * gate_matrix(gate)
    assert np.abs(physical - np.diag([1j, 1.0])).max() < 1e-15
    assert np.abs(cmath.exp(1j * math.pi / 4) * u_phase_matrix(-math.pi / 2) - np.diag([1j, 1])).max() < 1e-15


def test_gate_of_beam_splitter():
    assert gate_of_move(BeamSplitter(2, G0), LAYOUT, PARAMS) == (PartialSwap(2, G0), 0.0)


def test_gate_of_move_errors():
    site = LAYOUT.qubit(0).site_a
    through = Polyline.loop([(site.x - 1, 0), (site.x + 1, 0), (site.x, 1)])
    with pytest.raises(PathTooClose):
        gate_of_move(InterQubitLoop(0, 1, through), LAYOUT, PARAMS)
    with pytest.raises(WindingOutOfRange):
        gate_of_move(InterQubitLoop(0, 1, circle_path(site, 0.25, 3, 8)), LAYOUT, ACParameters(n_max=2))


def test_canonical_loops():
    for n in (-2, -1, 0, 1, 5):
        move = inter_loop(LAYOUT, 1, 2, n)
        w = winding_number(move.path, LAYOUT.qubit(1).site_a)
        assert w.n == n and w.clearance > 0.24
        move = cond_loop(LAYOUT, 1, n)
        assert winding_number(move.path, LAYOUT.qubit(1).site_b).n == n
    zero = canonical_loop(LAYOUT.qubit(0).site_a, 0, 1.0)
    assert min_distance(zero, LAYOUT.qubit(0).site_b) > 0.5


def test_quantize():
    assert quantize(math.pi, G0, 64, 2 * math.pi) == 2
    assert quantize(-math.pi, G0, 64, 2 * math.pi) == 2
    assert quantize(3 * math.pi / 2, G0, 64, 4 * math.pi) == 3
    with pytest.raises(PhaseNotQuantized) as info:
        quantize(1.5 * G0, G0, 64, 2 * math.pi, 4)
    assert info.value.gate_index == 4 and info.value.nearest_n in (1, 2)


def test_compile_examples():
    sched = compile_circuit(Circuit(2, [ControlledPhase(0, 1, 2 * G0)]), Layout.canonical(2), PARAMS)
    (move,) = sched.moves
    assert isinstance(move, InterQubitLoop)
    assert winding_number(move.path, sched.layout.qubit(0).site_a).n == 2
    with pytest.raises(PhaseNotQuantized):
        compile_circuit(Circuit(2, [ControlledPhase(0, 1, 1.5 * G0)]), Layout.canonical(2), PARAMS)


def random_quantized_circuit(rng, width, length):
    gates = []
    for _ in range(length):
        kind = rng.integers(3)
        n = int(rng.integers(-7, 8))
        if kind == 0:
            gates.append(OneQubitPhase(int(rng.integers(width)), n * G0))
        elif kind == 1:
            gates.append(PartialSwap(int(rng.integers(width)), float(rng.uniform(-4, 4))))
        else:
            j, k = rng.choice(width, 2, replace=False)
            gates.append(ControlledPhase(int(j), int(k), n * G0))
    return Circuit(width, gates)


def test_compile_round_trip(rng):
    for _ in range(30):
        circ = random_quantized_circuit(rng, 3, 12)
        back = schedule_circuit(compile_circuit(circ, LAYOUT, PARAMS), PARAMS)
        assert len(back.gates) == len(circ.gates)
        for a, b in zip(circ.gates, back.gates):
            assert type(a) is type(b) and a.qubits == b.qubits
            assert np.abs(gate_matrix(a) - gate_matrix(b)).max() < 1e-12
        # every braid phase is an exact integer multiple of gamma0
        for g in back.gates:
            if isinstance(g, ControlledPhase):
                assert (g.gamma / G0) == round(g.gamma / G0)


def test_execute_noise_free_identity(rng):
    circ = random_quantized_circuit(rng, 3, 15)
    sched = compile_circuit(circ, LAYOUT, PARAMS)
    realized, log = execute_schedule(sched, PARAMS, NoiseSpec(), 5)
    assert len(log) == 0
    assert realized == schedule_circuit(sched, PARAMS)


def test_execute_small_noise_exact_phases():
    sched = BraidSchedule(LAYOUT, [inter_loop(LAYOUT, 0, 1, 2), cond_loop(LAYOUT, 2, -1)])
    clean = schedule_circuit(sched, PARAMS)
    for seed in range(100):
        realized, log = execute_schedule(sched, PARAMS, NoiseSpec(sigma_path=0.002), seed)
        assert len(log) == 0
        assert realized == clean


def test_execute_large_noise_logs_faults():
    sched = BraidSchedule(LAYOUT, [inter_loop(LAYOUT, 0, 1, 1)] * 20)
    realized, log = execute_schedule(sched, PARAMS, NoiseSpec(sigma_path=0.2), 1234)
    assert len(log) >= 1
    for e in log:
        assert e.expected == 1 and (e.skipped or e.realized != 1)
    again, log2 = execute_schedule(sched, PARAMS, NoiseSpec(sigma_path=0.2), 1234)
    assert again == realized and log2.entries == log.entries


def test_execute_theta_jitter():
    sched = BraidSchedule(LAYOUT, [BeamSplitter(0, 1.0)])
    realized, _ = execute_schedule(sched, PARAMS, NoiseSpec(sigma_theta=0.1), 3)
    assert realized.gates[0].theta != 1.0
    realized, _ = execute_schedule(sched, PARAMS, NoiseSpec(), 3)
    assert realized.gates[0].theta == 1.0


def test_topological_invariance_bit_identical():
    move = inter_loop(LAYOUT, 0, 1, 1)
    clearance = winding_number(move.path, LAYOUT.qubit(0).site_a).clearance
    want = gate_of_move(move, LAYOUT, PARAMS)
    for seed in range(300):
        p = perturb_path(move.path, 0.02, seed)
        assert max_displacement(p, move.path) < clearance
        assert gate_of_move(InterQubitLoop(0, 1, p), LAYOUT, PARAMS) == want


def test_crosstalk_phase():
    path = circle_path((0, 0), 1.0, 1, 64)
    assert crosstalk_phase(path, (3.0, 0.0), 0.0) == 0.0
    assert crosstalk_phase(path, (3.0, 0.0), 0.1) == pytest.approx(0.05, abs=1e-15)
    near = crosstalk_phase(path, (3.0, 0.0), 0.1)
    far = crosstalk_phase(path.scaled(2.0), (6.0, 0.0), 0.1)
    assert far == pytest.approx(near / 2, rel=1e-12)
    assert crosstalk_phase(path, (3.0, 0.0), 0.2) == pytest.approx(2 * near, rel=1e-15)
    assert crosstalk_phase(path, (1e9, 0.0), 0.1) < 1e-9
    assert crosstalk_phase(path, (1.0, 0.0), 0.1) == 0.1 / 1e-9


def test_execute_crosstalk_on_bystanders():
    sched = BraidSchedule(LAYOUT, [inter_loop(LAYOUT, 0, 1, 2)])
    realized, _ = execute_schedule(sched, PARAMS, NoiseSpec(crosstalk_lambda=0.1), 0)
    stray = [g for g in realized.gates if isinstance(g, OneQubitPhase)]
    assert [g.target for g in stray] == [2]
    path = sched.moves[0].path
    d = min(min_distance(path, LAYOUT.qubit(2).site_a), min_distance(path, LAYOUT.qubit(2).site_b))
    assert stray[0].gamma == pytest.approx(0.1 / d, rel=1e-15)
    # parameters supply the strength when the noise spec leaves it at zero
    realized2, _ = execute_schedule(sched, ACParameters(crosstalk_lambda=0.1), NoiseSpec(), 0)
    assert realized2 == realized


def test_fault_probability_grows_with_winding():
    site = LAYOUT.qubit(0).site_a
    rates = []
    for n in (1, 2, 4):
        sched = BraidSchedule(LAYOUT, [inter_loop(LAYOUT, 0, 1, n)] * 400)
        _, log = execute_schedule(sched, PARAMS, NoiseSpec(sigma_path=0.1), 77)
        rates.append(len(log) / 400)
    assert rates[0] < rates[2]
    assert winding_number(inter_loop(LAYOUT, 0, 1, 1).path, site).n == 1
