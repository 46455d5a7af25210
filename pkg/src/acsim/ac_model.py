"""Physical layer: qubits as charge/dipole site pairs and braid moves.

A qubit j stores |0> as (charge at a, dipole at b) and |1> as the reverse.
Moves map to gates through the winding number of their path only:

* ``InterQubitLoop(j, k, path)`` carries the particle at site b of qubit k
  around site a of qubit j and realizes ``ControlledPhase(j, k, n*gamma0)``.
* ``ConditionalSelfLoop(j, path)`` takes the particle at site a of qubit j
  around site b only when it is the charge (state |0>). The physical action
  diag(e^{i n gamma0}, 1) equals e^{i n gamma0 / 2} * u_phase_matrix(-n gamma0),
  so the gate is ``OneQubitPhase(j, -n*gamma0)`` plus a tracked global phase.
* ``BeamSplitter(j, theta)`` realizes ``PartialSwap(j, theta)``.

Counter-clockwise winding gives +n*gamma0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from acsim.errors import (
    IndexOutOfRange,
    InvalidParameter,
    PathTooClose,
    PhaseNotQuantized,
    WindingOutOfRange,
)
from acsim.gates import Circuit, ControlledPhase, OneQubitPhase, PartialSwap
from acsim.geometry import (
    EPS_CLEARANCE,
    Point2,
    Polyline,
    WindingResult,
    as_point,
    circle_path,
    min_distance,
    perturb_path,
    winding_number,
)

QUANT_TOL = 1e-9
SAMPLES_PER_TURN = 32


@dataclass(frozen=True)
class ACParameters:
    """``gamma0`` is the phase per single winding; it absorbs the moment,
    the charge and hbar into one constant."""

    gamma0: float = math.pi / 2
    n_max: int = 64
    crosstalk_lambda: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.gamma0) or self.gamma0 == 0:
            raise InvalidParameter(f"gamma0 must be finite and nonzero, got {self.gamma0}")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise InvalidParameter(f"n_max must be an integer >= 1, got {self.n_max}")
        if not math.isfinite(self.crosstalk_lambda) or self.crosstalk_lambda < 0:
            raise InvalidParameter(f"crosstalk_lambda must be >= 0, got {self.crosstalk_lambda}")


@dataclass(frozen=True)
class NoiseSpec:
    sigma_path: float = 0.0
    sigma_theta: float = 0.0
    crosstalk_lambda: float = 0.0

    def __post_init__(self):
        for name in ("sigma_path", "sigma_theta", "crosstalk_lambda"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise InvalidParameter(f"{name} must be finite and >= 0, got {v}")


@dataclass(frozen=True)
class ACQubit:
    index: int
    site_a: Point2
    site_b: Point2

    def __post_init__(self):
        object.__setattr__(self, "site_a", as_point(self.site_a))
        object.__setattr__(self, "site_b", as_point(self.site_b))
        if self.site_a == self.site_b:
            raise InvalidParameter(f"qubit {self.index}: sites coincide")


@dataclass(frozen=True)
class Layout:
    qubits: tuple
    d_min: float

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        if not (math.isfinite(self.d_min) and self.d_min > 0):
            raise InvalidParameter(f"d_min must be > 0, got {self.d_min}")
        for i, q in enumerate(self.qubits):
            if q.index != i:
                raise InvalidParameter(f"qubit at position {i} has index {q.index}")
        sites = [s for q in self.qubits for s in (q.site_a, q.site_b)]
        floor = self.d_min * (1 - 1e-12)
        for i in range(len(sites)):
            for j in range(i + 1, len(sites)):
                if sites[i].distance(sites[j]) < floor:
                    raise InvalidParameter(f"sites {sites[i]} and {sites[j]} closer than d_min")

    @classmethod
    def canonical(cls, n: int, d_min: float = 1.0) -> Layout:
        """Qubit k at x = 10*k*d_min: site a at (x, 0), site b at (x, d_min)."""
        if n < 1:
            raise InvalidParameter(f"layout needs at least one qubit, got {n}")
        return cls(
            tuple(
                ACQubit(k, Point2(10.0 * k * d_min, 0.0), Point2(10.0 * k * d_min, d_min))
                for k in range(n)
            ),
            d_min,
        )

    def __len__(self):
        return len(self.qubits)

    def qubit(self, j: int) -> ACQubit:
        if not 0 <= j < len(self.qubits):
            raise IndexOutOfRange(f"qubit {j} not in layout of {len(self.qubits)}")
        return self.qubits[j]


@dataclass(frozen=True)
class InterQubitLoop:
    j: int
    k: int
    path: Polyline

    def __post_init__(self):
        if self.j == self.k:
            raise InvalidParameter("inter-qubit loop needs two distinct qubits")
        if not self.path.closed:
            raise InvalidParameter("loop path must be closed")

    @property
    def qubits(self):
        return (self.j, self.k)


@dataclass(frozen=True)
class ConditionalSelfLoop:
    j: int
    path: Polyline

    def __post_init__(self):
        if not self.path.closed:
            raise InvalidParameter("loop path must be closed")

    @property
    def qubits(self):
        return (self.j,)


@dataclass(frozen=True)
class BeamSplitter:
    j: int
    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise InvalidParameter(f"theta must be finite, got {self.theta}")

    @property
    def qubits(self):
        return (self.j,)


BraidMove = Union[InterQubitLoop, ConditionalSelfLoop, BeamSplitter]


@dataclass(frozen=True)
class BraidSchedule:
    layout: Layout
    moves: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        for i, m in enumerate(self.moves):
            for q in m.qubits:
                if not 0 <= q < len(self.layout):
                    raise IndexOutOfRange(f"move {i}: qubit {q} not in layout")


@dataclass(frozen=True)
class FaultEntry:
    move_index: int
    expected: int
    realized: int | None  # None when the move was skipped
    clearance: float
    skipped: bool = False


@dataclass
class FaultLog:
    entries: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def ac_phase(n: int, params: ACParameters) -> float:
    """Phase n * gamma0 acquired by winding n times."""
    if abs(n) > params.n_max:
        raise WindingOutOfRange(f"|n| = {abs(n)} exceeds n_max = {params.n_max}")
    return n * params.gamma0


def encircled_site(move, layout: Layout) -> Point2:
    if isinstance(move, InterQubitLoop):
        return layout.qubit(move.j).site_a
    if isinstance(move, ConditionalSelfLoop):
        return layout.qubit(move.j).site_b
    raise InvalidParameter(f"{type(move).__name__} has no path")


def move_winding(move, layout: Layout) -> WindingResult:
    return winding_number(move.path, encircled_site(move, layout))


def _gate_for_winding(move, n: int, params: ACParameters):
    phase = ac_phase(n, params)
    if isinstance(move, InterQubitLoop):
        return ControlledPhase(move.j, move.k, phase), 0.0
    return OneQubitPhase(move.j, -phase), 0.5 * phase


def gate_of_move(move: BraidMove, layout: Layout, params: ACParameters):
    """Logical gate realized by one move, as ``(gate, global_phase)``."""
    if isinstance(move, BeamSplitter):
        layout.qubit(move.j)
        return PartialSwap(move.j, move.theta), 0.0
    return _gate_for_winding(move, move_winding(move, layout).n, params)


def schedule_circuit(schedule: BraidSchedule, params: ACParameters) -> Circuit:
    """Noise-free logical circuit of a schedule."""
    gates, phase = [], 0.0
    for m in schedule.moves:
        g, p = gate_of_move(m, schedule.layout, params)
        gates.append(g)
        phase += p
    return Circuit(len(schedule.layout), gates, phase)


def _wrap(x: float, period: float) -> float:
    """Map ``x`` into [-period/2, period/2)."""
    return (x + 0.5 * period) % period - 0.5 * period


def quantize(angle: float, gamma0: float, n_max: int, period: float, index: int = -1) -> int:
    """Smallest-|n| integer with n*gamma0 == angle modulo ``period``."""
    ns = np.arange(-n_max, n_max + 1)
    residuals = np.abs([_wrap(angle - n * gamma0, period) for n in ns])
    ok = ns[residuals <= QUANT_TOL]
    if ok.size == 0:
        best = residuals.min()
        near = ns[residuals <= best + 1e-12]
        n = int(min(near, key=lambda n: (abs(n), -n)))
        raise PhaseNotQuantized(index, n, float(best))
    return int(min(ok, key=lambda n: (abs(n), -n)))


def canonical_loop(site: Point2, n: int, d_min: float, away=(0.0, -1.0)) -> Polyline:
    """Circle of radius d_min/4 around ``site`` with winding ``n``.

    For n = 0 the circle is shifted by d_min/2 along ``away`` so that it
    keeps d_min/4 clearance without enclosing the site.
    """
    r = d_min / 4
    if n == 0:
        center = Point2(site.x + away[0] * d_min / 2, site.y + away[1] * d_min / 2)
        return circle_path(center, r, 1, SAMPLES_PER_TURN)
    return circle_path(site, r, n, SAMPLES_PER_TURN)


def inter_loop(layout: Layout, j: int, k: int, n: int) -> InterQubitLoop:
    """Canonical loop taking qubit k's site-b particle n times around
    qubit j's site a."""
    layout.qubit(k)
    return InterQubitLoop(j, k, canonical_loop(layout.qubit(j).site_a, n, layout.d_min, (0.0, -1.0)))


def cond_loop(layout: Layout, j: int, n: int) -> ConditionalSelfLoop:
    """Canonical conditional loop n times around qubit j's site b."""
    return ConditionalSelfLoop(j, canonical_loop(layout.qubit(j).site_b, n, layout.d_min, (0.0, 1.0)))


def compile_circuit(circuit: Circuit, layout: Layout, params: ACParameters) -> BraidSchedule:
    """Translate a logical circuit into canonical braid moves.

    Raises:
        PhaseNotQuantized: a phase gate angle is not n*gamma0 (mod 2pi for
            controlled phases, mod 4pi for one-qubit phases) with |n| <= n_max.
    """
    if circuit.width > len(layout):
        raise IndexOutOfRange(f"circuit width {circuit.width} exceeds layout of {len(layout)}")
    moves = []
    for i, g in enumerate(circuit.gates):
        if isinstance(g, ControlledPhase):
            n = quantize(g.gamma, params.gamma0, params.n_max, 2 * math.pi, i)
            moves.append(inter_loop(layout, g.j, g.k, n))
        elif isinstance(g, OneQubitPhase):
            n = quantize(-g.gamma, params.gamma0, params.n_max, 4 * math.pi, i)
            moves.append(cond_loop(layout, g.target, n))
        elif isinstance(g, PartialSwap):
            moves.append(BeamSplitter(g.target, g.theta))
        else:
            raise TypeError(f"not a gate: {g!r}")
    return BraidSchedule(layout, moves)


def crosstalk_phase(path: Polyline, other_site, lam: float) -> float:
    """Stray phase lam / d picked up by a bystander site at distance d."""
    if lam < 0:
        raise InvalidParameter(f"lambda must be >= 0, got {lam}")
    if lam == 0:
        return 0.0
    return lam / max(min_distance(path, other_site), EPS_CLEARANCE)


def _push_away(path: Polyline, site: Point2, offset: float) -> Polyline:
    d = path.vertices - np.array([site.x, site.y])
    r = np.hypot(d[:, 0], d[:, 1])
    unit = np.where(r[:, None] > 0, d / np.where(r > 0, r, 1.0)[:, None], np.array([1.0, 0.0]))
    return Polyline(path.vertices + offset * unit, path.closed)


def realize_loop(path: Polyline, site: Point2, sigma: float, rng):
    """Perturb a loop and measure its winding around ``site``.

    Returns ``(perturbed_path, WindingResult or None, clearance)``. A path
    that lands within the clearance tolerance is retried once, pushed
    radially 2*EPS_CLEARANCE away from the site; ``None`` means the retry
    failed too.
    """
    p = perturb_path(path, sigma, rng)
    try:
        w = winding_number(p, site)
        return p, w, w.clearance
    except PathTooClose:
        p = _push_away(p, site, 2 * EPS_CLEARANCE)
        try:
            w = winding_number(p, site)
            return p, w, w.clearance
        except PathTooClose as exc:
            return p, None, exc.clearance


def move_rng(seed: int, index: int) -> np.random.Generator:
    """Independent, reproducible stream for one (run seed, item index)."""
    return np.random.default_rng([int(seed), int(index)])


def execute_schedule(schedule: BraidSchedule, params: ACParameters, noise: NoiseSpec, seed: int):
    """Run a schedule under path/angle noise and crosstalk.

    Every loop path is jittered and its winding recomputed; beam-splitter
    angles receive Gaussian jitter. With a nonzero crosstalk strength (the
    noise spec's, else the parameters') each loop also adds a stray
    ``OneQubitPhase(q, lam / d)`` on every bystander qubit q, with d the
    distance from the loop to q's nearer site.

    Returns the realized :class:`Circuit` and a :class:`FaultLog` of moves
    whose winding changed or that had to be skipped.
    """
    layout = schedule.layout
    lam = noise.crosstalk_lambda or params.crosstalk_lambda
    gates, phase, log = [], 0.0, FaultLog()
    for i, m in enumerate(schedule.moves):
        rng = move_rng(seed, i)
        if isinstance(m, BeamSplitter):
            theta = m.theta + rng.normal(0.0, noise.sigma_theta) if noise.sigma_theta else m.theta
            gates.append(PartialSwap(m.j, theta))
            continue
        site = encircled_site(m, layout)
        expected = winding_number(m.path, site).n
        path, w, clearance = realize_loop(m.path, site, noise.sigma_path, rng)
        if w is None:
            log.entries.append(FaultEntry(i, expected, None, clearance, skipped=True))
        else:
            if w.n != expected:
                log.entries.append(FaultEntry(i, expected, w.n, clearance))
            g, p = _gate_for_winding(m, w.n, params)
            gates.append(g)
            phase += p
        if lam > 0:
            for q in layout.qubits:
                if q.index in m.qubits:
                    continue
                stray = max(crosstalk_phase(path, q.site_a, lam), crosstalk_phase(path, q.site_b, lam))
                gates.append(OneQubitPhase(q.index, stray))
    return Circuit(len(layout), gates, phase), log
