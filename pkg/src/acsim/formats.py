"""Line-based text formats for circuits and braid schedules.

Circuit file::

    WIDTH <N>
    UPHASE <j> <gamma>
    USWAP <j> <theta>
    B <j> <j'> <gamma>

Schedule file::

    LAYOUT <N> <d_min>
    LOOP <j> <j'> <n_turns> [x1 y1 x2 y2 ...]
    CONDLOOP <j> <n_turns>
    BS <j> <theta>

Keywords are case-insensitive and ``#`` starts a comment. Angles are
floats in radians; ``pi`` multiples such as ``-3*pi/4`` or ``pi/2`` are
accepted too. A LOOP without vertices uses the canonical circle; explicit
vertices must wind exactly ``n_turns`` times around site a of qubit j.
"""
from __future__ import annotations

import math
import re
from pathlib import Path

from acsim.ac_model import (
    BeamSplitter,
    BraidSchedule,
    ConditionalSelfLoop,
    InterQubitLoop,
    Layout,
    cond_loop,
    inter_loop,
    move_winding,
)
from acsim.errors import ACSimError, ParseError
from acsim.gates import Circuit, ControlledPhase, OneQubitPhase, PartialSwap
from acsim.geometry import polyline_from_flat

_PI_RE = re.compile(r"^([+-]?)(\d+(?:\.\d*)?(?:e[+-]?\d+)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$", re.I)


def parse_angle(token: str, lineno=None) -> float:
    try:
        value = float(token)
    except ValueError:
        m = _PI_RE.match(token)
        if not m:
            raise ParseError(f"bad number {token!r}", lineno) from None
        sign, mult, div = m.groups()
        value = (float(mult) if mult else 1.0) * math.pi / (float(div) if div else 1.0)
        if sign == "-":
            value = -value
    if not math.isfinite(value):
        raise ParseError(f"non-finite number {token!r}", lineno)
    return value


def _int(token: str, lineno) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad integer {token!r}", lineno) from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            toks = line.split()
            yield lineno, toks[0].upper(), toks[1:]


def _arity(kw, args, n, lineno):
    if len(args) != n:
        raise ParseError(f"{kw} takes {n} arguments, got {len(args)}", lineno)


def parse_circuit(text: str) -> Circuit:
    width, gates = None, []
    for lineno, kw, args in _lines(text):
        if kw == "WIDTH":
            if width is not None:
                raise ParseError("duplicate WIDTH", lineno)
            _arity(kw, args, 1, lineno)
            width = _int(args[0], lineno)
            continue
        if width is None:
            raise ParseError("WIDTH must come first", lineno)
        try:
            if kw == "UPHASE":
                _arity(kw, args, 2, lineno)
                gates.append(OneQubitPhase(_int(args[0], lineno), parse_angle(args[1], lineno)))
            elif kw == "USWAP":
                _arity(kw, args, 2, lineno)
                gates.append(PartialSwap(_int(args[0], lineno), parse_angle(args[1], lineno)))
            elif kw == "B":
                _arity(kw, args, 3, lineno)
                gates.append(
                    ControlledPhase(_int(args[0], lineno), _int(args[1], lineno), parse_angle(args[2], lineno))
                )
            else:
                raise ParseError(f"unknown keyword {kw!r}", lineno)
            for q in gates[-1].qubits:
                if not 0 <= q < width:
                    raise ParseError(f"qubit {q} outside width {width}", lineno)
        except ParseError:
            raise
        except ACSimError as exc:
            raise ParseError(str(exc), lineno) from exc
    if width is None:
        raise ParseError("missing WIDTH")
    try:
        return Circuit(width, gates)
    except ACSimError as exc:
        raise ParseError(str(exc)) from exc


def format_circuit(circuit: Circuit) -> str:
    out = [f"WIDTH {circuit.width}"]
    if circuit.global_phase:
        out.append(f"# global phase {circuit.global_phase!r}")
    for g in circuit.gates:
        if isinstance(g, OneQubitPhase):
            out.append(f"UPHASE {g.target} {g.gamma!r}")
        elif isinstance(g, PartialSwap):
            out.append(f"USWAP {g.target} {g.theta!r}")
        else:
            out.append(f"B {g.j} {g.k} {g.gamma!r}")
    return "\n".join(out) + "\n"


def parse_schedule(text: str) -> BraidSchedule:
    layout, moves = None, []
    for lineno, kw, args in _lines(text):
        try:
            if kw == "LAYOUT":
                if layout is not None:
                    raise ParseError("duplicate LAYOUT", lineno)
                _arity(kw, args, 2, lineno)
                layout = Layout.canonical(_int(args[0], lineno), parse_angle(args[1], lineno))
                continue
            if layout is None:
                raise ParseError("LAYOUT must come first", lineno)
            if kw == "LOOP":
                if len(args) < 3:
                    raise ParseError("LOOP takes <j> <j'> <n_turns> [vertices]", lineno)
                j, k, n = (_int(a, lineno) for a in args[:3])
                if len(args) == 3:
                    moves.append(inter_loop(layout, j, k, n))
                    continue
                layout.qubit(k)
                coords = [parse_angle(a, lineno) for a in args[3:]]
                move = InterQubitLoop(j, k, polyline_from_flat(coords, closed=True))
                realized = move_winding(move, layout).n
                if realized != n:
                    raise ParseError(f"LOOP path winds {realized} times, declared {n}", lineno)
                moves.append(move)
            elif kw == "CONDLOOP":
                _arity(kw, args, 2, lineno)
                moves.append(cond_loop(layout, _int(args[0], lineno), _int(args[1], lineno)))
            elif kw == "BS":
                _arity(kw, args, 2, lineno)
                j = _int(args[0], lineno)
                layout.qubit(j)
                moves.append(BeamSplitter(j, parse_angle(args[1], lineno)))
            else:
                raise ParseError(f"unknown keyword {kw!r}", lineno)
        except ParseError:
            raise
        except ACSimError as exc:
            raise ParseError(str(exc), lineno) from exc
    if layout is None:
        raise ParseError("missing LAYOUT")
    return BraidSchedule(layout, moves)


def format_schedule(schedule: BraidSchedule, header: str | None = None) -> str:
    layout = schedule.layout
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    out.append(f"LAYOUT {len(layout)} {layout.d_min!r}")
    for m in schedule.moves:
        if isinstance(m, BeamSplitter):
            out.append(f"BS {m.j} {m.theta!r}")
            continue
        n = move_winding(m, layout).n
        if isinstance(m, ConditionalSelfLoop):
            if m.path != cond_loop(layout, m.j, n).path:
                raise ValueError("CONDLOOP supports canonical paths only")
            out.append(f"CONDLOOP {m.j} {n}")
            continue
        line = f"LOOP {m.j} {m.k} {n}"
        if m.path != inter_loop(layout, m.j, m.k, n).path:
            line += " " + " ".join(repr(float(c)) for c in m.path.vertices[:-1].reshape(-1))
        out.append(line)
    return "\n".join(out) + "\n"


def read_circuit(path) -> Circuit:
    return parse_circuit(Path(path).read_text())


def read_schedule(path) -> BraidSchedule:
    return parse_schedule(Path(path).read_text())
