"""Command line entry point (``acsim``).

Exit codes: 0 success, 2 parse/usage error, 3 quantization error,
4 geometry error. ``ACSIM_SEED`` sets the default seed.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from collections import Counter
from pathlib import Path

from acsim.ac_model import ACParameters, Layout, NoiseSpec, compile_circuit, execute_schedule, move_winding
from acsim.errors import EXIT_CODES, ACSimError, ParseError
from acsim.experiments import DJ_ORACLES, demo_deutsch_jozsa, sweep_deformation, sweep_winding
from acsim.formats import format_circuit, format_schedule, parse_angle, read_circuit, read_schedule
from acsim.geometry import circle_path
from acsim.simulator import init_state, measure_all, run_circuit


def _default_seed() -> int:
    raw = os.environ.get("ACSIM_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"ACSIM_SEED must be an integer, got {raw!r}") from None


def _angle(token):
    try:
        return parse_angle(token)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _float_list(text):
    return [_angle(t) for t in text.split(",") if t.strip()]


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _histogram(state, shots, seed):
    counts = Counter(measure_all(state, [seed, s]).bitstring for s in range(shots))
    return "\n".join(f"{bits} {counts[bits]}" for bits in sorted(counts))


def _initial(width, bits):
    return init_state(width, bits if bits is not None else "0" * width)


def cmd_run(args):
    circuit = read_circuit(args.circuit)
    state = run_circuit(_initial(circuit.width, args.input), circuit)
    print(_histogram(state, args.shots, args.seed))


def cmd_compile(args):
    circuit = read_circuit(args.circuit)
    params = ACParameters(gamma0=args.gamma0, n_max=args.n_max)
    schedule = compile_circuit(circuit, Layout.canonical(circuit.width, args.d_min), params)
    text = format_schedule(schedule, header=f"compiled with gamma0 = {args.gamma0!r}")
    Path(args.output).write_text(text)


def cmd_execute(args):
    schedule = read_schedule(args.schedule)
    params = ACParameters(gamma0=args.gamma0, n_max=args.n_max)
    noise = NoiseSpec(args.sigma_path, args.sigma_theta, args.crosstalk)
    realized, log = execute_schedule(schedule, params, noise, args.seed)
    print("# realized circuit")
    print(format_circuit(realized), end="")
    print(f"# faults: {len(log)}")
    for e in log:
        realized_n = "skipped" if e.skipped else e.realized
        print(f"FAULT move={e.move_index} expected={e.expected} realized={realized_n} clearance={e.clearance:.12g}")
    print("# histogram")
    print(_histogram(run_circuit(_initial(realized.width, args.input), realized), args.shots, args.seed))


def cmd_winding(args):
    schedule = read_schedule(args.schedule)
    if not 0 <= args.move < len(schedule.moves):
        raise ParseError(f"move index {args.move} out of range (schedule has {len(schedule.moves)})")
    move = schedule.moves[args.move]
    if not hasattr(move, "path"):
        raise ParseError(f"move {args.move} is a beam splitter and has no path")
    w = move_winding(move, schedule.layout)
    print(f"winding {w.n}")
    print(f"clearance {w.clearance:.12g}")


def cmd_sweep(args):
    if args.kind == "deformation":
        base = circle_path((0.0, 0.0), args.radius, args.turns)
        results = sweep_deformation(
            base, (0.0, 0.0), args.sigmas, args.trials, args.seed, args.gamma0, args.lambda_area
        )
        result = results[args.gate]
    else:
        result = sweep_winding(args.n_values, args.sigma, args.trials, args.seed, args.radius, args.gamma0)
    Path(args.output).write_text(result.to_csv())


def cmd_demo(args):
    print(demo_deutsch_jozsa(args.oracle, ACParameters(gamma0=args.gamma0), args.seed))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acsim", description="Aharonov-Casher braiding simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()
    half_pi = math.pi / 2

    p = sub.add_parser("run", help="simulate a circuit and print an outcome histogram")
    p.add_argument("circuit")
    p.add_argument("--input", help="initial bitstring (default all zeros)")
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compile", help="compile a circuit into a braid schedule")
    p.add_argument("circuit")
    p.add_argument("--gamma0", type=_angle, required=True)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--d-min", type=float, default=1.0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("execute", help="execute a schedule under noise")
    p.add_argument("schedule")
    p.add_argument("--sigma-path", type=float, default=0.0)
    p.add_argument("--sigma-theta", type=float, default=0.0)
    p.add_argument("--lambda", dest="crosstalk", type=float, default=0.0)
    p.add_argument("--gamma0", type=_angle, default=half_pi)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--input", help="initial bitstring (default all zeros)")
    p.add_argument("--shots", type=int, default=1024)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_execute)

    p = sub.add_parser("winding", help="winding number and clearance of one move")
    p.add_argument("schedule")
    p.add_argument("--move", type=int, required=True)
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("sweep", help="robustness sweeps written as CSV")
    p.add_argument("kind", choices=("deformation", "winding"))
    p.add_argument("--sigmas", type=_float_list, default=[0.0, 0.01, 0.02, 0.05, 0.1])
    p.add_argument("--sigma", type=float, default=0.1)
    p.add_argument("--n-values", type=_int_list, default=[1, 2, 4, 8])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--radius", type=float, default=0.25)
    p.add_argument("--turns", type=int, default=1)
    p.add_argument("--gamma0", type=_angle, default=half_pi)
    p.add_argument("--lambda-area", type=float, default=None)
    p.add_argument("--gate", choices=("topological", "dynamical"), default="topological")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("demo", help="end-to-end demo algorithms")
    p.add_argument("algorithm", choices=("dj",))
    p.add_argument("--oracle", choices=DJ_ORACLES, required=True)
    p.add_argument("--gamma0", type=_angle, default=half_pi)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_demo)
    return parser


def _exit_code(exc: ACSimError) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return 2


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except ACSimError as exc:
        print(f"acsim: error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(f"acsim: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
