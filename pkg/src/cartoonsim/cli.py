"""Command-line front end.

Exit codes: 0 success, 1 usage/parse/engine error, 2 verification failure.
Bit strings are printed with ``A_1`` leftmost.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Dict, List, Optional

import numpy as np

from .circuit import Circuit, GateSpec
from .clifford import OpCounter
from .combs import comb, comb_state_of
from .crosscheck import GATE_SET, TOLERANCE, fuzz
from .gates import hadamard_cascade, matrix_representation, natural_order, run_circuit, swapped_order
from .oracle import basis_vector, oracle_run
from .parsing import CircuitParseError, parse_circuit, parse_gate

EXIT_OK, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2
MAX_MATRIX_WIDTH = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _num(x: float) -> str:
    return f"{x + 0.0:.12g}"


def _amplitude_lines(amps: Dict[str, complex]) -> List[str]:
    return [f"{bits} {_num(a.real)} {_num(a.imag)}" for bits, a in sorted(amps.items())]


def _vector_amps(width: int, vec: np.ndarray) -> Dict[str, complex]:
    return {format(i, f"0{width}b"): complex(a) for i, a in enumerate(vec) if a != 0}


def _load(path: str) -> Circuit:
    with open(path) as fh:
        return parse_circuit(fh.read())


def _initial_bits(c: Circuit, init: Optional[str]) -> str:
    bits = init if init is not None else "0" * c.width
    if len(bits) != c.width or set(bits) - {"0", "1"}:
        raise ValueError(f"--init must be a {c.width}-bit string, got {bits!r}")
    return bits


def _run_ga(c: Circuit, bits: str, counter: Optional[OpCounter] = None) -> Dict[str, complex]:
    return comb_state_of(run_circuit(c, comb(bits), counter)).amps


def cmd_run(args) -> int:
    c = _load(args.file)
    bits = _initial_bits(c, args.init)
    out: dict = {"width": c.width, "engine": args.engine}
    if args.engine in ("ga", "both"):
        amps = _run_ga(c, bits)
    if args.engine in ("oracle", "both"):
        ref = oracle_run(c, basis_vector(bits))
        if args.engine == "oracle":
            amps = _vector_amps(c.width, ref)
    diff = None
    if args.engine == "both":
        ga_vec = np.zeros(2 ** c.width, dtype=complex)
        for b, a in amps.items():
            ga_vec[int(b, 2)] = a
        diff = float(np.max(np.abs(ga_vec - ref)))

    if args.format == "json":
        out["amplitudes"] = {b: [a.real + 0.0, a.imag + 0.0] for b, a in sorted(amps.items())}
        if diff is not None:
            out["max_diff"] = diff
        print(json.dumps(out, indent=2))
    else:
        for line in _amplitude_lines(amps):
            print(line)
        if diff is not None:
            print(f"max_diff {diff:.3e}")
    if diff is not None and not diff < TOLERANCE:
        print(f"engines disagree: max_diff {diff:.3e} >= {TOLERANCE:g}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_steps(args) -> int:
    counter = OpCounter()
    if args.cascade is not None:
        hadamard_cascade(args.cascade, counter)
    elif args.file:
        c = _load(args.file)
        _run_ga(c, _initial_bits(c, args.init), counter)
    else:
        raise ValueError("give a circuit file or --cascade N")
    if args.format == "json":
        print(json.dumps({"multiplications": counter.multiplications,
                          "additions": counter.additions, "total": counter.total}))
    else:
        print(f"mult={counter.multiplications} add={counter.additions} total={counter.total}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    gate_set = tuple(g.strip().upper() for g in args.gates.split(",")) if args.gates else GATE_SET
    unknown = set(gate_set) - set(GATE_SET)
    if unknown:
        raise ValueError(f"unknown gates in --gates: {', '.join(sorted(unknown))}")
    report = fuzz(args.n, args.depth, args.trials, args.seed, gate_set)
    print(report.to_json() if args.format == "json" else report.to_text(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_VERIFY


_COMPACT = re.compile(r"^([A-Za-z]+)(\d+)$")


def parse_gate_arg(text: str, width: int) -> GateSpec:
    """``X1``, ``CNOT12``, ``TOFFOLI123`` (one digit per index) or a circuit-file line."""
    m = _COMPACT.match(text.strip())
    if m:
        text = m.group(1) + " " + " ".join(m.group(2))
    return parse_gate(text, width)


def cmd_matrix(args) -> int:
    n = args.n
    if not 1 <= n <= MAX_MATRIX_WIDTH:
        raise ValueError(f"matrix needs 1 <= n <= {MAX_MATRIX_WIDTH}, got {n}")
    g = parse_gate_arg(args.gate, n)
    if args.order == "swap12":
        if n < 2:
            raise ValueError("--order swap12 needs n >= 2")
        order = swapped_order(n, 1, 2)
    else:
        order = natural_order(n)
    m = matrix_representation(g, order)
    if args.format == "json":
        print(json.dumps({"width": n, "basis": [o.bits for o in order],
                          "matrix": [[[z.real + 0.0, z.imag + 0.0] for z in row] for row in m]}))
        return EXIT_OK
    print("basis " + " ".join(o.bits for o in order))
    for row in m:
        print(" ".join(_num(z.real) if z.imag == 0 else f"{_num(z.real)}{z.imag + 0.0:+.12g}j" for z in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cartoonsim", description="Geometric-algebra quantum-like circuit simulator.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="run a circuit file from a basis comb")
    r.add_argument("file")
    r.add_argument("--init", help="initial bit string A_1...A_n (default all zeros)")
    r.add_argument("--engine", choices=("ga", "oracle", "both"), default="ga")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("steps", help="count Clifford multiplications and additions")
    s.add_argument("file", nargs="?")
    s.add_argument("--cascade", type=int, metavar="N", help="product-form Hadamard cascade of width N")
    s.add_argument("--init")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_steps)

    f = sub.add_parser("fuzz", help="random circuits through both engines")
    f.add_argument("-n", type=int, default=5, help="register width")
    f.add_argument("-d", "--depth", type=int, default=30)
    f.add_argument("-t", "--trials", type=int, default=1000)
    f.add_argument("-s", "--seed", type=int, default=0)
    f.add_argument("--gates", help="comma-separated subset of " + ",".join(GATE_SET))
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.add_argument("-v", "--verbose", action="store_true", help="one line per trial")
    f.set_defaults(func=cmd_fuzz)

    m = sub.add_parser("matrix", help="print a gate's matrix on the comb basis")
    m.add_argument("gate", help="e.g. X1, H2, CNOT12, TOFFOLI123")
    m.add_argument("-n", type=int, default=2)
    m.add_argument("--order", choices=("natural", "swap12"), default="natural")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_matrix)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CircuitParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
