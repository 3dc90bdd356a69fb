"""Circuit file format.

::

    # comments run from '#' to end of line
    n 3
    H 1
    CNOT 2 1          # target 2, control 1
    TOFFOLI 1 2 3     # target 1, controls 2 and 3
    GATE 2 a_re a_im b_re b_im g_re g_im d_re d_im CTRL 1 3

The first index of every gate is its target; the rest are controls.
:func:`format_circuit` output parses back to an equal circuit.
"""
from __future__ import annotations

from typing import List, Optional

from .circuit import Circuit, GateSpec, named

ONE_BIT = ("X", "Y", "Z", "H", "S", "T")


class CircuitParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens, lineno):
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise CircuitParseError(f"expected a bit index, got {t!r}", lineno) from None
    return out


def parse_gate(line: str, width: int, lineno: Optional[int] = None) -> GateSpec:
    tokens = line.split()
    op, args = tokens[0].upper(), tokens[1:]
    if op in ONE_BIT:
        if len(args) != 1:
            raise CircuitParseError(f"{op} takes 1 index, got {len(args)}", lineno)
        bits = _ints(args, lineno)
        name = op
    elif op == "CNOT":
        if len(args) != 2:
            raise CircuitParseError(f"CNOT takes 2 indices, got {len(args)}", lineno)
        bits = _ints(args, lineno)
        name = "X"
    elif op == "TOFFOLI":
        if len(args) != 3:
            raise CircuitParseError(f"TOFFOLI takes 3 indices, got {len(args)}", lineno)
        bits = _ints(args, lineno)
        name = "X"
    elif op == "GATE":
        ctrl_at = [i for i, t in enumerate(args) if t.upper() == "CTRL"]
        head = args[:ctrl_at[0]] if ctrl_at else args
        tail = args[ctrl_at[0] + 1:] if ctrl_at else []
        if len(head) != 9:
            raise CircuitParseError(f"GATE takes a target and 8 reals, got {len(head)} fields", lineno)
        if ctrl_at and not tail:
            raise CircuitParseError("CTRL needs at least one index", lineno)
        if len(ctrl_at) > 1:
            raise CircuitParseError("CTRL given more than once", lineno)
        try:
            reals = [float(t) for t in head[1:]]
        except ValueError as e:
            raise CircuitParseError(f"bad coefficient: {e}", lineno) from None
        matrix = tuple(complex(reals[i], reals[i + 1]) for i in range(0, 8, 2))
        bits = _ints(head[:1] + tail, lineno)
        _check_bits(bits, width, lineno)
        return GateSpec(matrix, bits[0], tuple(bits[1:]))
    else:
        raise CircuitParseError(f"unknown gate mnemonic {tokens[0]!r}", lineno)
    _check_bits(bits, width, lineno)
    return named(name, bits[0], *bits[1:])


def _check_bits(bits, width, lineno):
    for k in bits:
        if not 1 <= k <= width:
            raise CircuitParseError(f"bit index {k} outside 1..{width}", lineno)
    if len(set(bits)) != len(bits):
        raise CircuitParseError(f"repeated index among target/controls {bits}", lineno)


def parse_circuit(text: str) -> Circuit:
    width = None
    gates: List[GateSpec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if width is None:
            tokens = line.split()
            if tokens[0].lower() != "n" or len(tokens) != 2:
                raise CircuitParseError("expected header 'n <width>' before any gate", lineno)
            try:
                width = int(tokens[1])
            except ValueError:
                raise CircuitParseError(f"bad width {tokens[1]!r}", lineno) from None
            if width < 1:
                raise CircuitParseError(f"width must be positive, got {width}", lineno)
            continue
        if line.split()[0].lower() == "n":
            raise CircuitParseError("width declared twice", lineno)
        gates.append(parse_gate(line, width, lineno))
    if width is None:
        raise CircuitParseError("missing header 'n <width>'")
    return Circuit(width, gates)


def format_gate(g: GateSpec) -> str:
    if g.name in ONE_BIT and not g.controls:
        return f"{g.name} {g.target}"
    if g.name == "X" and len(g.controls) == 1:
        return f"CNOT {g.target} {g.controls[0]}"
    if g.name == "X" and len(g.controls) == 2:
        return f"TOFFOLI {g.target} {g.controls[0]} {g.controls[1]}"
    coeffs = " ".join(f"{z.real!r} {z.imag!r}" for z in g.matrix)
    ctrl = " CTRL " + " ".join(map(str, g.controls)) if g.controls else ""
    return f"GATE {g.target} {coeffs}{ctrl}"


def format_circuit(c: Circuit) -> str:
    return "\n".join([f"n {c.width}"] + [format_gate(g) for g in c.gates]) + "\n"
