"""Gate specifications and circuits (plain data, no algebra).

A one-bit gate is given by its coefficient matrix ``(alpha, beta; gamma,
delta)``: on a comb whose target bit is 0 it produces ``alpha*c +
beta*n_k(c)``, on a comb whose target bit is 1 it produces ``delta*c +
gamma*n_k(c)``.  Acting on amplitude vectors this is the transpose,
``[[alpha, gamma], [beta, delta]]``.

Complex coefficients are Python ``complex`` numbers whose imaginary part is
read as a multiple of the complex structure ``i``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

Matrix2 = Tuple[complex, complex, complex, complex]

_R = 1 / math.sqrt(2)

# (alpha, beta, gamma, delta) for the named gates
NAMED_MATRICES = {
    "I": (1, 0, 0, 1),
    "X": (0, 1, 1, 0),
    "Y": (0, -1j, 1j, 0),
    "Z": (1, 0, 0, -1),
    "H": (_R, _R, _R, -_R),
    "S": (1, 0, 0, 1j),
    "T": (1, 0, 0, cmath.exp(1j * math.pi / 4)),
}


@dataclass(frozen=True)
class GateSpec:
    """A (possibly controlled) one-bit gate.

    ``name`` is one of the keys of :data:`NAMED_MATRICES` for the named
    gates and ``None`` for any other matrix; it is filled in automatically
    when the matrix matches a named gate exactly.  Controls fire on bit
    value 1.
    """

    matrix: Matrix2
    target: int
    controls: Tuple[int, ...] = ()
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(complex(z) for z in self.matrix))
        object.__setattr__(self, "controls", tuple(self.controls))
        if len(self.matrix) != 4:
            raise ValueError("gate matrix needs exactly four entries (alpha, beta, gamma, delta)")
        if self.target in self.controls:
            raise ValueError(f"target bit {self.target} also listed as a control")
        if len(set(self.controls)) != len(self.controls):
            raise ValueError(f"duplicate control bits {self.controls}")
        if self.name is not None:
            if self.name not in NAMED_MATRICES:
                raise ValueError(f"unknown gate name {self.name!r}")
            if tuple(map(complex, NAMED_MATRICES[self.name])) != self.matrix:
                raise ValueError(f"matrix does not match named gate {self.name}")
        if self.name is None:
            # a matrix identical to a named gate's is that gate
            for key, m in NAMED_MATRICES.items():
                if tuple(map(complex, m)) == self.matrix:
                    object.__setattr__(self, "name", key)
                    break

    @property
    def bits(self) -> Tuple[int, ...]:
        return (self.target,) + self.controls

    def validate(self, width: int) -> None:
        for k in self.bits:
            if not 1 <= k <= width:
                raise ValueError(f"bit index {k} outside 1..{width}")

    def label(self) -> str:
        base = self.name or "G"
        if self.name == "X" and len(self.controls) == 1:
            base = "CNOT"
        elif self.name == "X" and len(self.controls) == 2:
            base = "TOFFOLI"
        return base + "(" + ",".join(map(str, self.bits)) + ")"


def named(name: str, target: int, *controls: int) -> GateSpec:
    return GateSpec(NAMED_MATRICES[name], target, tuple(controls), name)


def gate_X(k: int) -> GateSpec:
    return named("X", k)


def gate_Y(k: int) -> GateSpec:
    return named("Y", k)


def gate_Z(k: int) -> GateSpec:
    return named("Z", k)


def gate_H(k: int) -> GateSpec:
    return named("H", k)


def gate_S(k: int) -> GateSpec:
    return named("S", k)


def gate_T(k: int) -> GateSpec:
    return named("T", k)


def cnot(target: int, control: int) -> GateSpec:
    """``cn_{kl}``: flip bit ``target`` where bit ``control`` is 1."""
    return named("X", target, control)


def toffoli(target: int, control1: int, control2: int) -> GateSpec:
    """``cn_{klm}`` with ``k = target``."""
    return named("X", target, control1, control2)


def general(matrix: Sequence[complex], target: int, controls: Sequence[int] = ()) -> GateSpec:
    return GateSpec(tuple(matrix), target, tuple(controls))


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: Tuple[GateSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise ValueError(f"circuit width must be positive, got {self.width}")
        for g in self.gates:
            g.validate(self.width)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)
