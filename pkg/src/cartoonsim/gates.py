"""Gate action on comb-supported multivectors and on comb states.

Two evaluation routes are provided:

* the multivector route realizes every gate through geometric products:
  projectors ``(1 +/- (-1)**A_k)/2`` come from :func:`sandwich_ak`, bit
  flips from :func:`negate_bit` and complex scalars from :func:`i_map`;
* the comb-state route updates amplitudes directly by bit string.

Both must agree under :func:`comb_state_of`.
"""
from __future__ import annotations

import cmath
import math
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np

from .circuit import Circuit, GateSpec
from .clifford import Multivector, OpCounter, mv_add, mv_product, mv_scale, MAX_WIDTH
from .combs import (
    CombIndex,
    CombState,
    comb_encode,
    comb_state_of,
    complex_scale,
    mask_of,
    negate_bit,
    sandwich_ak,
)

_R = 1 / math.sqrt(2)
_E8 = cmath.exp(1j * math.pi / 4)


def _projectors(k: int, x: Multivector, counter: Optional[OpCounter]):
    # (x + a_k^* x a_k)/2 keeps A_k = 0, (x - a_k^* x a_k)/2 keeps A_k = 1
    z = sandwich_ak(k, x, counter)
    p0 = mv_scale(mv_add(x, z, counter), 0.5)
    p1 = mv_scale(mv_add(x, mv_scale(z, -1.0), counter), 0.5)
    return p0, p1


def _branch(same: complex, flipped: complex, k: int, p: Multivector,
            counter: Optional[OpCounter]) -> Multivector:
    # (same + flipped * n_k) p
    out = Multivector(p.width)
    if not p:
        return out
    if same != 0:
        out = complex_scale(same, p)
    if flipped != 0:
        out = mv_add(out, complex_scale(flipped, negate_bit(k, p, counter)), counter)
    return out


def apply_one_bit(g: GateSpec, x: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """Uncontrolled gate ``G_k`` on a comb-supported multivector."""
    if g.controls:
        raise ValueError("apply_one_bit takes an uncontrolled gate; use apply_controlled")
    g.validate(x.width)
    alpha, beta, gamma, delta = g.matrix
    p0, p1 = _projectors(g.target, x, counter)
    return mv_add(
        _branch(alpha, beta, g.target, p0, counter),
        _branch(delta, gamma, g.target, p1, counter),
        counter,
    )


def apply_controlled(g: GateSpec, x: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """Gate with any number of controls, built by nesting one control at a time.

    With controls ``(l, ..., m)`` this evaluates
    ``P0_m x + G_{k l ...}(P1_m x)`` recursively, ``P0``/``P1`` being the
    bit projectors, so a single control gives ``cn_{kl}`` and two give the
    Toffoli gate ``cn_{klm}``.
    """
    g.validate(x.width)

    def nest(controls, y):
        if not controls:
            return apply_one_bit(GateSpec(g.matrix, g.target, (), g.name), y, counter)
        p0, p1 = _projectors(controls[-1], y, counter)
        if not p1:
            return p0
        return mv_add(p0, nest(controls[:-1], p1), counter)

    return nest(g.controls, x)


apply_gate = apply_controlled


# -- the gates written as the sandwich recipes themselves --------------------

def x_sandwich(k: int, x: Multivector) -> Multivector:
    return negate_bit(k, x)


def y_sandwich(k: int, x: Multivector) -> Multivector:
    return complex_scale(-1j, negate_bit(k, sandwich_ak(k, x)))


def z_sandwich(k: int, x: Multivector) -> Multivector:
    return sandwich_ak(k, x)


def h_sandwich(k: int, x: Multivector) -> Multivector:
    return mv_scale(mv_add(negate_bit(k, x), sandwich_ak(k, x)), _R)


def _diagonal_sandwich(phase: complex, k: int, x: Multivector) -> Multivector:
    return mv_add(complex_scale((1 + phase) / 2, x), complex_scale((1 - phase) / 2, sandwich_ak(k, x)))


def s_sandwich(k: int, x: Multivector) -> Multivector:
    return _diagonal_sandwich(1j, k, x)


def t_sandwich(k: int, x: Multivector) -> Multivector:
    return _diagonal_sandwich(_E8, k, x)


SANDWICH_FORMS: Dict[str, Callable[[int, Multivector], Multivector]] = {
    "X": x_sandwich,
    "Y": y_sandwich,
    "Z": z_sandwich,
    "H": h_sandwich,
    "S": s_sandwich,
    "T": t_sandwich,
}


# -- comb-state route ----------------------------------------------------------

def apply_gate_comb(g: GateSpec, s: CombState) -> CombState:
    """Direct amplitude update on a :class:`CombState`."""
    g.validate(s.width)
    alpha, beta, gamma, delta = g.matrix
    t = g.target - 1
    ctrl = [c - 1 for c in g.controls]
    out: Dict[str, complex] = {}

    def put(bits, a):
        out[bits] = out.get(bits, 0j) + a

    for bits, a in s.amps.items():
        if any(bits[c] != "1" for c in ctrl):
            put(bits, a)
            continue
        flipped = bits[:t] + ("1" if bits[t] == "0" else "0") + bits[t + 1:]
        if bits[t] == "0":
            same, other = alpha, beta
        else:
            same, other = delta, gamma
        if same != 0:
            put(bits, same * a)
        if other != 0:
            put(flipped, other * a)
    return CombState(s.width, out)


State = Union[Multivector, CombState]


def run_circuit(c: Circuit, initial: State, counter: Optional[OpCounter] = None) -> State:
    """Apply the gates of ``c`` in order; the result has the input's type."""
    if initial.width != c.width:
        raise ValueError(f"state width {initial.width} does not match circuit width {c.width}")
    state = initial
    if isinstance(initial, CombState):
        for g in c.gates:
            state = apply_gate_comb(g, state)
        return state
    for g in c.gates:
        state = apply_controlled(g, state, counter)
    return state


def zero_state(width: int) -> Multivector:
    """``c_{0...0}``, i.e. the scalar 1."""
    return Multivector.scalar(width)


# -- matrix pictures -------------------------------------------------------------

def natural_order(width: int) -> List[CombIndex]:
    """``1, b_1, b_2, b_1b_2, b_3, ...``: binary counting with ``A_1`` least significant."""
    return [CombIndex(0, "".join(str(i >> j & 1) for j in range(width))) for i in range(1 << width)]


def swapped_order(width: int, k: int = 1, l: int = 2) -> List[CombIndex]:
    """:func:`natural_order` with the roles of bits ``k`` and ``l`` exchanged."""
    out = []
    for idx in natural_order(width):
        b = list(idx.bits)
        b[k - 1], b[l - 1] = b[l - 1], b[k - 1]
        out.append(CombIndex(0, "".join(b)))
    return out


def lexicographic_order(width: int) -> List[CombIndex]:
    """Bit strings in lexicographic order (``A_1`` most significant)."""
    return [CombIndex(0, format(i, f"0{width}b")) for i in range(1 << width)]


def matrix_representation(op: Union[Circuit, GateSpec], basis_order: Sequence[Union[CombIndex, str]]) -> np.ndarray:
    """Matrix of ``op`` on comb amplitudes, rows and columns in ``basis_order``.

    Column ``j`` is the comb state of ``op`` applied to the ``j``-th basis
    comb.  Entries are taken from the multivector route.
    """
    order = [b if isinstance(b, CombIndex) else CombIndex(0, b) for b in basis_order]
    if not order:
        raise ValueError("empty basis order")
    width = order[0].width
    if any(b.zeroth for b in order):
        raise ValueError("basis combs must have zeroth bit 0")
    if sorted(b.bits for b in order) != [format(i, f"0{width}b") for i in range(1 << width)]:
        raise ValueError(f"basis order is not a permutation of all {1 << width} combs of width {width}")
    circuit = op if isinstance(op, Circuit) else Circuit(width, (op,))
    if circuit.width != width:
        raise ValueError(f"operator width {circuit.width} does not match basis width {width}")
    m = np.zeros((len(order), len(order)), dtype=complex)
    for j, col in enumerate(order):
        image = comb_state_of(run_circuit(circuit, Multivector.from_blade(width, comb_encode(col))))
        for i, row in enumerate(order):
            m[i, j] = image.amplitude(row.bits)
    return m


def planar_multivector(v0: float, v1: float, v2: float, v12: float) -> Multivector:
    """``V = V_0 + V_1 b_1 + V_2 b_2 + V_12 b_1b_2`` at width 2."""
    return Multivector(2, {0: v0, mask_of("10"): v1, mask_of("01"): v2, mask_of("11"): v12})


def multivector_action(g: GateSpec, v: Multivector) -> tuple:
    """Components ``(V_0, V_1, V_2, V_12)`` of ``g`` applied to a width-2 multivector."""
    if v.width != 2:
        raise ValueError(f"multivector_action needs width 2, got {v.width}")
    out = apply_controlled(g, v)
    return tuple(out.coeff(mask_of(bits)) for bits in ("00", "10", "01", "11"))


def hadamard_cascade(n: int, counter: Optional[OpCounter] = None) -> Multivector:
    """``(1 + b_1)(1 + b_2)...(1 + b_n) / sqrt(2**n)``, multiplied left to right.

    Uses ``n`` additions and ``n - 1`` products on ``counter``.
    """
    if not 1 <= n <= MAX_WIDTH:
        raise ValueError(f"cascade width must lie in 1..{MAX_WIDTH}, got {n}")
    one = Multivector.scalar(n)
    acc = None
    for k in range(1, n + 1):
        factor = mv_add(one, Multivector.from_blade(n, 1 << k), counter)
        acc = factor if acc is None else mv_product(acc, factor, counter)
    return mv_scale(acc, 2.0 ** (-n / 2))
