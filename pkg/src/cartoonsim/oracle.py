"""Dense tensor-product state-vector simulator used as ground truth.

Deliberately independent of the geometric-algebra code: it only reads the
target/control indices and gate name (or coefficient matrix) off a
:class:`~cartoonsim.circuit.GateSpec`.  The amplitude index of a bit string
``A_1...A_n`` is ``int(A_1...A_n, 2)``, so ``A_1`` is the most significant
bit and corresponds to the first tensor factor.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

from .circuit import Circuit, GateSpec

MAX_ORACLE_WIDTH = 20

# amplitude-space matrices, read off the component equations:
# column j is the image of |j>
GATE_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, 1j], [-1j, 0]], dtype=complex),  # Y|0> = -i|1>, Y|1> = i|0>
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex),
}


def gate_matrix(g: GateSpec) -> np.ndarray:
    if g.name is not None:
        return GATE_MATRICES[g.name]
    alpha, beta, gamma, delta = g.matrix
    # target bit 0 -> alpha|0> + beta|1>, target bit 1 -> gamma|0> + delta|1>
    return np.array([[alpha, gamma], [beta, delta]], dtype=complex)


def zero_vector(n: int) -> np.ndarray:
    if not 1 <= n <= MAX_ORACLE_WIDTH:
        raise ValueError(f"oracle width must lie in 1..{MAX_ORACLE_WIDTH}, got {n}")
    psi = np.zeros(2 ** n, dtype=complex)
    psi[0] = 1.0
    return psi


def basis_vector(bits: str) -> np.ndarray:
    psi = np.zeros(2 ** len(bits), dtype=complex)
    psi[int(bits, 2)] = 1.0
    return psi


def oracle_apply(g: GateSpec, psi: np.ndarray) -> np.ndarray:
    """Controlled 2x2 update of the target qubit; controls fire on 1."""
    psi = np.asarray(psi, dtype=complex)
    n = int(np.log2(psi.size))
    if psi.size != 2 ** n:
        raise ValueError(f"state length {psi.size} is not a power of two")
    for q in (g.target, *g.controls):
        if not 1 <= q <= n:
            raise ValueError(f"qubit {q} outside 1..{n}")
    u = gate_matrix(g)
    tensor = psi.reshape((2,) * n).copy()
    sel = [slice(None)] * n
    for c in g.controls:
        sel[c - 1] = 1
    sub = tensor[tuple(sel)]
    # the target axis position inside the sub-array after integer indexing
    axis = (g.target - 1) - sum(1 for c in g.controls if c < g.target)
    sub = np.moveaxis(np.tensordot(u, sub, axes=([1], [axis])), 0, axis)
    tensor[tuple(sel)] = sub
    return tensor.reshape(-1)


def oracle_run(c: Circuit, psi: np.ndarray | None = None) -> np.ndarray:
    psi = zero_vector(c.width) if psi is None else np.asarray(psi, dtype=complex)
    if psi.size != 2 ** c.width:
        raise ValueError(f"state length {psi.size} does not match width {c.width}")
    for g in c.gates:
        psi = oracle_apply(g, psi)
    return psi


def embedded_operator(g: GateSpec, n: int) -> np.ndarray:
    """Full ``2**n x 2**n`` matrix of a gate: Kronecker products for the
    uncontrolled case, projector sum for controlled gates."""
    eye = np.eye(2, dtype=complex)
    p0 = np.diag([1, 0]).astype(complex)
    p1 = np.diag([0, 1]).astype(complex)
    u = gate_matrix(g)
    if not g.controls:
        return reduce(np.kron, [u if q == g.target else eye for q in range(1, n + 1)])
    total = np.zeros((2 ** n, 2 ** n), dtype=complex)
    # sum over control assignments; only all-ones applies u
    for pattern in range(2 ** len(g.controls)):
        vals = {c: pattern >> i & 1 for i, c in enumerate(g.controls)}
        fire = all(vals.values())
        factors = []
        for q in range(1, n + 1):
            if q in vals:
                factors.append(p1 if vals[q] else p0)
            elif q == g.target:
                factors.append(u if fire else eye)
            else:
                factors.append(eye)
        total += reduce(np.kron, factors)
    return total
