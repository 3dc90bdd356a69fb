"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py`` (or this file directly); a PASS/FAIL
line per criterion is printed in the terminal summary.
"""
import cmath
import itertools
import math
import random
import time

import numpy as np
import pytest

from cartoonsim.circuit import Circuit, cnot, gate_H, gate_S, gate_T, gate_X, gate_Z, named, toffoli
from cartoonsim.clifford import Multivector, OpCounter, mv_add, mv_product, reverse
from cartoonsim.combs import (
    CombIndex,
    CombState,
    comb_encode,
    comb_state_of,
    i_map,
    left_mult_bk,
    multivector_of,
    negate_bit,
    sandwich_ak,
)
from cartoonsim.crosscheck import fuzz
from cartoonsim.gates import (
    SANDWICH_FORMS,
    apply_controlled,
    apply_one_bit,
    hadamard_cascade,
    matrix_representation,
    multivector_action,
    natural_order,
    planar_multivector,
    run_circuit,
    swapped_order,
    zero_state,
)

COEFF_TOL = 1e-12
ORACLE_TOL = 1e-10
R2 = 1 / math.sqrt(2)


def combs(n):
    for zeroth in (0, 1):
        for bits in itertools.product("01", repeat=n):
            yield CombIndex(zeroth, "".join(bits))


def mv(idx, coeff=1.0):
    return Multivector.from_blade(idx.width, comb_encode(idx), coeff)


def bit(idx, j):
    return idx.zeroth if j == 0 else int(idx.bits[j - 1])


def toggled(idx, k):
    if k == 0:
        return CombIndex(1 - idx.zeroth, idx.bits)
    b = list(idx.bits)
    b[k - 1] = str(1 - int(b[k - 1]))
    return CombIndex(idx.zeroth, "".join(b))


def close(x, y, tol=COEFF_TOL):
    keys = set(x.terms) | set(y.terms)
    return x.width == y.width and all(abs(x.coeff(k) - y.coeff(k)) <= tol for k in keys)


def test_ac1_binary_coding_identities():
    """AC1 comb identities (sandwich, b_k sign law, n_k, i^2, [i, n_k]) exhaustive at n=4"""
    n = 4
    start = time.perf_counter()
    for idx in combs(n):
        x = mv(idx)
        for k in range(1, n + 1):
            assert sandwich_ak(k, x) == mv(idx, (-1) ** bit(idx, k))
            assert negate_bit(k, x) == mv(toggled(idx, k))
            assert i_map(negate_bit(k, x)) == negate_bit(k, i_map(x))
        for k in range(0, n + 1):
            sign = (-1) ** sum(bit(idx, j) for j in range(k))
            assert left_mult_bk(k, x) == mv(toggled(idx, k), sign)
        assert i_map(x) == mv(toggled(idx, 0), (-1) ** (1 - idx.zeroth))
        assert i_map(i_map(x)) == mv(idx, -1.0)
    assert time.perf_counter() - start < 1.0


COMPONENTS = {
    # gate: (image of target bit 0, image of target bit 1) as (same, flipped) factors
    "X": ((0, 1), (0, 1)),
    "Y": ((0, -1j), (0, 1j)),
    "Z": ((1, 0), (-1, 0)),
    "H": ((R2, R2), (-R2, R2)),
    "S": ((1, 0), (1j, 0)),
    "T": ((1, 0), (cmath.exp(1j * math.pi / 4), 0)),
}


def test_ac2_component_table():
    """AC2 X/Y/Z/H/S/T component equations, all k at n=3, sandwich and matrix paths"""
    n = 3
    for name, branches in COMPONENTS.items():
        for k in range(1, n + 1):
            for bits in itertools.product("01", repeat=n):
                bits = "".join(bits)
                same, flipped = branches[int(bits[k - 1])]
                fb = toggled(CombIndex(0, bits), k).bits
                expected = {bits: same}
                expected[fb] = expected.get(fb, 0) + flipped
                x = mv(CombIndex(0, bits))
                for out in (apply_one_bit(named(name, k), x), SANDWICH_FORMS[name](k, x)):
                    got = comb_state_of(out)
                    for b in set(got.amps) | set(expected):
                        assert abs(got.amplitude(b) - expected.get(b, 0)) <= COEFF_TOL, (name, k, bits)


def test_ac3_matrices():
    """AC3 the eight 4x4 matrices for X, Z, H, cnot at n=2 and the X action on V"""
    nat, swp = natural_order(2), swapped_order(2)
    exact = [
        (gate_X(1), nat, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
        (gate_X(2), nat, [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
        (gate_Z(1), nat, np.diag([1, -1, 1, -1])),
        (gate_Z(2), nat, np.diag([1, 1, -1, -1])),
        (cnot(1, 2), nat, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
        (cnot(2, 1), swp, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    ]
    for g, order, expected in exact:
        assert (matrix_representation(g, order) == np.array(expected)).all(), g.label()
    hblock = np.array([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 1, -1]]) * R2
    for g, order in ((gate_H(1), nat), (gate_H(2), swp)):
        assert np.max(np.abs(matrix_representation(g, order) - hblock)) <= COEFF_TOL
    v = (0.5, -1.25, 2.0, 3.5)
    V = planar_multivector(*v)
    assert multivector_action(gate_X(1), V) == (v[1], v[0], v[3], v[2])
    assert multivector_action(gate_X(2), V) == (v[2], v[3], v[0], v[1])


def test_ac4_toffoli_cube():
    """AC4 Toffoli cube/wall mappings and wall exchange"""
    b = lambda *g: Multivector.basis(3, *g)  # noqa: E731
    cases = [
        (toffoli(1, 2, 3), b(2, 3), b(1, 2, 3)),
        (toffoli(1, 2, 3), b(1, 2, 3), b(2, 3)),
        (toffoli(3, 1, 2), b(1, 2), b(1, 2, 3)),
        (toffoli(3, 1, 2), b(1, 2, 3), b(1, 2)),
        (toffoli(2, 3, 1), b(1, 3), b(1, 2, 3)),
        (toffoli(2, 3, 1), b(1, 2, 3), b(1, 3)),
    ]
    for g, before, after in cases:
        assert apply_controlled(g, before) == after, g.label()
    assert apply_controlled(toffoli(3, 1, 2), apply_controlled(toffoli(1, 2, 3), b(2, 3))) == b(1, 2)


def test_ac5_hadamard_cascade():
    """AC5 cascade n=1..10: product form, gate-by-gate, uniform 2^(-n/2), n-1 products + n sums"""
    start = time.perf_counter()
    for n in range(1, 11):
        counter = OpCounter()
        cascade = hadamard_cascade(n, counter)
        assert (counter.multiplications, counter.additions) == (n - 1, n)
        product = Multivector.scalar(n)
        for k in range(1, n + 1):
            product = product * (Multivector.scalar(n) + Multivector.basis(n, k))
        product = product * 2 ** (-n / 2)
        gates = run_circuit(Circuit(n, [gate_H(k) for k in range(n, 0, -1)]), zero_state(n))
        assert close(cascade, product) and close(cascade, gates)
        assert len(cascade) == 2 ** n
        assert all(not m & 1 and abs(c - 2 ** (-n / 2)) <= COEFF_TOL for m, c in cascade.terms.items())
    assert time.perf_counter() - start < 5.0


def test_ac6_oracle_equivalence():
    """AC6 1000 seeded random circuits (n=5, depth 30) agree with the state-vector oracle"""
    start = time.perf_counter()
    report = fuzz(5, 30, 1000, seed=20260101)
    assert len(report.trials) == 1000
    assert report.passed, report.to_text()
    assert report.max_diff < ORACLE_TOL
    assert time.perf_counter() - start < 60.0


def test_ac7_algebra_properties():
    """AC7 associativity, reverse anti-automorphism, Clifford relation, involutions, S^2=Z, T^2=S, norms"""
    rng = random.Random(77)

    def rand_mv():
        return Multivector(4, {rng.randrange(64): rng.uniform(-1, 1) for _ in range(rng.randint(1, 10))})

    for _ in range(300):
        x, y, z = rand_mv(), rand_mv(), rand_mv()
        assert close(mv_product(mv_product(x, y), z), mv_product(x, mv_product(y, z)))
        assert close(reverse(mv_product(x, y)), mv_product(reverse(y), reverse(x)))
    for k in range(6):
        for l in range(6):
            bk, bl = Multivector.basis(4, k), Multivector.basis(4, l)
            assert mv_add(bk * bl, bl * bk) == (Multivector.scalar(4, 2.0) if k == l else Multivector(4))

    for n in (2, 3, 4):
        involutions = [f(k) for k in range(1, n + 1) for f in (gate_X, gate_Z, gate_H)]
        involutions += [cnot(k, l) for k, l in itertools.permutations(range(1, n + 1), 2)]
        involutions += [toffoli(*p) for p in itertools.permutations(range(1, n + 1), 3)]
        for idx in combs(n):
            x = mv(idx)
            for g in involutions:
                assert close(apply_controlled(g, apply_controlled(g, x)), x), g.label()
            for k in range(1, n + 1):
                assert close(apply_one_bit(gate_S(k), apply_one_bit(gate_S(k), x)), apply_one_bit(gate_Z(k), x))
                assert close(apply_one_bit(gate_T(k), apply_one_bit(gate_T(k), x)), apply_one_bit(gate_S(k), x))

    nprng = np.random.default_rng(7)
    n = 4
    gates = [named(nm, k) for nm in "XYZHST" for k in range(1, n + 1)] + [cnot(2, 4), toffoli(1, 3, 4)]
    for _ in range(20):
        v = nprng.normal(size=2 ** n) + 1j * nprng.normal(size=2 ** n)
        x = multivector_of(CombState.from_vector(n, v))
        before = comb_state_of(x).norm2()
        for g in gates:
            assert abs(comb_state_of(apply_controlled(g, x)).norm2() - before) < ORACLE_TOL


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
