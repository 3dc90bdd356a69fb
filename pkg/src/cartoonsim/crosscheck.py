"""Differential testing of the geometric-algebra engine against the oracle."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .circuit import Circuit, GateSpec, cnot, named, toffoli
from .combs import CombState, comb_state_of, multivector_of
from .gates import run_circuit
from .oracle import oracle_run

TOLERANCE = 1e-10
GATE_SET = ("X", "Y", "Z", "H", "S", "T", "CNOT", "TOFFOLI")
_ARITY = {"CNOT": 2, "TOFFOLI": 3}


@dataclass
class TrialResult:
    seed: int
    max_diff: float
    passed: bool
    circuit: Optional[str] = None


@dataclass
class Report:
    tolerance: float = TOLERANCE
    trials: List[TrialResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)

    @property
    def max_diff(self) -> float:
        return max((t.max_diff for t in self.trials), default=0.0)

    @property
    def failures(self) -> List[TrialResult]:
        return [t for t in self.trials if not t.passed]

    def to_text(self, verbose: bool = False) -> str:
        lines = []
        for i, t in enumerate(self.trials):
            if verbose or not t.passed:
                lines.append(f"trial {i} seed={t.seed} max_diff={t.max_diff:.3e} {'PASS' if t.passed else 'FAIL'}")
        lines.append(
            f"{len(self.trials)} trials, {len(self.failures)} failed, "
            f"max_diff={self.max_diff:.3e}, tolerance={self.tolerance:g}: {'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_diff": self.max_diff,
            "trials": [asdict(t) for t in self.trials],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def random_state(width: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=2 ** width) + 1j * rng.normal(size=2 ** width)
    return v / np.linalg.norm(v)


def random_circuit(width: int, depth: int, rng: np.random.Generator,
                   gate_set: Sequence[str] = GATE_SET) -> Circuit:
    usable = [name for name in gate_set if _ARITY.get(name, 1) <= width]
    if depth and not usable:
        raise ValueError(f"no gate in {tuple(gate_set)} fits width {width}")
    gates: List[GateSpec] = []
    for _ in range(depth):
        name = usable[rng.integers(len(usable))]
        bits = [int(b) + 1 for b in rng.choice(width, size=_ARITY.get(name, 1), replace=False)]
        if name == "CNOT":
            gates.append(cnot(*bits))
        elif name == "TOFFOLI":
            gates.append(toffoli(*bits))
        else:
            gates.append(named(name, bits[0]))
    return Circuit(width, gates)


def engine_difference(c: Circuit, psi: np.ndarray) -> float:
    """Max amplitude difference between the multivector route and the oracle."""
    start = CombState.from_vector(c.width, psi)
    ga = comb_state_of(run_circuit(c, multivector_of(start))).to_vector()
    ref = oracle_run(c, psi)
    return float(np.max(np.abs(ga - ref)))


def isomorphism_check(c: Circuit, trials: int, seed: int, tolerance: float = TOLERANCE) -> Report:
    """Run ``c`` on ``trials`` random initial states through both engines."""
    rng = np.random.default_rng(seed)
    report = Report(tolerance)
    for _ in range(trials):
        trial_seed = int(rng.integers(2 ** 63))
        psi = random_state(c.width, np.random.default_rng(trial_seed))
        d = engine_difference(c, psi)
        report.trials.append(TrialResult(trial_seed, d, d < tolerance))
    return report


def fuzz(width: int, depth: int, trials: int, seed: int,
         gate_set: Sequence[str] = GATE_SET, tolerance: float = TOLERANCE) -> Report:
    """Random circuits on random initial states, each replayable from its seed."""
    rng = np.random.default_rng(seed)
    report = Report(tolerance)
    for _ in range(trials):
        trial_seed = int(rng.integers(2 ** 63))
        trial_rng = np.random.default_rng(trial_seed)
        c = random_circuit(width, depth, trial_rng, gate_set)
        psi = random_state(width, trial_rng)
        d = engine_difference(c, psi)
        passed = d < tolerance
        report.trials.append(TrialResult(
            trial_seed, d, passed, None if passed else " ".join(g.label() for g in c.gates)))
    return report


def replay(width: int, depth: int, trial_seed: int, gate_set: Sequence[str] = GATE_SET):
    """Rebuild the circuit and initial state of one fuzz trial."""
    trial_rng = np.random.default_rng(trial_seed)
    c = random_circuit(width, depth, trial_rng, gate_set)
    return c, random_state(width, trial_rng)
