"""Quantum-like circuits on multivectors of a real Clifford algebra.

n-bit strings are coded by blades ("combs") of an (n+2)-dimensional
Euclidean space and gates act through geometric products, with no tensor
products anywhere.  A dense state-vector simulator is included as an
independent reference.
"""
from .circuit import (
    Circuit,
    GateSpec,
    NAMED_MATRICES,
    cnot,
    gate_H,
    gate_S,
    gate_T,
    gate_X,
    gate_Y,
    gate_Z,
    general,
    named,
    toffoli,
)
from .clifford import (
    Multivector,
    OpCounter,
    blade,
    blade_product,
    mv_add,
    mv_product,
    mv_scale,
    reverse,
)
from .combs import (
    CombIndex,
    CombState,
    comb,
    comb_decode,
    comb_encode,
    comb_state_of,
    i_map,
    is_imaginary,
    left_mult_bk,
    multivector_of,
    negate_bit,
    phase_exp,
    sandwich_ak,
    special_blades,
)
from .gates import (
    apply_controlled,
    apply_gate,
    apply_gate_comb,
    apply_one_bit,
    hadamard_cascade,
    matrix_representation,
    multivector_action,
    natural_order,
    run_circuit,
    swapped_order,
)
from .parsing import CircuitParseError, format_circuit, parse_circuit

__version__ = "0.1.0"
