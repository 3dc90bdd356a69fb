# %% [markdown]
# # Elementary gates on two bits
#
# Gates are built from projectors (sandwiches by a_k), bit negations n_k and
# the complex structure i.  On two bits the comb basis is the point 1, the
# segments b_1, b_2 and the plane segment b_1b_2.

# %%
import numpy as np

from cartoonsim.circuit import cnot, gate_H, gate_X, gate_Y, gate_Z
from cartoonsim.combs import comb, comb_state_of
from cartoonsim.gates import (
    apply_one_bit,
    matrix_representation,
    multivector_action,
    natural_order,
    planar_multivector,
    swapped_order,
)

np.set_printoptions(precision=4, suppress=True)
nat, swp = natural_order(2), swapped_order(2)
print("natural basis:", [str(o) for o in nat])

# %%
for g in (gate_X(1), gate_X(2), gate_Z(1), gate_Z(2), gate_H(1), cnot(1, 2)):
    print(g.label())
    print(matrix_representation(g, nat).real)

# %% [markdown]
# H_2 and cn_21 take the same block form once b_1 and b_2 swap places.

# %%
print(matrix_representation(gate_H(2), swp).real)
print(matrix_representation(cnot(2, 1), swp).real)

# %% [markdown]
# ## Acting on a whole multivector
# X permutes the components of V = V_0 + V_1 b_1 + V_2 b_2 + V_12 b_1b_2.

# %%
V = planar_multivector(1.0, 2.0, 3.0, 4.0)
print("X_1 V ->", multivector_action(gate_X(1), V))
print("X_2 V ->", multivector_action(gate_X(2), V))

# %% [markdown]
# ## Y carries complex coefficients
# The coefficients sit on imaginary combs (those containing b_0).

# %%
y = apply_one_bit(gate_Y(1), comb("00"))
print("Y_1 c_00 =", y, "  amplitudes:", comb_state_of(y).amps)
