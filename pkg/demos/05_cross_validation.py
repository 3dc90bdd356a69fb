# %% [markdown]
# # Checking the geometric engine against a state-vector simulator
#
# The oracle is an ordinary dense simulator with Kronecker-structured gates.
# Under the comb <-> amplitude correspondence both must agree on every circuit.

# %%
import numpy as np

from cartoonsim.circuit import named
from cartoonsim.crosscheck import fuzz, replay, engine_difference
from cartoonsim.gates import lexicographic_order, matrix_representation
from cartoonsim.oracle import embedded_operator

# single-gate matrices: geometric construction vs Kronecker product
worst = 0.0
for n in range(1, 5):
    for name in "XYZHST":
        for k in range(1, n + 1):
            g = named(name, k)
            worst = max(worst, np.abs(matrix_representation(g, lexicographic_order(n)) - embedded_operator(g, n)).max())
print("largest matrix entry difference:", worst)

# %%
report = fuzz(width=5, depth=30, trials=200, seed=1)
print(report.to_text())

# %% [markdown]
# Any trial can be replayed from its recorded seed.

# %%
t = report.trials[17]
circuit, psi = replay(5, 30, t.seed)
print(" ".join(g.label() for g in circuit.gates))
print(engine_difference(circuit, psi) == t.max_diff)
