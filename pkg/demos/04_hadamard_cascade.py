# %% [markdown]
# # n Hadamards, 2n - 1 algebra steps
#
# H_1 ... H_n applied to c_{0...0} is the product (1+b_1)...(1+b_n)/sqrt(2^n):
# n sums and n - 1 geometric products produce all 2^n bit strings at once.

# %%
from cartoonsim.circuit import Circuit, gate_H
from cartoonsim.clifford import OpCounter
from cartoonsim.combs import comb_state_of
from cartoonsim.gates import hadamard_cascade, run_circuit, zero_state

print(hadamard_cascade(3))

# %%
print(" n  terms  mult  add  total  gate-by-gate products")
for n in range(1, 11):
    counter = OpCounter()
    product = hadamard_cascade(n, counter)
    gate_counter = OpCounter()
    gates = run_circuit(Circuit(n, [gate_H(k) for k in range(n, 0, -1)]), zero_state(n), gate_counter)
    assert max(abs(product.coeff(m) - gates.coeff(m)) for m in set(product.terms) | set(gates.terms)) < 1e-12
    print(f"{n:2d} {len(product):6d} {counter.multiplications:5d} {counter.additions:4d} {counter.total:6d}"
          f"  {gate_counter.multiplications:10d}")

# %% [markdown]
# Every amplitude is 2^(-n/2):

# %%
print(set(round(a.real, 12) for a in comb_state_of(hadamard_cascade(4)).amps.values()))
