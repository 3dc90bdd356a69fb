# %% [markdown]
# # Coding bits with blades
#
# A register of n bits lives in the Clifford algebra of an (n+2)-dimensional
# Euclidean space with generators b_0, b_1, ..., b_n, b_{n+1}.  The blades
# without b_{n+1} ("combs") carry bit strings: b_k present <=> A_k = 1, and
# b_0 present <=> the zeroth bit is 1 (which acts as an imaginary marker).

# %%
from cartoonsim.clifford import Multivector
from cartoonsim.combs import (
    CombIndex,
    comb,
    comb_decode,
    comb_encode,
    comb_state_of,
    i_map,
    left_mult_bk,
    negate_bit,
    sandwich_ak,
)

n = 3
for idx in [CombIndex(0, "000"), CombIndex(0, "100"), CombIndex(0, "011"), CombIndex(1, "111")]:
    m = comb_encode(idx)
    print(f"c_{{{idx}}} ->", Multivector.from_blade(n, m), "  decodes back to", comb_decode(m, n))

# %% [markdown]
# ## The complex structure
# i flips the zeroth bit with a sign, and squares to -1.

# %%
x = comb("010")
print("x       =", x)
print("i x     =", i_map(x))
print("i i x   =", i_map(i_map(x)))
print("amplitudes of i x:", comb_state_of(i_map(x)).amps)

# %% [markdown]
# ## Three bit-level identities, evaluated as literal geometric products
# The sandwich by a_k = b_k b_{n+1} reads off bit k as a sign; left
# multiplication by b_k flips bit k with a sign counting lower set bits; the
# nested sandwich n_k flips bit k with no sign at all.

# %%
c = Multivector.from_blade(n, comb_encode(CombIndex(1, "110")))
for k in range(1, n + 1):
    print(f"k={k}:  a_k* c a_k = {sandwich_ak(k, c)}   b_k c = {left_mult_bk(k, c)}   n_k c = {negate_bit(k, c)}")

# %% [markdown]
# i commutes with every n_k (k >= 1) but not with b_0:

# %%
print(i_map(negate_bit(2, c)) == negate_bit(2, i_map(c)))
print(i_map(left_mult_bk(0, c)) == left_mult_bk(0, i_map(c)))
