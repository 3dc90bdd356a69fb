# %% [markdown]
# # Toffoli gates squash cubes into walls
#
# In three dimensions the blades are a point, three edges, three walls and
# the cube b_1b_2b_3.  A Toffoli gate maps one wall to the cube and back.

# %%
from cartoonsim.circuit import toffoli
from cartoonsim.clifford import Multivector
from cartoonsim.gates import apply_controlled

b = lambda *g: Multivector.basis(3, *g)  # noqa: E731

for g, wall in ((toffoli(1, 2, 3), b(2, 3)), (toffoli(3, 1, 2), b(1, 2)), (toffoli(2, 3, 1), b(1, 3))):
    cube = apply_controlled(g, wall)
    print(f"{g.label():16s} {wall} -> {cube} -> {apply_controlled(g, cube)}")

# %% [markdown]
# Two different Toffoli gates in a row exchange walls.

# %%
print(apply_controlled(toffoli(3, 1, 2), apply_controlled(toffoli(1, 2, 3), b(2, 3))))
