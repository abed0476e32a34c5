# # Hadamard indexes of positive semidefinite matrices
#
# I(G) minimizes <Gz, z> over the affine hyperplane sum z = 1; I_sp(B) is the
# same minimum over the simplex; I_2(A) is the square root of I_sp(A o A).

import numpy as np

from fusionframes import index_2, index_sp, minimal_index, sp_equals_minimal

# %%
rng = np.random.default_rng(1)
x = rng.random((4, 4))
g = x.T @ x
r = minimal_index(g)
print("I(G) by solve:", r.value, "by determinants:", r.cross_check)
print("I_sp(G):", index_sp(g).value)

# %%
# Diagonal matrices have closed forms.

d = np.array([1.0, 2.0, 4.0])
print(index_sp(np.diag(d)).value, 1 / np.sum(1 / d))
print(index_2(np.diag(d)).value, np.sum(d ** -2.0) ** -0.5)

# %%
# I_sp and I agree exactly when G u = 1 has a non-negative solution.

b = np.array([[4, 1, 3], [1, 4, 2], [3, 2, 4]]) / 4.0
print(sp_equals_minimal(b))
