# # Best weights for fixed subspaces
#
# For fixed subspaces with base weights d_i^(-1/2), choosing unit weights
# a >= 0 amounts to minimizing <Bz, z> over the simplex, z = a o a. The
# minimum is found exactly by sweeping supports.

import numpy as np

from fusionframes import WeightProblem, b_matrix, optimal_weights, poc_decompose

# %%
# Three lines in C^3 whose Gram matrix squared entrywise is
# B = [[4, 1, 3], [1, 4, 2], [3, 2, 4]] / 4.

b = np.array([[4, 1, 3], [1, 4, 2], [3, 2, 4]]) / 4.0
prob = WeightProblem.from_gram(np.sqrt(b))
print(np.round(b_matrix(prob).B, 12))

r = optimal_weights(prob)
print("value:", r.value)
print("z:", np.round(r.z_star, 12), "support:", r.support)
# the optimal weights drop the third line, so the optimum is not a frame
print("frame:", r.frame_preserving, "min eigenvalue:", r.min_eigenvalue)

# %%
# Mutually orthogonal pieces can be solved separately and recombined.

e = np.eye(4)
v = np.array([e[0], (e[0] + e[1]) / np.sqrt(2), e[2], (e[2] + 2 * e[3]) / np.sqrt(5)]).T
prob = WeightProblem.from_unit_vectors(v)
dec = poc_decompose(prob)
print("components:", dec.components, "value:", dec.value)
print("direct:", optimal_weights(prob).value)
