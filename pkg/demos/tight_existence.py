# # When does a tight family of subspaces exist?
#
# Given a dimension n, subspace dimensions d and weights w with
# sum w_i^2 d_i = 1, a tight family has frame operator S = I / n. Whether one
# exists is decided by finitely many linear inequalities on spectra, indexed by
# Littlewood-Richardson positive tuples.

import numpy as np

from fusionframes import dimension_screen, tight_exists

# %%
# Two planes in C^3 with equal weights: the inequality check finds a violated
# inequality, and the cheap dimension screen agrees.

v = tight_exists(3, [2, 2], [0.5, 0.5])
print("exists:", v.exists)
print("violated:", v.violation.as_dict())
for finding in dimension_screen(3, [2, 2], [0.5, 0.5]):
    print("screen:", finding.message)

# %%
# Three lines in the plane with equal weights do admit a tight family (the
# Mercedes-Benz frame); so do four lines in C^3.

for n, dims in [(2, [1, 1, 1]), (3, [1, 1, 1, 1])]:
    w = np.full(len(dims), 1 / np.sqrt(sum(dims)))
    print(n, dims, "->", tight_exists(n, dims, w).exists)

# %%
# Unequal weights can break existence: a line carrying more than 1/n of the
# trace cannot sit inside S = I / n.

print(tight_exists(2, [1, 1, 1], np.sqrt([0.6, 0.2, 0.2])).exists)
print(tight_exists(2, [1, 1, 1], np.sqrt([0.5, 0.25, 0.25])).exists)
