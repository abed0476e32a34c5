# # Minimizing the potential over subspaces
#
# At fixed weights, gradient descent on products of Grassmannians lowers
# FFP = tr S^2. All global minimizers share one spectrum, which is also the
# least-norm point of the polytope of feasible spectra.

import numpy as np

from fusionframes import (DescentConfig, build_polytope, lambda0, multi_start,
                          structure_report)

# %%
# Two planes in C^3 with weights (1/2, 1/2): no tight family exists, and
# every restart lands on potential 3/8 with spectrum (1/2, 1/4, 1/4).

ms = multi_start(3, [2, 2], [0.5, 0.5], DescentConfig(restarts=8, seed=0))
for r in ms.results:
    print(r.restart_index, r.iterations, round(r.ffp, 12), np.round(r.spectrum, 8))
print("spectra agree:", ms.spectra_agree)

# %%
# The least-norm feasible spectrum, computed without any family at all.

res = lambda0(build_polytope(3, [2, 2], [0.5, 0.5]))
print("lambda0:", np.round(res.lambda0, 12), "value:", res.value)

# %%
# At the minimizer each eigenspace of S reduces every subspace, and the
# compressed families are tight.

st = structure_report(ms.best)
print("clusters:", st.eigenvalue_clusters)
print("commutation residual:", st.commutation_residual)
print("tightness residuals:", st.eigenspace_tightness)
print("invertible:", st.invertible)
