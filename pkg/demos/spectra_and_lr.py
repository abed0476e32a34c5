# # Littlewood-Richardson coefficients and majorization
#
# The existence inequalities are indexed by tuples of index sets whose
# partitions have a positive Littlewood-Richardson coefficient.

import numpy as np

from fusionframes import (enumerate_admissible, lr_coefficient, majorizes,
                          partition_of, submajorizes)

# %%
print(lr_coefficient((3, 2, 1), (2, 1), (2, 1)))
print(partition_of((1, 3, 4), n=5))
for t in enumerate_admissible(3, 2, 1):
    print(t.as_dict())

# %%
# Spectra of frame operators always submajorize the uniform vector with the
# same trace.

lam = np.array([0.5, 0.25, 0.25])
print(submajorizes(lam, np.full(3, 1 / 3)), majorizes(lam, np.full(3, 1 / 3)))
