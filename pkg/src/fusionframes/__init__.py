"""Fusion frames: potential, tight-frame existence, minimizers and optimal weights."""

__version__ = "0.1.0"

from .errors import (BudgetExceededError, FusionFrameError, PreconditionError,
                     ValidationError)
from .linalg import DEFAULT_TOL, ToleranceConfig, eigh, eigvalsh
from .majorization import majorizes, matrix_majorizes, matrix_submajorizes, submajorizes
from .frames import (Subspace, WeightedFamily, dist_operator, dist_punctual, ffp,
                     frame_operator, frame_report, is_frame, is_normalized_pair,
                     is_tight, potential_identity_check, potential_lower_bound,
                     pq_lower_majorization, q_irregularity, q_potential)
from .lr import (AdmissibleTuple, enumerate_admissible, lr_coefficient,
                 multi_lr_coefficient, multi_lr_positive, partition_of)
from .existence import ExistenceVerdict, dimension_screen, tight_exists, verify_tff
from .polytope import SpectrumPolytope, build_polytope, contains, lambda0
from .grassmann import (DescentConfig, MinimizerResult, StructureReport,
                        commutant_is_trivial, descend, descend_free_weights,
                        multi_start, riemannian_gradient, structure_report)
from .hadamard import IndexReport, index_2, index_sp, minimal_index, sp_equals_minimal
from .weights import (OptimalWeights, WeightProblem, b_matrix, is_critical,
                      is_global_min, optimal_weights, poc_decompose)
from .io import ProblemFile, load_problem, parse_problem
