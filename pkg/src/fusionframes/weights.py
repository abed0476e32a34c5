"""Optimal weights for a fixed family of subspaces.

With base weights ``w_i = d_i ** -0.5`` and a unit vector ``a >= 0`` the
family ``a . W_w`` has a trace-one frame operator, and its potential is
``<B z, z>`` with ``z = a o a`` and ``B_ij = w_i^2 w_j^2 tr(P_i P_j)``. So the
best weights are the square roots of the minimizers of ``<Bz, z>`` on the
simplex, computed exactly by :func:`fusionframes.simplex.simplex_qp`.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import ValidationError
from .frames import Subspace, WeightedFamily, frame_operator
from .linalg import DEFAULT_TOL
from .simplex import SUPPORT_CAP, simplex_qp

__all__ = ["WeightProblem", "BMatrixBundle", "OptimalWeights", "PocDecomposition",
           "b_matrix", "optimal_weights", "is_critical", "is_global_min",
           "poc_decompose", "frame_threshold", "ORTHO_TOL"]

ORTHO_TOL = 1e-10
SPAN_TOL = 1e-10


class WeightProblem:
    """Subspaces of ``C^n`` with their normalized base weights ``d_i ** -0.5``."""

    def __init__(self, subspaces, require_span=True):
        subs = tuple(s if isinstance(s, Subspace) else Subspace(s) for s in subspaces)
        if not subs:
            raise ValidationError("a weight problem needs at least one subspace")
        if len({s.n for s in subs}) != 1:
            raise ValidationError("subspaces live in different ambient dimensions")
        self.subspaces = subs
        if require_span:
            lam = np.linalg.eigvalsh(sum(s.projector for s in subs)).min()
            if lam <= SPAN_TOL:
                raise ValidationError(
                    f"subspaces do not span C^{self.n} (lambda_min of sum P_i = {lam:.3e})")

    @classmethod
    def from_unit_vectors(cls, vectors, require_span=True):
        """Lines spanned by the columns of ``vectors`` (each normalized)."""
        v = np.asarray(vectors, dtype=complex)
        if v.ndim != 2:
            raise ValidationError("vectors must be an n x m array of columns")
        norms = np.linalg.norm(v, axis=0)
        if np.any(norms <= 0):
            raise ValidationError("zero vector in the family")
        return cls([Subspace((v[:, k] / norms[k])[:, None]) for k in range(v.shape[1])],
                   require_span=require_span)

    @classmethod
    def from_gram(cls, gram):
        """Lines in ``C^m`` whose unit generators have the given Gram matrix.

        ``gram`` must be positive definite with unit diagonal; the generators
        are the columns of its Cholesky factor, so they form a Riesz basis.
        """
        g = np.asarray(gram, dtype=complex)
        if np.abs(np.diagonal(g) - 1).max() > 1e-12:
            raise ValidationError("Gram matrix must have unit diagonal")
        try:
            low = np.linalg.cholesky(g)
        except np.linalg.LinAlgError as exc:
            raise ValidationError("Gram matrix must be positive definite") from exc
        return cls.from_unit_vectors(low.conj().T)

    @property
    def n(self):
        return self.subspaces[0].n

    @property
    def m(self):
        return len(self.subspaces)

    @property
    def dims(self):
        return np.array([s.dim for s in self.subspaces])

    @property
    def base_weights(self):
        return 1.0 / np.sqrt(self.dims)

    @property
    def projectors(self):
        return [s.projector for s in self.subspaces]

    def family(self, a=None):
        """The family ``a . W_w`` (``a = 1`` gives the base family)."""
        a = np.ones(self.m) if a is None else np.asarray(a, dtype=float)
        return WeightedFamily(a * self.base_weights, self.subspaces)

    def subproblem(self, indices):
        return WeightProblem([self.subspaces[i] for i in indices], require_span=False)

    def __repr__(self):
        return f"WeightProblem(n={self.n}, dims={self.dims.tolist()})"


@dataclass
class BMatrixBundle:
    B: np.ndarray
    A: np.ndarray
    traces: np.ndarray     # tr(P_i P_j)


def b_matrix(problem):
    """``B_ij = w_i^2 w_j^2 tr(P_i P_j)`` and ``A = B ** 0.5`` entrywise."""
    m = problem.m
    t = np.empty((m, m))
    for i in range(m):
        for j in range(i, m):
            # tr(P_i P_j) = ||U_i* U_j||_F^2, real and non-negative
            v = problem.subspaces[i].basis.conj().T @ problem.subspaces[j].basis
            t[i, j] = t[j, i] = float(np.sum(np.abs(v) ** 2))
    w2 = problem.base_weights ** 2
    b = w2[:, None] * t * w2[None, :]
    return BMatrixBundle(B=b, A=np.sqrt(b), traces=t)


def frame_threshold(n):
    """Below this potential a trace-one operator in ``C^n`` is invertible.

    ``||I - n S||_F^2 = n^2 FFP - n < 1`` iff ``FFP < (n + 1) / n^2``.
    """
    return (n + 1.0) / n ** 2


@dataclass
class OptimalWeights:
    value: float
    z_star: np.ndarray
    a_star: np.ndarray
    support: tuple                      # 0-based indices
    all_supports: list = field(default_factory=list)
    kernel_dim: int = 0
    frame_preserving: bool = False
    frame_criterion: str = "direct"     # "threshold" or "direct"
    min_eigenvalue: float = 0.0
    exact: bool = True
    borderline: bool = False
    candidates: list = field(default_factory=list)


def optimal_weights(problem, fast=False, cap=SUPPORT_CAP, tol=DEFAULT_TOL.reporting):
    """All minimizers of ``FFP(a . W_w)`` over unit ``a >= 0``.

    ``frame_preserving`` tells whether the optimal family built from
    ``z_star`` (the maximal-support minimizer) is a frame. Below
    :func:`frame_threshold` this holds for every minimizer; otherwise the
    smallest eigenvalue of the optimal frame operator is tested against
    ``tol``.
    """
    bundle = b_matrix(problem)
    sol = simplex_qp(bundle.B, fast=fast, cap=cap)
    a = np.sqrt(sol.z_star)
    lam_min = float(np.linalg.eigvalsh(frame_operator(problem.family(a))).min())
    if sol.value < frame_threshold(problem.n):
        fp, crit = True, "threshold"
    else:
        fp, crit = lam_min > tol, "direct"
    return OptimalWeights(
        value=sol.value, z_star=sol.z_star, a_star=a, support=sol.support,
        all_supports=sol.all_supports, kernel_dim=sol.kernel_dim,
        frame_preserving=fp, frame_criterion=crit, min_eigenvalue=lam_min,
        exact=sol.exact, borderline=sol.borderline, candidates=sol.candidates)


def _unit_nonneg(a, m):
    a = np.asarray(a, dtype=float).reshape(-1)
    if a.size != m:
        raise ValidationError(f"need {m} weights, got {a.size}")
    if np.any(a < -1e-12):
        raise ValidationError("weights must be non-negative")
    if abs(np.linalg.norm(a) - 1) > 1e-9:
        raise ValidationError(f"weight vector must have unit norm, got {np.linalg.norm(a):.12g}")
    return np.maximum(a, 0.0)


def _stationarity(b, a, pos_tol=1e-12):
    z = a ** 2
    z = z / z.sum()
    supp = np.flatnonzero(z > pos_tol)
    bz = b @ z
    value = float(z @ bz)
    return z, supp, bz, value


def is_critical(problem, a, tol=1e-9, bundle=None):
    """``a`` is critical iff ``B_J z_J`` is constant on ``J = supp(a)``."""
    b = (bundle or b_matrix(problem)).B
    a = _unit_nonneg(a, problem.m)
    z, supp, bz, value = _stationarity(b, a)
    return bool(np.all(np.abs(bz[supp] - value) <= tol))


def is_global_min(problem, a, tol=1e-9, bundle=None):
    """Critical and ``(B z)_k >= value`` for every ``k`` off the support."""
    bundle = bundle or b_matrix(problem)
    a = _unit_nonneg(a, problem.m)
    if not is_critical(problem, a, tol, bundle):
        return False
    z, supp, bz, value = _stationarity(bundle.B, a)
    off = np.setdiff1d(np.arange(problem.m), supp)
    return bool(np.all(bz[off] >= value - tol))


@dataclass
class PocDecomposition:
    components: list          # tuples of 0-based indices
    problems: list            # WeightProblem per component
    solutions: list           # OptimalWeights per component
    gamma: np.ndarray         # component multipliers, sum(gamma^2) = 1
    z: np.ndarray             # recombined simplex point
    value: float


def poc_decompose(problem, fast=False, cap=SUPPORT_CAP):
    """Split into mutually orthogonal components and solve each separately.

    Components are the connected components of the graph with an edge
    ``i ~ j`` when ``tr(P_i P_j) > 1e-10``. Across components ``B`` is block
    diagonal, so the outer problem is the diagonal QP ``min sum_k t_k^2 v_k``
    on the simplex, solved by ``t_k ~ 1 / v_k``.
    """
    bundle = b_matrix(problem)
    adj = (bundle.traces > ORTHO_TOL).astype(int)
    count, labels = connected_components(adj, directed=False)
    # order components by their smallest member
    comps = sorted((tuple(int(i) for i in np.flatnonzero(labels == c)) for c in range(count)),
                   key=lambda c: c[0])
    problems = [problem.subproblem(c) for c in comps]
    sols = [optimal_weights(p, fast=fast, cap=cap) for p in problems]
    v = np.array([s.value for s in sols])
    t = (1.0 / v) / np.sum(1.0 / v)
    z = np.zeros(problem.m)
    for c, s, tk in zip(comps, sols, t):
        z[list(c)] = tk * s.z_star
    return PocDecomposition(comps, problems, sols, np.sqrt(t), z,
                            float(1.0 / np.sum(1.0 / v)))
