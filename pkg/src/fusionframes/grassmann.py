"""Potential minimization over products of Grassmannians.

Each subspace moves by a unitary rotation ``U_j <- exp(t D_j) U_j`` with
anti-Hermitian ``D_j``. Rotating ``P_j`` this way changes the potential at
rate ``2 w_j^2 tr(D_j [P_j, S])``, so ``D_j = w_j^2 [P_j, S]`` is the steepest
descent direction and the potential decreases at rate
``2 sum_j w_j^4 ||[P_j, S]||_F^2``. Critical points are exactly the families
whose projectors all commute with the frame operator.
"""
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ValidationError
from .frames import (Subspace, WeightedFamily, ffp, frame_operator,
                     is_normalized_pair)
from .linalg import commutator, frobenius_norm, orthonormalize
from .simplex import simplex_qp

__all__ = ["DescentConfig", "MinimizerResult", "StructureReport", "MultiStartResult",
           "riemannian_gradient", "gradient_norm", "directional_derivative",
           "descend", "descend_free_weights", "multi_start", "structure_report",
           "commutant_is_trivial", "commutant_dimension", "rotate"]


@dataclass(frozen=True)
class DescentConfig:
    max_iters: int = 100000
    grad_tol: float = 1e-9
    armijo_c: float = 1e-4
    backtrack_factor: float = 0.5
    initial_step: float = 1.0
    restarts: int = 8
    seed: int = 0
    min_step: float = 1e-18

    def __post_init__(self):
        if self.max_iters < 1 or self.restarts < 1:
            raise ValidationError("max_iters and restarts must be positive")
        if not (self.grad_tol > 0 and self.armijo_c > 0 and self.initial_step > 0):
            raise ValidationError("grad_tol, armijo_c and initial_step must be positive")
        if not 0 < self.backtrack_factor < 1:
            raise ValidationError("backtrack_factor must lie in (0, 1)")
        if self.seed < 0:
            raise ValidationError("seed must be non-negative")


@dataclass
class StructureReport:
    eigenvalue_clusters: list        # (mu_k, multiplicity)
    commutation_residual: float      # max_{k,i} ||[Q_k, P_i]||_F
    eigenspace_tightness: list       # per cluster ||sum_i w_i^2 Q_k P_i Q_k - mu_k Q_k||_F
    invertible: bool
    min_eigenvalue: float
    cluster_tol: float
    min_cluster_gap: float           # smallest gap between consecutive clusters
    max_cluster_spread: float        # largest eigenvalue spread inside a cluster
    spectral_norm: float

    @property
    def max_tightness(self):
        return max(self.eigenspace_tightness) if self.eigenspace_tightness else 0.0


@dataclass
class MinimizerResult:
    family: WeightedFamily
    ffp: float
    spectrum: np.ndarray
    grad_norm: float
    iterations: int
    restart_index: int
    converged: bool
    structure: Optional[StructureReport] = None
    ffp_trace: list = field(default_factory=list, repr=False)
    message: str = ""


@dataclass
class MultiStartResult:
    best: MinimizerResult
    results: list
    spectra_agree: bool
    max_spectrum_spread: float       # max over converged pairs of ||lambda_a - lambda_b||_inf


def riemannian_gradient(family):
    """Descent directions ``X_j = [P_j, S]`` (anti-Hermitian), one per subspace."""
    s = frame_operator(family)
    return [commutator(p, s) for p in family.projectors]


def gradient_norm(family, weighted_only=False):
    """``sum_j ||[P_j, S]||_F``; with ``weighted_only`` zero-weight terms are skipped."""
    xs = riemannian_gradient(family)
    return float(sum(frobenius_norm(x) for x, w in zip(xs, family.weights)
                     if not weighted_only or w > 0))


def directional_derivative(family, j):
    """Rate of change of the potential along ``P_j -> exp(t X_j) P_j exp(-t X_j)``."""
    x = riemannian_gradient(family)[j]
    return -2.0 * family.weights[j] ** 2 * frobenius_norm(x) ** 2


def _expm1_antihermitian(x, t):
    # exp(tX) - I without cancellation, via the eigendecomposition of iX
    h = 1j * x
    h = (h + h.conj().T) / 2
    mu, v = np.linalg.eigh(h)
    return (v * np.expm1(-1j * t * mu)[None, :]) @ v.conj().T


def rotate(basis, x, t):
    """``exp(t X) U`` and the increment ``(exp(t X) - I) U``."""
    du = _expm1_antihermitian(x, t) @ basis
    return basis + du, du


def _trial(family, dirs, t, s0):
    # new bases and the potential change computed from increments, so that
    # tiny decreases near convergence are not lost to cancellation
    ds = np.zeros_like(s0)
    bases = []
    for w, u, d in zip(family.weights, family.bases, dirs):
        if w == 0:
            bases.append(u)
            continue
        new, du = rotate(u, d, t)
        dp = du @ u.conj().T + u @ du.conj().T + du @ du.conj().T
        ds = ds + w ** 2 * dp
        bases.append(new)
    ds = (ds + ds.conj().T) / 2
    delta = float(np.real(np.vdot(ds, 2 * s0 + ds)))
    return bases, delta


def _rebuild(weights, bases):
    return WeightedFamily(weights, [Subspace(orthonormalize(u)) for u in bases])


def _armijo_step(family, cfg, t0):
    """One accepted step. Returns ``(family, t, ok)``."""
    s0 = frame_operator(family)
    xs = [commutator(p, s0) for p in family.projectors]
    w2 = family.weights ** 2
    dirs = [w * x for w, x in zip(w2, xs)]
    slope = 2.0 * sum(wk ** 2 * frobenius_norm(x) ** 2 for wk, x in zip(w2, xs))
    if slope == 0:
        return family, t0, False
    # keep every rotation angle below pi
    dmax = max(np.linalg.norm(d, 2) for d in dirs)
    t = min(t0, np.pi / dmax) if dmax > 0 else t0
    while t >= cfg.min_step:
        bases, delta = _trial(family, dirs, t, s0)
        if delta <= -cfg.armijo_c * t * slope:
            # an accepted step may still overshoot the valley; the minimizer
            # of the quadratic through (0, f0), slope and (t, f0 + delta) is
            # tried and kept only when it does better
            curv = delta + slope * t
            if curv > 0:
                tq = slope * t * t / (2 * curv)
                if tq < 0.9 * t:
                    bq, dq = _trial(family, dirs, tq, s0)
                    if dq < delta:
                        return _rebuild(family.weights, bq), tq, True
            return _rebuild(family.weights, bases), t, True
        t *= cfg.backtrack_factor
    return family, t, False


def _result(family, it, restart, converged, trace, gnorm, message, cluster_tol=None):
    res = MinimizerResult(family=family, ffp=ffp(family),
                          spectrum=np.linalg.eigvalsh(frame_operator(family))[::-1].copy(),
                          grad_norm=gnorm, iterations=it, restart_index=restart,
                          converged=converged, ffp_trace=trace, message=message)
    res.structure = structure_report(res, cluster_tol)
    return res


def descend(family, cfg=DescentConfig(), restart_index=0, cluster_tol=None):
    """Armijo gradient descent at fixed weights.

    Every accepted step strictly lowers the potential. Stops when
    ``sum_j ||[P_j, S]||_F <= grad_tol`` (converged), when no step passes
    the Armijo test, or after ``max_iters`` steps.
    """
    if np.all(family.weights == 0):
        raise ValidationError("all weights are zero")
    t = cfg.initial_step
    trace = [ffp(family)]
    for it in range(cfg.max_iters + 1):
        g = gradient_norm(family)
        if g <= cfg.grad_tol:
            return _result(family, it, restart_index, True, trace, g, "converged", cluster_tol)
        if it == cfg.max_iters:
            break
        family, t, ok = _armijo_step(family, cfg, t)
        if not ok:
            return _result(family, it, restart_index, False, trace, g,
                           "line search failed", cluster_tol)
        trace.append(ffp(family))
        t = min(2 * t, 1e6)
    return _result(family, cfg.max_iters, restart_index, False, trace,
                   gradient_norm(family), "max_iters reached", cluster_tol)


def _optimal_weights_for(family):
    dims = family.dims
    t = np.empty((family.m, family.m))
    for i, ui in enumerate(family.bases):
        for j, uj in enumerate(family.bases):
            t[i, j] = np.sum(np.abs(ui.conj().T @ uj) ** 2)
    b = t / np.outer(dims, dims)
    z = simplex_qp((b + b.T) / 2, fast=True).z_star
    return np.sqrt(z / dims)


def descend_free_weights(family, cfg=DescentConfig(), restart_index=0, cluster_tol=None):
    """Minimize over subspaces and weights with ``sum w_i^2 d_i = 1``.

    Alternates one Armijo rotation step with an exact re-solve of the
    weights for the current subspaces. Neither half can raise the
    potential. Subspaces whose optimal weight is zero stay put.
    """
    family = family.with_weights(_optimal_weights_for(family))
    t = cfg.initial_step
    trace = [ffp(family)]
    for it in range(cfg.max_iters + 1):
        g = gradient_norm(family, weighted_only=True)
        if g <= cfg.grad_tol:
            return _result(family, it, restart_index, True, trace, g, "converged", cluster_tol)
        if it == cfg.max_iters:
            break
        family, t, ok = _armijo_step(family, cfg, t)
        if not ok:
            return _result(family, it, restart_index, False, trace, g,
                           "line search failed", cluster_tol)
        new = family.with_weights(_optimal_weights_for(family))
        if ffp(new) <= ffp(family):
            family = new
        trace.append(ffp(family))
        t = min(2 * t, 1e6)
    return _result(family, cfg.max_iters, restart_index, False, trace,
                   gradient_norm(family, weighted_only=True), "max_iters reached", cluster_tol)


def multi_start(n, dims, weights=None, cfg=DescentConfig(), free_weights=False,
                real=False, spread_tol=1e-4):
    """Run ``cfg.restarts`` descents from random families.

    Restart ``k`` draws its family from ``default_rng(cfg.seed + k)``. The
    best result has the least potential; the spectra of all converged runs
    are compared pairwise.
    """
    dims = [int(d) for d in dims]
    if weights is None:
        if not free_weights:
            raise ValidationError("weights are required unless free_weights is set")
        weights = 1.0 / np.sqrt(len(dims) * np.asarray(dims, dtype=float))
    weights = np.asarray(weights, dtype=float)
    if not is_normalized_pair(n, dims, weights):
        warnings.warn("(dims, weights) is not a normalized pair", stacklevel=2)
    results = []
    for k in range(cfg.restarts):
        rng = np.random.default_rng(cfg.seed + k)
        fam = WeightedFamily.random(n, dims, weights, rng, real=real)
        run = descend_free_weights if free_weights else descend
        results.append(run(fam, cfg, restart_index=k))
    best = min(results, key=lambda r: (r.ffp, r.restart_index))
    conv = [r.spectrum for r in results if r.converged]
    spread = 0.0
    for a in range(len(conv)):
        for b in range(a + 1, len(conv)):
            spread = max(spread, float(np.max(np.abs(conv[a] - conv[b]))))
    return MultiStartResult(best, results, spread <= spread_tol, spread)


def structure_report(result, cluster_tol=None, invert_tol=1e-8):
    """Spectral structure of a (near-)critical family.

    Eigenvalues of ``S`` are grouped where consecutive gaps are at most
    ``cluster_tol`` (default ``1e-6 ||S||``). For each cluster with spectral
    projection ``Q_k`` the report gives how far ``Q_k`` is from commuting
    with every ``P_i`` and how far the compressed family is from tight.
    """
    family = result.family if isinstance(result, MinimizerResult) else result
    s = frame_operator(family)
    mu, v = np.linalg.eigh(s)
    mu, v = mu[::-1], v[:, ::-1]
    norm = float(abs(mu[0]))
    if cluster_tol is None:
        cluster_tol = 1e-6 * max(norm, 1e-300)
    groups = [[0]]
    for i in range(1, mu.size):
        if mu[groups[-1][-1]] - mu[i] <= cluster_tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    clusters, tight, comm = [], [], 0.0
    gaps = [float(mu[a[-1]] - mu[b[0]]) for a, b in zip(groups, groups[1:])]
    spread = max(float(mu[g[0]] - mu[g[-1]]) for g in groups)
    for grp in groups:
        val = float(np.mean(mu[grp]))
        q = v[:, grp] @ v[:, grp].conj().T
        clusters.append((val, len(grp)))
        comp = sum(w ** 2 * q @ p @ q for w, p in zip(family.weights, family.projectors))
        tight.append(frobenius_norm(comp - val * q))
        for p in family.projectors:
            comm = max(comm, frobenius_norm(commutator(q, p)))
    lam_min = float(mu[-1])
    return StructureReport(clusters, comm, tight, lam_min > invert_tol, lam_min, cluster_tol,
                           min(gaps) if gaps else float("inf"), spread, norm)


def commutant_dimension(projectors, n=None, tol=1e-9):
    """Dimension of ``{Y : P_j Y = Y P_j for all j}`` over ``C``."""
    projectors = [np.asarray(p, dtype=complex) for p in projectors]
    if not projectors:
        if n is None:
            raise ValidationError("n is required for an empty projector list")
        return n * n
    n = projectors[0].shape[0]
    eye = np.eye(n)
    # vec(P Y - Y P) = (I (x) P - P^T (x) I) vec(Y), column-major vec
    blocks = [np.kron(eye, p) - np.kron(p.T, eye) for p in projectors]
    s = np.linalg.svd(np.vstack(blocks), compute_uv=False)
    return int(np.sum(s <= tol * max(1.0, s.max())))


def commutant_is_trivial(projectors, tol=1e-9, n=None):
    """``(trivial, dimension)``; trivial means only scalars commute with all ``P_j``."""
    dim = commutant_dimension(projectors, n=n, tol=tol)
    return dim == 1, dim
