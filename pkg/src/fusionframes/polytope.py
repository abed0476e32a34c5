"""Feasible spectra of trace-one frame operators and their least-norm point.

For fixed ``(d, w)`` the spectra ``lambda(S)`` of all families form a convex
polytope cut out by the Horn-Klyachko inequalities

    sum_{j in J_0} lambda_j  <=  sum_i w_i^2 |J_i cap {1..d_i}|

together with ``sum(lambda) = 1`` and ``lambda_1 >= ... >= lambda_n >= 0``.
Every global minimizer of the potential has the spectrum ``lambda0`` of least
Euclidean norm in this polytope.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import nnls

from .errors import FusionFrameError, PreconditionError
from .existence import inequality_rhs
from .frames import is_normalized_pair
from .lr import DEFAULT_BUDGET, enumerate_admissible

__all__ = ["SpectrumPolytope", "Lambda0Result", "build_polytope", "lambda0",
           "contains", "dykstra_projection", "least_distance"]


@dataclass
class SpectrumPolytope:
    n: int
    constraints: list        # (AdmissibleTuple, rhs) for every admissible tuple
    dims: tuple = ()
    weights: tuple = ()

    def reduced(self):
        """``{J_0: rhs}`` keeping the tightest bound for each index set."""
        out = {}
        for t, rhs in self.constraints:
            if t.j0 not in out or rhs < out[t.j0]:
                out[t.j0] = rhs
        return dict(sorted(out.items()))

    def inequality_system(self):
        """``(G, h)`` with all constraints written as ``G lambda <= h``.

        Row order: Horn-Klyachko rows (by ``J_0``), ordering rows
        ``lambda_{i+1} - lambda_i <= 0``, then ``-lambda_n <= 0``. The trace
        condition is kept apart.
        """
        n = self.n
        rows, rhs = [], []
        for j0, b in self.reduced().items():
            g = np.zeros(n)
            g[[j - 1 for j in j0]] = 1.0
            rows.append(g)
            rhs.append(b)
        for i in range(n - 1):
            g = np.zeros(n)
            g[i + 1], g[i] = 1.0, -1.0
            rows.append(g)
            rhs.append(0.0)
        g = np.zeros(n)
        g[-1] = -1.0
        rows.append(g)
        rhs.append(0.0)
        return np.array(rows), np.array(rhs)


@dataclass
class Lambda0Result:
    lambda0: np.ndarray
    value: float
    active_constraints: list      # row indices into inequality_system()
    iterations: int
    kkt_residual: float
    max_violation: float
    dykstra_gap: float            # distance to the independent Dykstra iterate
    multipliers: np.ndarray = field(default=None, repr=False)


def build_polytope(n, dims, weights, budget=DEFAULT_BUDGET, allow_large=False, tol=1e-10):
    dims = [int(d) for d in dims]
    if not is_normalized_pair(n, dims, weights, tol):
        raise PreconditionError("(dims, weights) is not normalized")
    cons = []
    for r in range(1, n):
        for t in enumerate_admissible(n, len(dims), r, budget=budget, allow_large=allow_large):
            cons.append((t, inequality_rhs(t, dims, weights)))
    return SpectrumPolytope(n, cons, tuple(dims), tuple(float(x) for x in weights))


def contains(poly, lam, tol=1e-9):
    """Is ``lam`` (sorted non-increasingly, trace one) in the polytope?"""
    lam = np.asarray(lam, dtype=float)
    g, h = poly.inequality_system()
    return bool(np.all(g @ lam <= h + tol) and abs(lam.sum() - 1) <= tol)


def dykstra_projection(g, h, e, c, max_sweeps=100000, tol=1e-14):
    """Projection of the origin onto ``{G x <= h, e.x = c}`` by Dykstra's method.

    Returns ``(x, sweeps)``.
    """
    k, n = g.shape
    sets = [(g[i], h[i], False) for i in range(k)] + [(e, c, True)]
    corr = np.zeros((len(sets), n))
    x = np.zeros(n)
    for sweep in range(1, max_sweeps + 1):
        prev = x.copy()
        for idx, (a, b, eq) in enumerate(sets):
            y = x + corr[idx]
            s = a @ y - b
            if eq or s > 0:
                x = y - (s / (a @ a)) * a
            else:
                x = y
            corr[idx] = y - x
        if np.linalg.norm(x - prev) < tol:
            return x, sweep
    return x, max_sweeps


def least_distance(g, h):
    """Least-norm ``x`` with ``G x <= h`` via the NNLS dual.

    Writing the constraints as ``(-G) x >= -h``, the minimizer is
    ``x = -r[:n] / r[n]`` where ``r = E u - f`` is the residual of
    ``min_{u >= 0} ||E u - f||`` with ``E = [-G^T; -h^T]`` and ``f = e_{n+1}``.
    Returns ``None`` when the system is infeasible.
    """
    k, n = g.shape
    e_mat = np.vstack([-g.T, -h[None, :]])
    f = np.zeros(n + 1)
    f[-1] = 1.0
    u, _ = nnls(e_mat, f, maxiter=50 * (k + n + 1))
    r = e_mat @ u - f
    if abs(r[-1]) < 1e-14:
        return None
    return -r[:n] / r[-1]


def _kkt(lam, g, h, active):
    # stationarity 2 lam + G_A^T mu + nu 1 = 0 with mu >= 0, nu free
    n = lam.size
    cols = [g[i] for i in active] + [np.ones(n), -np.ones(n)]
    a = np.array(cols).T
    mu, res = nnls(a, -2 * lam)
    return mu[:len(active)], float(res)


def lambda0(poly, max_sweeps=100000, active_tol=1e-9):
    """Least-norm feasible spectrum.

    The exact solution comes from the least-distance dual; an independent
    Dykstra projection is run alongside and its distance to the solution is
    reported as ``dykstra_gap``.
    """
    n = poly.n
    g, h = poly.inequality_system()
    ones = np.ones(n)
    # trace equality as a pair of inequalities
    g2 = np.vstack([g, ones, -ones])
    h2 = np.concatenate([h, [1.0, -1.0]])
    lam = least_distance(g2, h2)
    if lam is None:
        raise FusionFrameError("spectral polytope is empty")
    x_d, sweeps = dykstra_projection(g, h, ones, 1.0, max_sweeps=max_sweeps)
    slack = h - g @ lam
    active = [int(i) for i in np.flatnonzero(slack <= active_tol)]
    mu, kkt = _kkt(lam, g, h, active)
    return Lambda0Result(
        lambda0=lam, value=float(lam @ lam), active_constraints=active,
        iterations=sweeps, kkt_residual=kkt,
        max_violation=float(max(0.0, -slack.min(), abs(lam.sum() - 1))),
        dykstra_gap=float(np.linalg.norm(x_d - lam)), multipliers=mu)
