"""Exact minimization of ``<B z, z>`` over the probability simplex.

``B`` is a real symmetric PSD matrix with non-negative entries. The minimum
is found by sweeping candidate supports ``J`` (largest first, lexicographic
within a size): on each support the stationary point solves
``B_J y = 1_J``, ``z_J = y / sum(y)``, with value ``1 / sum(y)``. A candidate
is accepted when ``z_J > 0`` and ``(B z)_k >= value`` off the support. For a
convex problem every accepted candidate is a global minimizer, and every
vertex of the (convex) set of minimizers is reached by some support.
"""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .linalg import solve_hermitian_psd

__all__ = ["SimplexSolution", "simplex_qp", "support_candidate", "SUPPORT_CAP",
           "project_to_simplex"]

SUPPORT_CAP = 20
POS_TOL = 1e-12
KKT_TOL = 1e-12
BORDER_TOL = 1e-10


@dataclass
class SimplexSolution:
    value: float
    z_star: np.ndarray           # representative with maximal support
    support: tuple               # support of z_star, 0-based
    candidates: list = field(default_factory=list)   # accepted (support, z)
    all_supports: list = field(default_factory=list)
    kernel_dim: int = 0
    exact: bool = True
    borderline: bool = False
    supports_examined: int = 0
    method: str = "support-enum"


def _validate(b):
    b = np.asarray(b)
    if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] == 0:
        raise ValidationError(f"need a non-empty square matrix, got shape {b.shape}")
    if np.iscomplexobj(b):
        if np.abs(b.imag).max() > 1e-12 * max(1.0, np.abs(b).max()):
            raise ValidationError("matrix must be real")
        b = b.real
    b = np.asarray(b, dtype=float)
    if not np.all(np.isfinite(b)):
        raise ValidationError("matrix has non-finite entries")
    scale = max(1.0, np.abs(b).max())
    if np.abs(b - b.T).max() > 1e-12 * scale:
        raise ValidationError("matrix must be symmetric")
    b = (b + b.T) / 2
    if b.min() < -1e-12 * scale:
        raise ValidationError("matrix must be entrywise non-negative")
    if np.linalg.eigvalsh(b).min() < -1e-10 * scale:
        raise ValidationError("matrix must be positive semidefinite")
    return b


def support_candidate(b, support):
    """Stationary point of ``<Bz,z>`` on the face with the given support.

    Returns ``(z, value)`` with ``z`` a full-length vector, or ``None`` when
    ``1_J`` is not in the range of ``B_J`` or ``sum(y) <= 0``.
    """
    idx = list(support)
    bj = b[np.ix_(idx, idx)]
    ones = np.ones(len(idx))
    y, in_range, _ = solve_hermitian_psd(bj, ones)
    s = float(np.sum(y))
    if not in_range or s <= 0:
        return None
    z = np.zeros(b.shape[0])
    z[idx] = y / s
    return z, 1.0 / s


def _accepts(b, z, value, support):
    zj = z[list(support)]
    if np.any(zj <= POS_TOL):
        return False, False
    bz = b @ z
    off = [k for k in range(b.shape[0]) if k not in set(support)]
    ok = all(bz[k] >= value - KKT_TOL for k in off)
    border = bool(np.min(zj) < BORDER_TOL) or any(
        abs(bz[k] - value) < BORDER_TOL for k in off)
    return ok, border


def project_to_simplex(v):
    """Euclidean projection onto ``{z >= 0, sum z = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    k = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / k > 0)[0][-1]
    return np.maximum(v - css[rho] / (rho + 1), 0.0)


def _projected_gradient(b, max_iter=100000, tol=1e-12):
    m = b.shape[0]
    z = np.full(m, 1.0 / m)
    step = 1.0 / max(2 * np.linalg.eigvalsh(b).max(), 1e-300)
    for _ in range(max_iter):
        new = project_to_simplex(z - step * 2 * (b @ z))
        if np.linalg.norm(new - z) < tol:
            z = new
            break
        z = new
    return z


def simplex_qp(b, fast=False, cap=SUPPORT_CAP):
    """Minimize ``<Bz, z>`` over the simplex.

    The full sweep (default) collects every accepted support; the returned
    ``z_star`` averages the accepted candidates, so its support is the union
    of all supports of minimizers. ``fast=True`` stops at the first accepted
    support. Above ``cap`` variables a projected-gradient iterate is returned
    with ``exact=False``.
    """
    b = _validate(b)
    m = b.shape[0]
    ev = np.linalg.eigvalsh(b)
    kernel_dim = int(np.sum(ev <= 1e-10 * max(1.0, ev.max())))
    if m > cap:
        z = _projected_gradient(b)
        value = float(z @ b @ z)
        supp = tuple(int(i) for i in np.flatnonzero(z > POS_TOL))
        return SimplexSolution(value, z, supp, [(supp, z)], [supp], kernel_dim,
                               exact=False, method="projected-gradient")
    zero = np.flatnonzero(np.diagonal(b) <= 0)
    if zero.size:
        # a zero diagonal entry of a PSD matrix kills its row: value 0 there
        z = np.zeros(m)
        z[zero] = 1.0 / zero.size
        supp = tuple(int(i) for i in zero)
        return SimplexSolution(0.0, z, supp, [(supp, z)], [supp], kernel_dim,
                               method="zero-diagonal")
    accepted, borderline, examined = [], False, 0
    for size in range(m, 0, -1):
        for support in itertools.combinations(range(m), size):
            examined += 1
            cand = support_candidate(b, support)
            if cand is None:
                continue
            z, value = cand
            ok, border = _accepts(b, z, value, support)
            if ok:
                accepted.append((support, z, value))
                borderline = borderline or border
                if fast:
                    break
        if fast and accepted:
            break
    if not accepted:
        # cannot happen for valid input; keep the solver total anyway
        z = _projected_gradient(b)
        value = float(z @ b @ z)
        supp = tuple(int(i) for i in np.flatnonzero(z > POS_TOL))
        return SimplexSolution(value, z, supp, [(supp, z)], [supp], kernel_dim,
                               exact=False, supports_examined=examined,
                               method="projected-gradient")
    # tie-break: minimum value, then lexicographically least support
    values = [v for _, _, v in accepted]
    value = float(min(values))
    z_star = np.mean([z for _, z, _ in accepted], axis=0)
    z_star[z_star < POS_TOL] = 0.0
    z_star /= z_star.sum()
    support = tuple(int(i) for i in np.flatnonzero(z_star > 0))
    supports = sorted({s for s, _, _ in accepted}, key=lambda s: (-len(s), s))
    if support not in supports:
        supports.insert(0, support)
    return SimplexSolution(value, z_star, support,
                           [(s, z) for s, z, _ in accepted], supports, kernel_dim,
                           exact=True, borderline=borderline,
                           supports_examined=examined)
