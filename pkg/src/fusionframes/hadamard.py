"""Hadamard indexes of positive semidefinite matrices.

* ``I(G)``: minimal index, ``min { <Gz, z> : sum z = 1 }``. It is ``0`` when
  ``1`` is not in the range of ``G`` and ``1 / sum(y)`` for ``G y = 1``
  otherwise.
* ``I_sp(B)``: spectral index of an entrywise non-negative PSD ``B``, the
  same minimum restricted to the simplex.
* ``I_2(A)``: Frobenius index, ``I_sp(A o A) ** 0.5``.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from .errors import ValidationError
from .linalg import solve_hermitian_psd
from .simplex import SUPPORT_CAP, simplex_qp

__all__ = ["IndexReport", "minimal_index", "minimal_index_det", "index_sp",
           "index_2", "sp_equals_minimal", "check_psd"]

RANGE_TOL = 1e-9
COND_LIMIT = 1e10


@dataclass
class IndexReport:
    value: float
    witness: Optional[np.ndarray] = None
    method: str = "range-solve"
    exact: bool = True
    support: tuple = ()
    cross_check: Optional[float] = None   # det-formula value, when computed


def check_psd(g, name="G", nonneg=False, tol=1e-10):
    g = np.asarray(g)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] == 0:
        raise ValidationError(f"{name} must be a non-empty square matrix, got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ValidationError(f"{name} has non-finite entries")
    scale = max(1.0, float(np.abs(g).max()))
    if np.abs(g - g.conj().T).max() > 1e-12 * scale:
        raise ValidationError(f"{name} must be Hermitian")
    g = (g + g.conj().T) / 2
    if np.linalg.eigvalsh(g).min() < -tol * scale:
        raise ValidationError(f"{name} must be positive semidefinite")
    if nonneg:
        if np.iscomplexobj(g) and np.abs(g.imag).max() > 1e-12 * scale:
            raise ValidationError(f"{name} must be real with non-negative entries")
        g = np.real(g)
        if g.min() < -1e-12 * scale:
            raise ValidationError(f"{name} must be entrywise non-negative")
    return g


def minimal_index_det(g):
    """``det G / (det(G + E) - det G)`` with ``E`` the all-ones matrix (``G > 0``)."""
    g = np.asarray(g)
    m = g.shape[0]
    d0 = np.linalg.det(g)
    d1 = np.linalg.det(g + np.ones((m, m)))
    return float(np.real(d0 / (d1 - d0)))


def minimal_index(g):
    """``I(G)`` via the least-norm solve of ``G y = 1``.

    For well-conditioned ``G`` the determinant ratio is evaluated too and
    stored in ``cross_check``.
    """
    g = check_psd(g)
    ones = np.ones(g.shape[0])
    y, in_range, _ = solve_hermitian_psd(g, ones, rtol=RANGE_TOL)
    if not in_range:
        return IndexReport(0.0, None, "range-solve")
    s = float(np.real(np.sum(y)))
    value = 1.0 / s
    cross = None
    if np.linalg.cond(g) < COND_LIMIT:
        cross = minimal_index_det(g)
    return IndexReport(value, y, "range-solve", cross_check=cross)


def index_sp(b, fast=False, cap=SUPPORT_CAP):
    """``I_sp(B) = min_{z in simplex} <Bz, z>``; witness ``x = z ** 0.5``."""
    b = check_psd(b, "B", nonneg=True)
    if np.allclose(b, np.diag(np.diagonal(b)), atol=0) and np.all(np.diagonal(b) > 0):
        d = np.diagonal(b)
        value = 1.0 / float(np.sum(1.0 / d))
        z = value / d
        return IndexReport(value, np.sqrt(z), "diagonal-closed-form",
                           support=tuple(range(b.shape[0])))
    sol = simplex_qp(b, fast=fast, cap=cap)
    return IndexReport(sol.value, np.sqrt(sol.z_star),
                       sol.method, exact=sol.exact, support=sol.support)


def index_2(a, fast=False, cap=SUPPORT_CAP):
    """``I_2(A) = I_sp(A o A) ** 0.5`` for an entrywise non-negative symmetric ``A``."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"A must be square, got shape {a.shape}")
    if np.abs(a - a.T).max() > 1e-12 * max(1.0, np.abs(a).max()):
        raise ValidationError("A must be symmetric")
    if a.min() < 0:
        raise ValidationError("A must be entrywise non-negative")
    try:
        rep = index_sp(a * a, fast=fast, cap=cap)
    except ValidationError as exc:
        raise ValidationError(f"A o A is outside the hypotheses: {exc}") from exc
    return IndexReport(float(np.sqrt(rep.value)), rep.witness, rep.method,
                       exact=rep.exact, support=rep.support)


def sp_equals_minimal(g, tol=1e-9):
    """Is there ``u >= 0`` with ``G u = 1``? Returns ``(flag, u)``.

    The least-norm solution is tried first; when it has negative entries a
    linear feasibility problem over ``u >= 0`` decides. When the flag is
    true ``I_sp(G) = I(G) = 1 / sum(u)``.
    """
    g = check_psd(g, nonneg=True)
    m = g.shape[0]
    ones = np.ones(m)
    u, in_range, _ = solve_hermitian_psd(g, ones, rtol=RANGE_TOL)
    if not in_range:
        return False, None
    u = np.real(u)
    if u.min() >= -tol:
        return True, np.maximum(u, 0.0)
    res = linprog(np.zeros(m), A_eq=g, b_eq=ones, bounds=[(0, None)] * m, method="highs")
    if res.status != 0:
        return False, None
    u = res.x
    if np.linalg.norm(g @ u - ones) > RANGE_TOL * np.sqrt(m):
        return False, None
    return True, u
