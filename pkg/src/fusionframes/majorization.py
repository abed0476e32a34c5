"""Vector and matrix (sub)majorization predicates.

``x`` is submajorized by ``y`` (``x <_w y``) when every partial sum of the
decreasing rearrangement of ``x`` is at most the matching partial sum for
``y``; majorization additionally asks for equal totals. Hermitian matrices
are compared through their spectra.
"""
import numpy as np

from .errors import ValidationError
from .linalg import eigvalsh

__all__ = ["sort_desc", "submajorizes", "majorizes", "matrix_submajorizes",
           "matrix_majorizes"]

DEFAULT_MAJ_TOL = 1e-10


def _vector(x, name):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValidationError(f"{name} must be a 1-d vector")
    if not np.all(np.isfinite(x)):
        raise ValidationError(f"{name} has non-finite entries")
    return x


def sort_desc(x):
    return np.sort(_vector(x, "x"))[::-1]


def _pair(y, x):
    y, x = _vector(y, "y"), _vector(x, "x")
    if y.shape != x.shape:
        raise ValidationError(f"length mismatch: {y.size} vs {x.size}")
    return y, x


def submajorizes(y, x, tol=DEFAULT_MAJ_TOL):
    """True iff ``x`` is submajorized by ``y``.

    The tolerance is additive on every partial sum.
    """
    y, x = _pair(y, x)
    return bool(np.all(np.cumsum(sort_desc(x)) <= np.cumsum(sort_desc(y)) + tol))


def majorizes(y, x, tol=DEFAULT_MAJ_TOL):
    """True iff ``x`` is majorized by ``y``."""
    y, x = _pair(y, x)
    return submajorizes(y, x, tol) and abs(x.sum() - y.sum()) <= tol


def _spectra(b, a):
    b, a = np.asarray(b), np.asarray(a)
    if b.shape != a.shape:
        raise ValidationError(f"dimension mismatch: {b.shape} vs {a.shape}")
    return eigvalsh(b), eigvalsh(a)


def matrix_submajorizes(b, a, tol=DEFAULT_MAJ_TOL):
    """True iff the Hermitian matrix ``a`` is submajorized by ``b``."""
    lb, la = _spectra(b, a)
    return submajorizes(lb, la, tol)


def matrix_majorizes(b, a, tol=DEFAULT_MAJ_TOL):
    lb, la = _spectra(b, a)
    return majorizes(lb, la, tol)
