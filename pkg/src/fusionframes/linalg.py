"""Dense complex linear algebra for small matrices.

Everything here works on plain ``numpy`` arrays. Matrices are expected to be
small (``n <= MAX_DIM`` by default); nothing is sparse or blocked.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ValidationError

__all__ = [
    "ToleranceConfig", "DEFAULT_TOL", "MAX_DIM", "EigenDecomposition",
    "as_matrix", "check_hermitian", "eigh", "eigvalsh", "projector_from_basis",
    "commutator", "exp_antihermitian", "frobenius_norm", "spectral_norm",
    "hadamard_product", "trace", "orthonormalize", "solve_hermitian_psd",
    "random_orthonormal", "random_unitary",
]

MAX_DIM = 32


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances shared across the package.

    ``structural`` guards shape-level invariants (orthonormality, hermiticity
    of derived matrices), ``convergence`` is the default stopping threshold of
    iterative solvers, and ``reporting`` is used when a numeric result is
    turned into a yes/no verdict for a human.
    """
    structural: float = 1e-10
    convergence: float = 1e-9
    reporting: float = 1e-6


DEFAULT_TOL = ToleranceConfig()


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # real, non-increasing
    eigenvectors: np.ndarray  # unitary, columns paired with eigenvalues


def as_matrix(a, name="matrix", square=True, max_dim=MAX_DIM):
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValidationError(f"{name} must be 2-dimensional, got shape {a.shape}")
    if square and a.shape[0] != a.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {a.shape}")
    if max_dim is not None and max(a.shape) > max_dim:
        raise ValidationError(
            f"{name} has dimension {max(a.shape)} > cap {max_dim}; pass max_dim to override")
    if not np.all(np.isfinite(a)):
        raise ValidationError(f"{name} has non-finite entries")
    return a


def spectral_norm(a):
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def frobenius_norm(a):
    return float(np.linalg.norm(np.asarray(a), "fro"))


def trace(a):
    """Trace of a square matrix; real part only when the input is Hermitian-like."""
    t = np.trace(np.asarray(a))
    return complex(t) if np.iscomplexobj(t) and abs(t.imag) > 0 else float(np.real(t))


def hadamard_product(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValidationError(f"shape mismatch {a.shape} vs {b.shape}")
    return a * b


def check_hermitian(h, rtol=1e-12, name="matrix", max_dim=MAX_DIM):
    """Validate ``h`` and return its exact Hermitian part ``(h + h*)/2``."""
    h = as_matrix(h, name, max_dim=max_dim)
    dev = spectral_norm(h - h.conj().T)
    if dev > rtol * (1.0 + spectral_norm(h)):
        raise ValidationError(f"{name} is not Hermitian (||H - H*|| = {dev:.3e})")
    return (h + h.conj().T) / 2


def _fix_phases(v):
    # first entry of non-negligible size becomes real positive
    v = v.copy()
    for k in range(v.shape[1]):
        col = v[:, k]
        idx = np.flatnonzero(np.abs(col) > 1e-12 * max(1.0, np.abs(col).max()))
        if idx.size:
            c = col[idx[0]]
            v[:, k] = col * (np.conj(c) / abs(c))
    return v


def eigh(h, rtol=1e-12, max_dim=MAX_DIM):
    """Eigendecomposition of a Hermitian matrix, eigenvalues non-increasing.

    Eigenvector phases are normalized so that the first non-negligible
    component of every column is real and positive, which makes the output
    reproducible for a fixed input.
    """
    h = check_hermitian(h, rtol=rtol, max_dim=max_dim)
    w, v = np.linalg.eigh(h)
    w, v = w[::-1].copy(), v[:, ::-1]
    return EigenDecomposition(w, _fix_phases(v))


def eigvalsh(h, rtol=1e-12, max_dim=MAX_DIM):
    h = check_hermitian(h, rtol=rtol, max_dim=max_dim)
    return np.linalg.eigvalsh(h)[::-1].copy()


def orthonormalize(u):
    """Re-orthonormalize the columns of a near-orthonormal block via QR.

    Column signs/phases are chosen so that ``R`` has a positive diagonal,
    which keeps the result close to the input when the input is already
    nearly orthonormal.
    """
    u = np.asarray(u)
    q, r = np.linalg.qr(u)
    d = np.diagonal(r).copy()
    d[np.abs(d) == 0] = 1.0
    return q * (d / np.abs(d))[None, :]


def projector_from_basis(u, tol=DEFAULT_TOL.structural):
    """Orthogonal projector ``U U*`` onto the span of orthonormal columns."""
    u = np.asarray(u)
    if u.ndim != 2:
        raise ValidationError(f"basis must be an n x d array, got shape {u.shape}")
    dev = frobenius_norm(u.conj().T @ u - np.eye(u.shape[1]))
    if dev > tol:
        raise ValidationError(f"basis columns are not orthonormal (||U*U - I||_F = {dev:.3e})")
    p = u @ u.conj().T
    return (p + p.conj().T) / 2


def commutator(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"commutator needs square matrices of equal size, got {a.shape}, {b.shape}")
    return a @ b - b @ a


def exp_antihermitian(x, t=1.0, tol=DEFAULT_TOL.structural):
    """``exp(t X)`` for anti-Hermitian ``X`` via the eigendecomposition of ``iX``.

    The result is unitary up to rounding.
    """
    x = as_matrix(x, "X", max_dim=None)
    dev = frobenius_norm(x + x.conj().T)
    if dev > tol * (1.0 + frobenius_norm(x)):
        raise ValidationError(f"X is not anti-Hermitian (||X + X*||_F = {dev:.3e})")
    h = 1j * x
    h = (h + h.conj().T) / 2
    mu, v = np.linalg.eigh(h)
    # X = -i H, so exp(tX) = V diag(exp(-i t mu)) V*
    return (v * np.exp(-1j * t * mu)[None, :]) @ v.conj().T


def solve_hermitian_psd(g, b, rtol=1e-9):
    """Least-norm solution of ``G y = b`` for Hermitian PSD ``G``.

    Returns ``(y, in_range, residual)`` where ``in_range`` tells whether ``b``
    lies in the range of ``G`` (residual at most ``rtol * ||b||``).
    """
    g = np.asarray(g)
    b = np.asarray(b)
    y = np.linalg.pinv(g, rcond=1e-12, hermitian=True) @ b
    residual = float(np.linalg.norm(g @ y - b))
    return y, residual <= rtol * max(float(np.linalg.norm(b)), 1e-300), residual


def random_orthonormal(n, d, rng, real=False):
    """Haar-distributed orthonormal ``n x d`` block."""
    z = rng.standard_normal((n, d))
    if not real:
        z = z + 1j * rng.standard_normal((n, d))
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph[None, :]


def random_unitary(n, rng):
    return random_orthonormal(n, n, rng)
