"""Weighted subspace families (fusion frames) and the fusion frame potential.

A family is a list of subspaces ``W_i`` of ``C^n``, each stored through an
orthonormal basis, together with non-negative weights ``w_i``. Its frame
operator is ``S = sum_i w_i^2 P_i`` and its potential is ``FFP = tr S^2``.
Weights are stored unsquared; every formula squares them internally.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import PreconditionError, ValidationError
from .linalg import (DEFAULT_TOL, MAX_DIM, eigh, eigvalsh, frobenius_norm,
                     orthonormalize, projector_from_basis, random_orthonormal,
                     spectral_norm)
from .majorization import majorizes, submajorizes

__all__ = [
    "Subspace", "WeightedFamily", "FrameReport", "PqMajorization",
    "QIrregularity", "LowerBound", "frame_operator", "ffp", "ffp_double_sum",
    "q_potential", "frame_report", "pq_lower_majorization", "is_tight",
    "is_frame", "is_normalized_pair", "dist_punctual", "dist_operator",
    "q_irregularity", "potential_lower_bound", "lower_bound_details",
    "potential_identity_check", "induced_vector_frame",
]


class Subspace:
    """A subspace of ``C^n`` given by an ``n x d`` orthonormal basis."""

    def __init__(self, basis, tol=DEFAULT_TOL.structural, max_dim=MAX_DIM):
        basis = np.array(basis, dtype=complex)
        if basis.ndim == 1:
            basis = basis[:, None]
        if basis.ndim != 2 or basis.shape[1] < 1 or basis.shape[1] > basis.shape[0]:
            raise ValidationError(f"basis must be n x d with 1 <= d <= n, got shape {basis.shape}")
        if basis.shape[0] > max_dim:
            raise ValidationError(f"ambient dimension {basis.shape[0]} exceeds cap {max_dim}")
        self.projector = projector_from_basis(basis, tol)
        self.basis = basis
        self.basis.setflags(write=False)
        self.projector.setflags(write=False)

    @classmethod
    def from_vectors(cls, vectors, rank_tol=1e-10):
        """Orthonormal basis for the span of the columns of ``vectors``."""
        v = np.atleast_2d(np.asarray(vectors, dtype=complex))
        if v.shape[0] == 1 and v.shape[1] > 1:
            v = v.T
        u, s, _ = np.linalg.svd(v, full_matrices=False)
        rank = int(np.sum(s > rank_tol * max(1.0, s.max(initial=0.0))))
        if rank == 0:
            raise ValidationError("vectors span the zero subspace")
        return cls(orthonormalize(u[:, :rank]))

    @property
    def n(self):
        return self.basis.shape[0]

    @property
    def dim(self):
        return self.basis.shape[1]

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


class WeightedFamily:
    """Weights ``w`` paired with subspaces of a common ``C^n``.

    Zero weights are allowed (a Bessel sequence need not be a frame).
    """

    def __init__(self, weights, subspaces):
        subs = tuple(s if isinstance(s, Subspace) else Subspace(s) for s in subspaces)
        w = np.array(weights, dtype=float).reshape(-1)
        if len(subs) == 0:
            raise ValidationError("a family needs at least one subspace")
        if w.size != len(subs):
            raise ValidationError(f"{w.size} weights for {len(subs)} subspaces")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise ValidationError("weights must be finite and non-negative")
        ns = {s.n for s in subs}
        if len(ns) != 1:
            raise ValidationError(f"subspaces live in different ambient dimensions {sorted(ns)}")
        w.setflags(write=False)
        self.weights = w
        self.subspaces = subs

    @classmethod
    def random(cls, n, dims, weights, rng, real=False):
        """Family with Haar-random subspaces of the given dimensions."""
        return cls(weights, [Subspace(random_orthonormal(n, d, rng, real=real)) for d in dims])

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
    def projectors(self):
        return [s.projector for s in self.subspaces]

    @property
    def bases(self):
        return [s.basis for s in self.subspaces]

    def with_weights(self, weights):
        return WeightedFamily(weights, self.subspaces)

    def scaled(self, t):
        return WeightedFamily(t * self.weights, self.subspaces)

    def __repr__(self):
        return f"WeightedFamily(n={self.n}, dims={self.dims.tolist()}, weights={self.weights.tolist()})"


def frame_operator(family):
    s = sum(w ** 2 * p for w, p in zip(family.weights, family.projectors))
    return (s + s.conj().T) / 2


def ffp(family):
    s = frame_operator(family)
    return float(np.real(np.vdot(s, s)))


def ffp_double_sum(family):
    """``sum_ij w_i^2 w_j^2 tr(P_i P_j)``, computed from the bases."""
    w2 = family.weights ** 2
    bases = family.bases
    total = 0.0
    for i, ui in enumerate(bases):
        for j, uj in enumerate(bases):
            total += w2[i] * w2[j] * np.linalg.norm(ui.conj().T @ uj) ** 2
    return float(total)


def q_potential(family):
    """``P_q = sum_ij w_i^2 w_j^2 P_j P_i P_j``; its trace equals the FFP."""
    w2 = family.weights ** 2
    projs = family.projectors
    s = frame_operator(family)
    # sum_i w_i^2 P_i = S, so P_q = sum_j w_j^2 P_j S P_j
    pq = sum(w2[j] * projs[j] @ s @ projs[j] for j in range(family.m))
    return (pq + pq.conj().T) / 2


def is_tight(family, tol=DEFAULT_TOL.reporting):
    s = frame_operator(family)
    n = family.n
    return spectral_norm(s - np.trace(s).real / n * np.eye(n)) <= tol


def is_frame(family, tol=DEFAULT_TOL.reporting):
    return float(eigvalsh(frame_operator(family))[-1]) > tol


@dataclass
class FrameReport:
    frame_operator: np.ndarray
    spectrum: np.ndarray
    trace: float
    ffp: float
    tight: bool
    frame: bool
    frame_bounds: tuple
    tol: float


def frame_report(family, tol=DEFAULT_TOL.reporting):
    s = frame_operator(family)
    lam = eigvalsh(s)
    n = family.n
    tr = float(np.trace(s).real)
    return FrameReport(
        frame_operator=s, spectrum=lam, trace=tr, ffp=float(np.sum(lam ** 2)),
        tight=spectral_norm(s - tr / n * np.eye(n)) <= tol,
        frame=float(lam[-1]) > tol, frame_bounds=(float(lam[-1]), float(lam[0])), tol=tol)


class PqMajorization(NamedTuple):
    submajorized: bool   # (1/n^2) I <_w P_q
    majorized: bool      # (1/n^2) I <  P_q
    tight: bool
    consistent: bool     # majorized <=> (tight with trace one)
    pq_spectrum: np.ndarray


def pq_lower_majorization(family, tol=1e-10):
    """Compare ``(1/n^2) I`` with ``P_q`` in the (sub)majorization orders.

    Submajorization always holds once ``tr S >= 1``; full majorization holds
    exactly for ``1/n``-tight families.
    """
    n = family.n
    tr = float(np.sum(family.weights ** 2 * family.dims))
    if tr < 1 - tol:
        raise PreconditionError(f"needs sum w_i^2 d_i >= 1, got {tr:.6g}")
    lam = eigvalsh(q_potential(family))
    base = np.full(n, 1.0 / n ** 2)
    sub = submajorizes(lam, base, tol)
    maj = majorizes(lam, base, tol)
    tight = is_tight(family, tol=max(tol, 1e-9))
    return PqMajorization(sub, maj, tight, maj == (tight and abs(tr - 1) <= 1e-9), lam)


def is_normalized_pair(n, dims, weights, tol=1e-10):
    """``tr d >= n`` and ``sum w_i^2 d_i = 1``."""
    d = np.asarray(dims)
    w = np.asarray(weights, dtype=float)
    if d.shape != w.shape:
        raise ValidationError("dims and weights differ in length")
    return bool(d.sum() >= n and abs(float(np.sum(w ** 2 * d)) - 1.0) <= tol)


def dist_punctual(f, g):
    """``max_i ||P_i - P_i'||`` for families with matching dimensions."""
    if f.m != g.m or not np.array_equal(f.dims, g.dims):
        raise ValidationError("punctual distance needs the same number and dimensions of subspaces")
    return max(spectral_norm(p - q) for p, q in zip(f.projectors, g.projectors))


def dist_operator(f, g):
    if f.n != g.n:
        raise ValidationError("families live in different dimensions")
    return spectral_norm(frame_operator(f) - frame_operator(g))


class QIrregularity(NamedTuple):
    j0: int
    c: float
    order: np.ndarray     # permutation sorting weights non-increasingly
    dims: np.ndarray      # sorted
    weights: np.ndarray   # sorted


def _sorted_pair(n, dims, weights, tol):
    d = np.asarray(dims, dtype=int)
    w = np.asarray(weights, dtype=float)
    if not is_normalized_pair(n, d, w, tol):
        raise PreconditionError("(dims, weights) is not a normalized pair")
    order = np.argsort(-w, kind="stable")
    return d[order], w[order], order


def q_irregularity(n, dims, weights, tol=1e-10):
    """Largest ``j`` with ``(n - sum_{i<=j} d_i) w_j^2 > sum_{i>j} w_i^2 d_i``.

    Pairs are first sorted by weight, non-increasing (stable). Returns
    ``j0 = 0`` when no index qualifies; ``c`` is the level shared by the
    remaining tail, ``sum_{i>j0} w_i^2 d_i / (n - sum_{i<=j0} d_i)``.
    """
    d, w, order = _sorted_pair(n, dims, weights, tol)
    w2 = w ** 2
    head = np.cumsum(d)
    tail = np.concatenate([np.cumsum((w2 * d)[::-1])[::-1][1:], [0.0]])
    j0 = 0
    for j in range(1, len(d) + 1):
        if (n - head[j - 1]) * w2[j - 1] > tail[j - 1]:
            j0 = j
    free = n - (head[j0 - 1] if j0 else 0)
    if free <= 0:
        raise PreconditionError("no free dimensions left after the irregular head")
    c = float(np.sum((w2 * d)[j0:]) / free)
    return QIrregularity(j0, c, order, d, w)


class LowerBound(NamedTuple):
    value: float
    j0: int
    c: float
    # the same expression with the tail coefficient n - sum_{i>j0} d_i
    literal_value: float
    literal_coefficient: int


def lower_bound_details(n, dims, weights, tol=1e-10):
    """Lower bound for the FFP over all families with fixed (dims, weights).

    ``value = sum_{i<=j0} d_i w_i^4 + (n - sum_{i<=j0} d_i) c^2``: the head
    subspaces are mutually orthogonal and the rest is tight on the orthogonal
    complement of their span. ``literal_value`` keeps the alternative
    coefficient ``n - sum_{i>j0} d_i``, which can go negative.
    """
    q = q_irregularity(n, dims, weights, tol)
    d, w = q.dims, q.weights
    head = float(np.sum(d[:q.j0] * w[:q.j0] ** 4))
    free = n - int(d[:q.j0].sum())
    lit = n - int(d[q.j0:].sum())
    return LowerBound(head + free * q.c ** 2, q.j0, q.c, head + lit * q.c ** 2, lit)


def potential_lower_bound(n, dims, weights, tol=1e-10):
    return lower_bound_details(n, dims, weights, tol).value


def potential_identity_check(family, tol=1e-10):
    """``||(1/n) I - S||_F^2`` for a trace-one family.

    Raises ``PreconditionError`` when ``tr S != 1`` and ``ValidationError``
    if the value disagrees with ``FFP - 1/n``.
    """
    n = family.n
    s = frame_operator(family)
    tr = float(np.trace(s).real)
    if abs(tr - 1.0) > tol:
        raise PreconditionError(f"frame operator has trace {tr:.12g}, expected 1")
    val = frobenius_norm(np.eye(n) / n - s) ** 2
    other = float(np.real(np.vdot(s, s))) - 1.0 / n
    if abs(val - other) > tol:
        raise ValidationError(f"identity check failed: {val} vs {other}")
    return val


def induced_vector_frame(family):
    """Columns ``w_i e_j^(i)`` for the stored orthonormal bases; shape ``n x sum(d)``."""
    return np.hstack([w * u for w, u in zip(family.weights, family.bases)])


def spectrum(family):
    return eigh(frame_operator(family)).eigenvalues
