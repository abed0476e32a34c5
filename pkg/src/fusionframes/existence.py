"""Existence of tight fusion frames with prescribed dimensions and weights.

For a normalized pair ``(d, w)`` in ``C^n`` a ``1/n``-tight family exists iff
for every ``1 <= r <= n-1`` and every admissible LR tuple
``(J_0; J_1, ..., J_m)``

    r / n  <=  sum_i w_i^2 |J_i  intersect  {1, ..., d_i}|

These are the Horn-Klyachko inequalities for summands with spectra
``(w_i^2, ..., w_i^2, 0, ..., 0)`` adding up to ``(1/n) I``. The decision is
purely arithmetic; no frame is constructed.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import BudgetExceededError, PreconditionError
from .frames import is_normalized_pair, is_tight
from .linalg import DEFAULT_TOL
from .lr import DEFAULT_BUDGET, AdmissibleTuple, enumerate_admissible

__all__ = ["Violation", "ScreenFinding", "ExistenceVerdict", "tight_exists",
           "dimension_screen", "verify_tff", "inequality_rhs", "forced_indices"]

GAP_TOL = 1e-12


@dataclass(frozen=True)
class Violation:
    tuple: AdmissibleTuple
    lhs: float
    rhs: float

    @property
    def gap(self):
        return self.lhs - self.rhs

    def as_dict(self):
        return {**self.tuple.as_dict(), "lhs": self.lhs, "rhs": self.rhs, "gap": self.gap}


@dataclass(frozen=True)
class ScreenFinding:
    kind: str
    indices: tuple
    message: str


@dataclass
class ExistenceVerdict:
    exists: Optional[bool]               # None: undecided within the budget
    violation: Optional[Violation] = None
    screen_notes: list = field(default_factory=list)
    checked: int = 0                     # inequalities evaluated
    orders_checked: tuple = ()
    message: str = ""


def inequality_rhs(t, dims, weights):
    """``sum_i w_i^2 |J_i cap {1..d_i}|`` for an admissible tuple."""
    w2 = np.asarray(weights, dtype=float) ** 2
    return float(sum(w2[i] * sum(1 for j in ji if j <= dims[i]) for i, ji in enumerate(t.js)))


def _require_normalized(n, dims, weights, tol):
    if len(dims) != len(weights):
        raise PreconditionError("dims and weights differ in length")
    if any(d < 1 or d > n for d in dims):
        raise PreconditionError(f"every dimension must lie in 1..{n}")
    if not is_normalized_pair(n, dims, weights, tol):
        raise PreconditionError("(dims, weights) is not normalized: need sum(d) >= n and sum w_i^2 d_i = 1")


def forced_indices(n, dims):
    """Indices ``i`` (0-based) with ``sum_{k != i} d_k <= n - 1``.

    In any tight family such a subspace must carry weight ``1/n`` and be
    orthogonal to every other subspace.
    """
    total = int(np.sum(dims))
    return tuple(i for i, d in enumerate(dims) if total - d <= n - 1)


def dimension_screen(n, dims, weights, tol=1e-10):
    """Cheap necessary conditions from interlacing; returns rule-out findings.

    Finding indices are 0-based; messages count subspaces from 1.
    An empty list means the screen is inconclusive, never that a tight
    family exists.
    """
    dims = [int(d) for d in dims]
    w2 = np.asarray(weights, dtype=float) ** 2
    _require_normalized(n, dims, weights, tol)
    forced = forced_indices(n, dims)
    findings = []
    for i in forced:
        if abs(w2[i] - 1.0 / n) > tol:
            findings.append(ScreenFinding(
                "weight", (i,),
                f"subspace {i + 1} must have w^2 = 1/{n} in a tight family, got {w2[i]:.6g}"))
    if forced:
        # forced subspaces are pairwise orthogonal and orthogonal to the rest
        rest = [d for k, d in enumerate(dims) if k not in forced]
        need = sum(dims[i] for i in forced) + (max(rest) if rest else 0)
        label = [i + 1 for i in forced]
        if need > n:
            findings.append(ScreenFinding(
                "orthogonality", forced,
                f"subspaces {label} must be orthogonal to all others, "
                f"which needs {need} > {n} dimensions"))
        if sum(dims[i] for i in forced) / n > 1 + tol:
            findings.append(ScreenFinding(
                "trace", forced,
                f"forced weights give trace {sum(dims[i] for i in forced)}/{n} > 1"))
    return findings


def tight_exists(n, dims, weights, budget=DEFAULT_BUDGET, allow_large=False, tol=1e-10):
    """Decide whether a ``1/n``-tight family with these dims and weights exists.

    The first violated inequality (by ``r``, then lexicographic tuple order)
    is reported together with both sides. When the enumeration for some
    ``r`` exceeds ``budget`` the verdict is ``exists=None``, unless an
    earlier order already produced a violation.
    """
    dims = [int(d) for d in dims]
    _require_normalized(n, dims, weights, tol)
    notes = [f.message for f in dimension_screen(n, dims, weights, tol)]
    forced = forced_indices(n, dims)
    if forced:
        notes.append(f"subspaces {[i + 1 for i in forced]} would have to be orthogonal to all others")
    m = len(dims)
    checked, done = 0, []
    for r in range(1, n):
        try:
            tuples = enumerate_admissible(n, m, r, budget=budget, allow_large=allow_large)
        except BudgetExceededError as exc:
            return ExistenceVerdict(None, None, notes, checked, tuple(done),
                                    f"undecided: order r={r}: {exc}")
        for t in tuples:
            checked += 1
            lhs, rhs = r / n, inequality_rhs(t, dims, weights)
            if lhs > rhs + GAP_TOL:
                return ExistenceVerdict(False, Violation(t, lhs, rhs), notes, checked,
                                        tuple(done + [r]), "violated inequality")
        done.append(r)
    return ExistenceVerdict(True, None, notes, checked, tuple(done), "all inequalities hold")


def verify_tff(family, tol=DEFAULT_TOL.reporting):
    """True iff the family's frame operator is a multiple of the identity."""
    return is_tight(family, tol)
