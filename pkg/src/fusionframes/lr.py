"""Littlewood-Richardson coefficients and Horn-Klyachko index tuples.

Partitions are plain tuples of positive integers in non-increasing order
(trailing zeros trimmed), so they can be used directly as dictionary keys.
Index sets are strictly increasing 1-based tuples.
"""
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceededError, ValidationError

__all__ = [
    "as_partition", "partition_of", "lr_coefficient", "multi_lr_coefficient",
    "multi_lr_positive", "schur_dimension", "partitions_of_size",
    "AdmissibleTuple", "enumerate_admissible", "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10 ** 7
MAX_N, MAX_M = 8, 4


def as_partition(parts):
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValidationError(f"negative part in {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValidationError(f"parts must be non-increasing: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _check_index_set(j, n=None):
    j = tuple(int(x) for x in j)
    if any(a >= b for a, b in zip(j, j[1:])) or (j and j[0] < 1):
        raise ValidationError(f"index set must be strictly increasing and 1-based: {j}")
    if n is not None and j and j[-1] > n:
        raise ValidationError(f"index {j[-1]} exceeds ambient dimension {n}")
    return j


def partition_of(j, n=None):
    """``lambda(J) = (j_r - r, ..., j_1 - 1)``, trimmed."""
    j = _check_index_set(j, n)
    r = len(j)
    return as_partition([j[r - 1 - k] - (r - k) for k in range(r)])


def _contains(outer, inner):
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def _lr(lam, mu, nu):
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu) or not _contains(lam, nu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    rows = len(lam)
    mu_p = mu + (0,) * (rows - len(mu))
    # skew cells in reading order: rows top to bottom, each row right to left
    cells = [(i, c) for i in range(rows) for c in range(lam[i] - 1, mu_p[i] - 1, -1)]
    filling = {}
    counts = [0] * (len(nu) + 1)
    k = len(nu)

    def place(idx):
        if idx == len(cells):
            return 1
        i, c = cells[idx]
        hi = k
        right = filling.get((i, c + 1))
        if right is not None:
            hi = min(hi, right)          # rows weakly increase
        lo = 1
        above = filling.get((i - 1, c))
        if above is not None:
            lo = above + 1               # columns strictly increase
        hi = min(hi, i + 1)              # lattice words put at most i+1 in row i
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, c)] = v
            total += place(idx + 1)
            del filling[(i, c)]
            counts[v] -= 1
        return total

    return place(0)


def lr_coefficient(lam, mu, nu):
    """Number of LR skew tableaux of shape ``lam/mu`` with content ``nu``.

    This is the multiplicity of ``s_lam`` in ``s_mu * s_nu`` and it is
    symmetric in ``mu`` and ``nu``.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    # the count is symmetric; a smaller content keeps the search shallow
    if sum(nu) > sum(mu) and _contains(lam, nu):
        mu, nu = nu, mu
    return _lr(lam, mu, nu)


def partitions_of_size(size, inner=(), outer=None, max_parts=None):
    """Partitions ``p`` of ``size`` with ``inner <= p <= outer`` (Young order)."""
    inner = as_partition(inner)
    if outer is not None:
        outer = as_partition(outer)
        max_parts = len(outer) if max_parts is None else min(max_parts, len(outer))
    if max_parts is None:
        max_parts = size
    out = []

    def rec(prefix, remaining, cap):
        i = len(prefix)
        if remaining == 0:
            if len(prefix) >= len(inner):
                out.append(tuple(prefix))
            return
        if i >= max_parts:
            return
        lo = inner[i] if i < len(inner) else 1
        hi = min(cap, remaining, outer[i] if outer is not None else remaining)
        for v in range(hi, lo - 1, -1):
            prefix.append(v)
            rec(prefix, remaining - v, v)
            prefix.pop()

    if size == 0:
        return [()] if not inner else []
    rec([], size, size)
    return [p for p in out if _contains(p, inner)]


def multi_lr_coefficient(lam0, lams):
    """Multiplicity of ``s_lam0`` in the product ``s_lam1 * ... * s_lamm``."""
    lam0 = as_partition(lam0)
    lams = [as_partition(p) for p in lams]
    if sum(lam0) != sum(sum(p) for p in lams):
        return 0
    if not lams:
        return 1 if not lam0 else 0
    current = {lams[0]: 1} if _contains(lam0, lams[0]) else {}
    for nxt in lams[1:]:
        new = {}
        for kappa, coef in current.items():
            size = sum(kappa) + sum(nxt)
            for rho in partitions_of_size(size, inner=kappa, outer=lam0):
                c = lr_coefficient(rho, kappa, nxt)
                if c:
                    new[rho] = new.get(rho, 0) + coef * c
        current = new
    return current.get(lam0, 0)


@lru_cache(maxsize=None)
def _multi_positive(lam0, lams):
    # depth-first search for a chain lams[0] = k_1 <= k_2 <= ... <= k_m = lam0
    # with every c^{k_{i+1}}_{k_i, lams[i]} > 0
    @lru_cache(maxsize=None)
    def reach(i, kappa):
        if i == len(lams):
            return kappa == lam0
        nxt = lams[i]
        size = sum(kappa) + sum(nxt)
        if i == len(lams) - 1:
            return lr_coefficient(lam0, kappa, nxt) > 0
        for rho in partitions_of_size(size, inner=kappa, outer=lam0):
            if _contains(rho, nxt) and lr_coefficient(rho, kappa, nxt) > 0 and reach(i + 1, rho):
                return True
        return False

    if not lams:
        return not lam0
    if not _contains(lam0, lams[0]):
        return False
    return reach(1, lams[0])


def multi_lr_positive(lam0, lams):
    """True iff ``s_lam0`` occurs in ``s_lam1 * ... * s_lamm``.

    Stops at the first positive chain of pairwise coefficients. Returns False
    straight away when the sizes do not add up.
    """
    lam0 = as_partition(lam0)
    lams = [as_partition(p) for p in lams]
    if sum(lam0) != sum(sum(p) for p in lams):
        return False
    # the coefficient is symmetric in the factors; canonical order helps the cache
    return _multi_positive(lam0, tuple(sorted(lams, reverse=True)))


def schur_dimension(lam, k):
    """Number of semistandard tableaux of shape ``lam`` with entries in ``1..k``."""
    lam = as_partition(lam)
    if len(lam) > k:
        raise ValidationError(f"partition {lam} has more than {k} parts")
    p = lam + (0,) * (k - len(lam))
    num, den = 1, 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= p[i] - p[j] + j - i
            den *= j - i
    return num // den


@dataclass(frozen=True, order=True)
class AdmissibleTuple:
    """``(J_0; J_1, ..., J_m)`` of ``r``-subsets of ``{1..n}`` with positive
    LR multiplicity of ``lambda(J_0)`` in the product of the ``lambda(J_i)``."""
    r: int
    j0: tuple
    js: tuple

    @property
    def sets(self):
        return (self.j0,) + self.js

    def as_dict(self):
        return {"r": self.r, "J0": list(self.j0), "J": [list(j) for j in self.js]}


def _budget_needed(n, m, r):
    return m * math.comb(n, r) ** (m + 1)


@lru_cache(maxsize=64)
def _enumerate(n, m, r):
    subsets = list(itertools.combinations(range(1, n + 1), r))
    part = {j: partition_of(j) for j in subsets}
    by_size = {}
    for j in subsets:
        by_size.setdefault(sum(part[j]), []).append(j)
    found = []
    for js in itertools.product(subsets, repeat=m):
        size = sum(sum(part[j]) for j in js)
        for j0 in by_size.get(size, ()):
            if multi_lr_positive(part[j0], [part[j] for j in js]):
                found.append(AdmissibleTuple(r, j0, js))
    found.sort()
    return tuple(found)


def enumerate_admissible(n, m, r, budget=DEFAULT_BUDGET, allow_large=False):
    """All tuples in ``LR_r^n(m)``, sorted lexicographically by ``(J_0, J_1, ...)``.

    Raises ``BudgetExceededError`` when ``m * C(n, r)^(m+1)`` exceeds
    ``budget``, or when ``n > 8`` / ``m > 4`` without ``allow_large``.
    """
    if not 1 <= r <= n - 1:
        raise ValidationError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    if m < 1:
        raise ValidationError("need at least one summand")
    if not allow_large and (n > MAX_N or m > MAX_M):
        raise BudgetExceededError(
            f"n={n}, m={m} exceeds the interactive caps n<={MAX_N}, m<={MAX_M}; "
            "pass allow_large=True to accept exponential cost",
            required=_budget_needed(n, m, r), budget=budget)
    need = _budget_needed(n, m, r)
    if need > budget:
        raise BudgetExceededError(
            f"m*C(n,r)^(m+1) = {need} candidate tuples exceeds the budget {budget}",
            required=need, budget=budget)
    return list(_enumerate(n, m, r))
