"""Independent reference computations used to freeze expected values.

Nothing here imports the LR or simplex machinery of the package; the
oracles are deliberately naive (brute force, grids, closed forms).
"""
import itertools
from collections import Counter

import numpy as np


# ---------------------------------------------------------------- Schur polys

def _ssyt(shape, k):
    """All semistandard tableaux of ``shape`` with entries in 1..k (row lists)."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, k + 1):
            filling[(i, j)] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_poly(shape, k):
    """``s_shape(x_1..x_k)`` as a Counter {exponent tuple: coefficient}."""
    shape = tuple(p for p in shape if p)
    poly = Counter()
    if len(shape) > k:
        return poly
    for t in _ssyt(shape, k):
        exps = [0] * k
        for v in t.values():
            exps[v - 1] += 1
        poly[tuple(exps)] += 1
    return poly


def poly_mul(p, q):
    out = Counter()
    for a, ca in p.items():
        for b, cb in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += ca * cb
    return out


def schur_expand(poly, k):
    """Write a symmetric polynomial as ``sum c_lam s_lam`` by peeling leading terms."""
    poly = Counter({e: c for e, c in poly.items() if c})
    out = {}
    while poly:
        # the lexicographically largest exponent is a partition
        lead = max(poly)
        coef = poly[lead]
        lam = tuple(x for x in lead if x)
        out[lam] = out.get(lam, 0) + coef
        for e, c in schur_poly(lam, k).items():
            poly[e] -= coef * c
            if poly[e] == 0:
                del poly[e]
    return out


def lr_by_multiplication(lam, mu, nu, k=None):
    """Coefficient of ``s_lam`` in ``s_mu s_nu`` by polynomial multiplication."""
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    if k is None:
        k = max(len(lam), len(mu) + len(nu), 1)
    prod = poly_mul(schur_poly(mu, k), schur_poly(nu, k))
    return schur_expand(prod, k).get(lam, 0)


def product_expansion(factors, k):
    poly = Counter({(0,) * k: 1})
    for f in factors:
        poly = poly_mul(poly, schur_poly(f, k))
    return schur_expand(poly, k)


def partitions(size):
    if size == 0:
        yield ()
        return

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for v in range(min(rem, cap), 0, -1):
            for rest in rec(rem - v, v):
                yield (v,) + rest

    yield from rec(size, size)


def ssyt_count(shape, k):
    return sum(1 for _ in _ssyt(tuple(p for p in shape if p), k)) if len(
        [p for p in shape if p]) <= k else 0


# ------------------------------------------------------------ simplex oracles

def simplex_grid_min(b, step=1e-3):
    """Dense grid minimum of ``<Bz, z>`` over the simplex (m <= 3)."""
    b = np.asarray(b, dtype=float)
    m = b.shape[0]
    steps = int(round(1 / step))
    best, arg = np.inf, None
    if m == 1:
        return float(b[0, 0]), np.ones(1)
    if m == 2:
        t = np.linspace(0, 1, steps + 1)
        z = np.stack([t, 1 - t], axis=1)
        vals = np.einsum("ki,ij,kj->k", z, b, z)
        k = int(np.argmin(vals))
        return float(vals[k]), z[k]
    if m == 3:
        t = np.linspace(0, 1, steps + 1)
        for x in t:
            y = t[t <= 1 - x + 1e-15]
            z = np.stack([np.full_like(y, x), y, np.maximum(1 - x - y, 0)], axis=1)
            vals = np.einsum("ki,ij,kj->k", z, b, z)
            k = int(np.argmin(vals))
            if vals[k] < best:
                best, arg = float(vals[k]), z[k]
        return best, arg
    raise ValueError("grid oracle only for m <= 3")


def hyperplane_min(g, box=6.0, rounds=8, points=401):
    """Minimum of ``<Gz, z>`` on ``sum z = 1`` by zooming grids (m = 2 or 3)."""
    g = np.asarray(g, dtype=float)
    m = g.shape[0]
    center = np.full(m - 1, 1.0 / m)
    half = box
    best = np.inf
    for _ in range(rounds):
        axes = [np.linspace(c - half, c + half, points if m == 2 else 201) for c in center]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, m - 1)
        z = np.concatenate([grid, 1 - grid.sum(axis=1, keepdims=True)], axis=1)
        vals = np.einsum("ki,ij,kj->k", z, g, z)
        k = int(np.argmin(vals))
        best = float(vals[k])
        center = grid[k]
        half /= 8
    return best


# ------------------------------------------------------- geometric oracles

def principal_angle_spectrum(c):
    """Spectrum of ``(P_1 + P_2) / 4`` for two planes in C^3 meeting in a line
    whose second principal angle has cosine ``c``."""
    return np.array([0.5, (1 + c) / 4, (1 - c) / 4])


def principal_angle_ffp(c):
    return float(np.sum(principal_angle_spectrum(c) ** 2))


def two_planes(c):
    """Planes ``span{e1, e2}`` and ``span{e1, c e2 + s e3}`` in C^3."""
    s = np.sqrt(1 - c * c)
    u1 = np.array([[1, 0], [0, 1], [0, 0]], dtype=complex)
    u2 = np.array([[1, 0], [0, c], [0, s]], dtype=complex)
    return u1, u2


def finite_difference(f, t=0.0, h=1e-6):
    return (f(t + h) - f(t - h)) / (2 * h)


def all_supports(m):
    for size in range(m, 0, -1):
        yield from itertools.combinations(range(m), size)
