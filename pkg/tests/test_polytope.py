import numpy as np
import pytest

from fusionframes.errors import PreconditionError
from fusionframes.frames import WeightedFamily, spectrum
from fusionframes.polytope import (SpectrumPolytope, build_polytope, contains,
                                   dykstra_projection, lambda0, least_distance)
from oracles import principal_angle_spectrum


def test_tight_point_feasible():
    p = build_polytope(2, [1, 1], [2 ** -0.5] * 2)
    assert contains(p, [0.5, 0.5])
    r = lambda0(p)
    assert np.allclose(r.lambda0, [0.5, 0.5], atol=1e-12)
    assert r.value == pytest.approx(0.5)


def test_two_planes_uniform_infeasible():
    p = build_polytope(3, [2, 2], [0.5, 0.5])
    assert not contains(p, np.full(3, 1 / 3))
    assert contains(p, [0.5, 0.25, 0.25])


def test_two_planes_lambda0_matches_principal_angles():
    # oracle: S = (P1 + P2)/4 has spectrum (1/2, (1+c)/4, (1-c)/4), least norm at c = 0
    cs = np.linspace(0, 1, 2001)
    norms = [np.sum(principal_angle_spectrum(c) ** 2) for c in cs]
    best = principal_angle_spectrum(cs[int(np.argmin(norms))])
    assert np.allclose(best, [0.5, 0.25, 0.25])
    r = lambda0(build_polytope(3, [2, 2], [0.5, 0.5]))
    assert np.allclose(r.lambda0, best, atol=1e-10)
    assert r.value == pytest.approx(3 / 8, abs=1e-12)
    assert r.kkt_residual <= 1e-8 and r.max_violation <= 1e-9
    assert r.dykstra_gap < 1e-6
    assert r.active_constraints


def test_rhs_invariant():
    p = build_polytope(3, [2, 1], [0.5, 2 ** -0.5])
    from fusionframes.existence import inequality_rhs
    for t, rhs in p.constraints:
        assert rhs == inequality_rhs(t, [2, 1], [0.5, 2 ** -0.5])


def test_redundant_and_reordered_constraints():
    p = build_polytope(3, [2, 1, 1], np.sqrt([0.25, 0.25, 0.25]))
    base = lambda0(p).lambda0
    loose = [(t, rhs + 5.0) for t, rhs in p.constraints]
    dup = SpectrumPolytope(p.n, p.constraints + p.constraints[::-1] + loose, p.dims, p.weights)
    assert np.allclose(lambda0(dup).lambda0, base, atol=1e-10)
    rev = SpectrumPolytope(p.n, p.constraints[::-1], p.dims, p.weights)
    assert np.allclose(lambda0(rev).lambda0, base, atol=1e-10)


@pytest.mark.parametrize("n,dims,w2", [
    (2, [1, 1], [0.8, 0.2]),
    (3, [1, 1, 1], [0.5, 0.25, 0.25]),
    (3, [2, 1, 1], [0.3, 0.2, 0.2]),
    (4, [2, 2, 1], [0.2, 0.2, 0.2]),
    (4, [3, 2], [0.2, 0.2]),
])
def test_sampled_spectra_feasible_and_convex(rng, n, dims, w2):
    w = np.sqrt(w2)
    p = build_polytope(n, dims, w)
    lam0 = lambda0(p)
    specs = [spectrum(WeightedFamily.random(n, dims, w, rng)) for _ in range(40)]
    for s in specs:
        assert contains(p, s, tol=1e-9)
        assert s @ s >= lam0.value - 1e-10
    for a, b in zip(specs[::2], specs[1::2]):
        assert contains(p, (a + b) / 2, tol=1e-9)
    assert np.all(np.diff(lam0.lambda0) <= 1e-12) and lam0.lambda0[-1] >= -1e-12
    assert lam0.lambda0.sum() == pytest.approx(1.0)


def test_least_distance_against_dykstra(rng):
    for _ in range(20):
        n = 4
        g = rng.standard_normal((6, n))
        x0 = rng.standard_normal(n)
        h = g @ x0 + rng.random(6)
        c = float(x0.sum())
        ones = np.ones(n)
        x = least_distance(np.vstack([g, ones, -ones]), np.concatenate([h, [c, -c]]))
        assert np.all(g @ x <= h + 1e-9) and x.sum() == pytest.approx(c)
        xd, _ = dykstra_projection(g, h, ones, c)
        assert np.allclose(x, xd, atol=1e-6)
    assert least_distance(np.array([[1.0], [-1.0]]), np.array([-1.0, -1.0])) is None


def test_precondition():
    with pytest.raises(PreconditionError):
        build_polytope(2, [1, 1], [1, 1])
