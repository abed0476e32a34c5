import itertools

import numpy as np
import pytest

from conftest import random_psd
from corpus import COCO_B
from fusionframes.errors import ValidationError
from fusionframes.hadamard import (index_2, index_sp, minimal_index,
                                   minimal_index_det, sp_equals_minimal)
from oracles import hyperplane_min


def random_nonneg_psd(rng, m, rank=None):
    x = rng.random((rank or m, m))
    return x.T @ x


def test_minimal_index_examples():
    r = minimal_index(np.eye(2))
    assert r.value == pytest.approx(0.5) and r.cross_check == pytest.approx(0.5)
    r = minimal_index(np.ones((2, 2)))
    assert r.value == pytest.approx(1.0) and np.sum(r.witness) == pytest.approx(1.0)
    assert minimal_index(np.diag([1.0, 0.0])).value == 0.0


def test_minimal_index_formulas_agree(rng):
    for _ in range(30):
        g = random_psd(rng, 4, real=False)
        r = minimal_index(g)
        assert r.cross_check is not None
        assert r.value == pytest.approx(r.cross_check, rel=1e-9)
        inv = np.linalg.inv(g)
        assert r.value == pytest.approx(1 / np.real(inv.sum()), rel=1e-9)
        assert minimal_index_det(g) == pytest.approx(r.value, rel=1e-9)


def test_hyperplane_oracle(rng):
    for m in (2, 3):
        for _ in range(3):
            g = random_psd(rng, m, real=True) + 0.1 * np.eye(m)
            assert minimal_index(g).value == pytest.approx(hyperplane_min(g), abs=1e-4)
    # rank-deficient with 1 in the range
    g = np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 2.0]])
    assert minimal_index(g).value == pytest.approx(hyperplane_min(g), abs=1e-4)


def test_submatrix_monotonicity(rng):
    for _ in range(10):
        g = random_psd(rng, 4, real=False, rank=int(rng.integers(1, 5)))
        full = minimal_index(g).value
        for k in (1, 2, 3):
            for j in itertools.combinations(range(4), k):
                assert minimal_index(g[np.ix_(j, j)]).value >= full - 1e-9


def test_index_sp_examples():
    r = index_sp(COCO_B)
    assert r.value == pytest.approx(5 / 8, abs=1e-12)
    assert np.allclose(r.witness ** 2, [0.5, 0.5, 0])
    d = np.array([1.0, 2.0, 4.0])
    r = index_sp(np.diag(d))
    assert r.method == "diagonal-closed-form"
    assert r.value == pytest.approx(1 / np.sum(1 / d))
    assert index_sp(np.ones((4, 4))).value == pytest.approx(1.0)


def test_minimal_below_spectral(rng):
    for _ in range(30):
        b = random_nonneg_psd(rng, 4, rank=int(rng.integers(1, 5)))
        assert minimal_index(b).value <= index_sp(b).value + 1e-10


def test_rank_one_attainment_and_eigen_equation(rng):
    for _ in range(30):
        b = random_nonneg_psd(rng, 5, rank=int(rng.integers(1, 6)))
        r = index_sp(b)
        x = r.witness
        assert x.min() >= 0 and np.linalg.norm(x) == pytest.approx(1.0)
        h = b * np.outer(x, x)
        assert np.linalg.norm(h, 2) == pytest.approx(r.value, abs=1e-8)
        j = list(r.support)
        assert np.allclose((h @ x)[j], r.value * x[j], atol=1e-8)
        assert minimal_index(b[np.ix_(j, j)]).value == pytest.approx(r.value, abs=1e-8)


def test_diagonal_domination(rng):
    for _ in range(30):
        g = random_nonneg_psd(rng, 4)
        for d in (np.diag(g.sum(axis=1)), np.eye(4) * np.linalg.eigvalsh(g).max()):
            assert index_sp(g).value <= index_sp(d).value + 1e-9


def test_index_2_examples():
    d = np.array([1.0, 2.0, 3.0])
    assert index_2(np.diag(d)).value == pytest.approx(np.sum(d ** -2) ** -0.5)
    assert index_2(np.eye(5)).value == pytest.approx(5 ** -0.5)
    assert index_2(np.sqrt(COCO_B)).value == pytest.approx(np.sqrt(5 / 8))
    with pytest.raises(ValidationError):
        index_2(np.array([[0.0, 1.0], [1.0, 0.0]]))
    with pytest.raises(ValidationError):
        index_2(np.array([[1.0, 0.2], [0.3, 1.0]]))


def test_index_2_squares_to_index_sp(rng):
    for _ in range(20):
        a = np.sqrt(random_nonneg_psd(rng, 4))
        if np.linalg.eigvalsh(a * a).min() < 0:
            continue
        assert index_2(a).value ** 2 == pytest.approx(index_sp(a * a).value, abs=1e-9)


def test_sp_equals_minimal_examples():
    ok, u = sp_equals_minimal(COCO_B)
    assert ok and np.allclose(u, [0.8, 0.8, 0])
    ok, u = sp_equals_minimal(np.diag([1.0, 2.0]))
    assert ok and np.allclose(u, [1, 0.5])
    ok, u = sp_equals_minimal(np.diag([1.0, 0.0]))
    assert not ok and u is None


def test_sp_equals_minimal_consistency(rng):
    for _ in range(40):
        b = random_nonneg_psd(rng, 4, rank=int(rng.integers(1, 5)))
        ok, u = sp_equals_minimal(b)
        sp, mi = index_sp(b).value, minimal_index(b).value
        if ok:
            assert np.allclose(b @ u, 1, atol=1e-8) and u.min() >= 0
            assert sp == pytest.approx(1 / u.sum(), abs=1e-10)
            assert sp == pytest.approx(mi, abs=1e-9)
        else:
            assert sp > mi + 1e-12 or mi == 0


def test_psd_validation():
    with pytest.raises(ValidationError):
        minimal_index(np.array([[1.0, 2.0], [2.0, 1.0]]))
    with pytest.raises(ValidationError):
        minimal_index(np.array([[1.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(ValidationError):
        index_sp(np.array([[2.0, -1.0], [-1.0, 2.0]]))
