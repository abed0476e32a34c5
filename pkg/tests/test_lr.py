import itertools
import math

import pytest

from fusionframes.errors import BudgetExceededError, ValidationError
from fusionframes.lr import (AdmissibleTuple, as_partition, enumerate_admissible,
                             lr_coefficient, multi_lr_coefficient,
                             multi_lr_positive, partition_of,
                             partitions_of_size, schur_dimension)
from oracles import lr_by_multiplication, partitions, product_expansion, ssyt_count


def test_partition_of_examples():
    assert partition_of((1, 2, 3)) == ()
    assert partition_of((1, 3, 4), n=5) == (1, 1)
    assert partition_of((3, 4, 5), n=5) == (2, 2, 2)
    for n in range(2, 7):
        for r in range(1, n):
            j = tuple(range(n - r + 1, n + 1))
            assert partition_of(j, n) == (n - r,) * r
            for js in itertools.combinations(range(1, n + 1), r):
                lam = partition_of(js, n)
                assert all(p <= n - r for p in lam) and len(lam) <= r


def test_partition_validation():
    with pytest.raises(ValidationError):
        partition_of((2, 1))
    with pytest.raises(ValidationError):
        partition_of((1, 6), n=5)
    with pytest.raises(ValidationError):
        as_partition((1, 2))
    assert as_partition((3, 1, 0, 0)) == (3, 1)


def test_lr_examples():
    assert lr_coefficient((2,), (1,), (1,)) == 1
    assert lr_coefficient((1, 1), (1,), (1,)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((4, 3, 2, 1), (3, 2, 1), (2, 1, 1)) == 3
    assert lr_coefficient((2, 1), (2, 1), ()) == 1
    assert lr_coefficient((2, 1), (1, 1), ()) == 0
    assert lr_coefficient((3,), (1, 1), (1,)) == 0


def test_lr_matches_multiplication_oracle():
    # every coefficient with |mu| + |nu| <= 5, checked against polynomial algebra
    for size in range(6):
        for a in range(size + 1):
            for mu in partitions(a):
                for nu in partitions(size - a):
                    k = max(1, len(mu) + len(nu))
                    expansion = product_expansion([mu, nu], k)
                    for lam in partitions(size):
                        assert lr_coefficient(lam, mu, nu) == expansion.get(lam, 0), (lam, mu, nu)


def test_lr_symmetry():
    for size in range(1, 9):
        for lam in partitions(size):
            for a in range(size + 1):
                for mu in partitions(a):
                    for nu in partitions(size - a):
                        if len(mu) <= len(lam) and len(nu) <= len(lam):
                            assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


def test_schur_dimension_examples():
    assert schur_dimension((), 3) == 1
    assert schur_dimension((1,), 2) == 2
    assert schur_dimension((2, 1), 3) == 8
    for lam in [(2,), (2, 1), (3, 1, 1)]:
        for k in (3, 4):
            assert schur_dimension(lam, k) == ssyt_count(lam, k)
    with pytest.raises(ValidationError):
        schur_dimension((1, 1, 1), 2)


def test_dimension_identity_small():
    for k in (1, 2, 3):
        for mu in partitions(2):
            for nu in partitions(2):
                if len(mu) > k or len(nu) > k:
                    continue
                total = sum(lr_coefficient(lam, mu, nu) * schur_dimension(lam, k)
                            for lam in partitions(4) if len(lam) <= k)
                assert total == schur_dimension(mu, k) * schur_dimension(nu, k)


def test_multi_lr_examples():
    assert multi_lr_positive((2, 1), [(2, 1)])
    assert multi_lr_coefficient((2, 1), [(1,), (1,), (1,)]) == 2
    assert multi_lr_positive((2, 1), [(1,), (1,), (1,)])
    assert not multi_lr_positive((2, 1), [(1,), (1,)])
    assert multi_lr_coefficient((2, 1), [(1,), (1,)]) == 0
    assert multi_lr_positive((), [(), ()])


def test_multi_lr_against_oracle():
    factor_sets = [[(1,), (1,), (1,)], [(2,), (1,), (1,)], [(1, 1), (1,), (2,)],
                   [(2, 1), (1,), (1,)], [(1,), (1,), (1,), (1,)]]
    for fs in factor_sets:
        size = sum(sum(f) for f in fs)
        k = sum(len(f) for f in fs)
        expansion = product_expansion(fs, k)
        for lam in partitions(size):
            assert multi_lr_coefficient(lam, fs) == expansion.get(lam, 0)
            assert multi_lr_positive(lam, fs) == (expansion.get(lam, 0) > 0)


def test_partitions_of_size():
    assert partitions_of_size(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of_size(3, inner=(2,)) == [(3,), (2, 1)]
    assert partitions_of_size(3, outer=(2, 2)) == [(2, 1)]
    assert partitions_of_size(0) == [()]


def test_enumerate_examples():
    t = enumerate_admissible(2, 1, 1)
    assert [(a.j0, a.js) for a in t] == [((1,), ((1,),)), ((2,), ((2,),))]
    t = enumerate_admissible(2, 2, 1)
    assert {(a.j0, a.js) for a in t} == {((1,), ((1,), (1,))), ((2,), ((2,), (1,))),
                                         ((2,), ((1,), (2,)))}
    assert t == sorted(t)


def _brute_force_admissible(n, m, r):
    # independent route: every candidate tuple, positivity by polynomial algebra
    subsets = list(itertools.combinations(range(1, n + 1), r))
    out = set()
    for j0 in subsets:
        lam0 = partition_of(j0)
        for js in itertools.product(subsets, repeat=m):
            lams = [partition_of(j) for j in js]
            if sum(lam0) != sum(sum(p) for p in lams):
                continue
            k = max(1, sum(len(p) for p in lams))
            if product_expansion(lams, k).get(lam0, 0) > 0:
                out.add((j0, js))
    return out


def test_enumerate_against_brute_force():
    for n, m, r in [(3, 2, 1), (3, 2, 2), (4, 2, 2), (3, 3, 1), (4, 2, 1)]:
        got = {(a.j0, a.js) for a in enumerate_admissible(n, m, r)}
        assert got == _brute_force_admissible(n, m, r), (n, m, r)


def test_enumerate_invariants():
    for n, m, r in [(4, 2, 2), (4, 3, 1), (5, 2, 2)]:
        tuples = enumerate_admissible(n, m, r)
        keys = {(a.j0, a.js) for a in tuples}
        for a in tuples:
            lams = [partition_of(j) for j in a.js]
            assert sum(partition_of(a.j0)) == sum(sum(p) for p in lams)
            assert multi_lr_positive(partition_of(a.j0), lams)
            for perm in itertools.permutations(a.js):
                assert (a.j0, perm) in keys


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError) as info:
        enumerate_admissible(6, 3, 3, budget=1000)
    assert info.value.required == 3 * math.comb(6, 3) ** 4
    with pytest.raises(BudgetExceededError):
        enumerate_admissible(9, 2, 1)
    assert len(enumerate_admissible(9, 1, 1, allow_large=True)) == 9
    with pytest.raises(ValidationError):
        enumerate_admissible(3, 2, 3)


def test_admissible_tuple_dict():
    a = AdmissibleTuple(1, (2,), ((2,), (1,)))
    assert a.as_dict() == {"r": 1, "J0": [2], "J": [[2], [1]]}
    assert a.sets == ((2,), (2,), (1,))


def test_oracle_sanity():
    assert lr_by_multiplication((3, 2, 1), (2, 1), (2, 1)) == 2
