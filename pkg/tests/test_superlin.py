from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from gfsuper.superlin import (EVEN, ODD, SuperBasis, koszul_sign, normal_order, permute_tensor,
                              super_exterior_basis, super_symmetric_basis, super_tensor_power_action,
                              tensor_power_basis)


def test_koszul_examples():
    assert koszul_sign([1, 0], [ODD, ODD]) == -1
    assert koszul_sign([1, 0], [EVEN, ODD]) == 1
    assert koszul_sign([0, 1, 2], [ODD, ODD, ODD]) == 1


def test_bad_permutation():
    with pytest.raises(ValueError):
        koszul_sign([0, 0], [0, 0])


def test_odd_swap_on_tensor_square():
    V = SuperBasis.standard(1, 1)
    act = super_tensor_power_action(V, 2, [1, 0])
    words = tensor_power_basis(2, 2)
    xi = words.index((1, 1))
    assert act[xi, xi] == -1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_even_line_is_trivial(k):
    V = SuperBasis.standard(1, 0)
    for perm in permutations(range(k)):
        act = super_tensor_power_action(V, k, perm)
        assert act.to_dense() == [[1]]


def compose(p, q):
    # apply q first, then p
    return [p[q[k]] for k in range(len(q))]


def test_homomorphism_on_cube():
    V = SuperBasis.standard(1, 1)
    perms = list(permutations(range(3)))
    for p in perms:
        for q in perms:
            lhs = super_tensor_power_action(V, 3, p) @ super_tensor_power_action(V, 3, q)
            assert lhs == super_tensor_power_action(V, 3, compose(p, q))


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(
    st.permutations(range(k)), st.permutations(range(k)), st.lists(st.integers(0, 3), min_size=k, max_size=k))))
def test_permute_tensor_composes(data):
    p, q, word = data
    parities = [0, 1, 0, 1]
    s1, w1 = permute_tensor(word, parities, q)
    s2, w2 = permute_tensor(w1, parities, p)
    s, w = permute_tensor(word, parities, compose(p, q))
    assert (s1 * s2, w2) == (s, w)


def test_exterior_examples():
    assert len(super_exterior_basis(SuperBasis.standard(2, 0), 2)) == 1
    assert len(super_exterior_basis(SuperBasis.standard(0, 1), 3)) == 1
    assert sorted(super_exterior_basis(SuperBasis.standard(1, 1), 2)) == [(0, 1), (1, 1)]


def series_coeff(m, n, p, exterior):
    # coefficient of t^p in (1+t)^m / (1-t)^n, or the mirror for symmetric powers
    from math import comb
    a, b = (m, n) if exterior else (n, m)
    return sum(comb(a, j) * comb(b + p - j - 1, p - j) if p > j else comb(a, j) for j in range(min(a, p) + 1))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4))
def test_power_dims_generating_function(m, n, p):
    V = SuperBasis.standard(m, n)
    assert len(super_exterior_basis(V, p)) == series_coeff(m, n, p, True)
    assert len(super_symmetric_basis(V, p)) == series_coeff(m, n, p, False)


def test_normal_order_signs():
    par = [0, 0, 1]
    assert normal_order([1, 0], par, exterior=True) == (-1, (0, 1))
    assert normal_order([0, 0], par, exterior=True) == (0, ())
    assert normal_order([2, 2], par, exterior=True) == (1, (2, 2))
    assert normal_order([2, 2], par, exterior=False) == (0, ())
    assert normal_order([2, 0], par, exterior=False) == (1, (0, 2))
