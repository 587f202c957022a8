from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from gfsuper.diagrams import (Partition, cauchy_exterior, fits_thick_hook, flippable_boxes, flippable_count,
                              horizontal_strip_subdiagrams, invariant_diagram_count, minimal_decomposition,
                              parse_partition, partitions, plus, prefix_row_sum, strip_decompositions,
                              super_schur_dim, tilde, transpose)

P = Partition


def small_partitions(max_size=8):
    return st.integers(0, max_size).flatmap(lambda p: st.sampled_from(list(partitions(p))))


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))
    assert P((2, 1, 0)) == P((2, 1))


def test_parse():
    assert parse_partition("2,1") == P((2, 1))
    assert parse_partition("") == P()
    assert str(P((3, 1))) == "3,1"
    with pytest.raises(ValueError):
        parse_partition("1,x")


def test_partition_counts():
    assert [len(list(partitions(p))) for p in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions(3)) == [P((3,)), P((2, 1)), P((1, 1, 1))]


def test_transpose_examples():
    assert transpose((3, 1)) == P((2, 1, 1))
    assert transpose(()) == P()


@given(small_partitions())
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_thick_hook_examples():
    assert not fits_thick_hook((3, 2, 2), 2, 1)
    assert fits_thick_hook((5, 1, 1, 1), 1, 1)
    assert not fits_thick_hook((2, 2), 1, 1)


def test_tilde_examples():
    assert tilde((1,)) == P((2,))
    assert tilde((2,)) == P((3, 1))
    assert tilde((1, 1)) == P((2, 2))
    assert tilde(()) == P()


@given(small_partitions())
def test_tilde_size(lam):
    assert tilde(lam).size == 2 * lam.size


def test_plus_examples():
    assert plus((2, 1)) == P((2, 1, 1))
    assert plus(()) == P((1,))


@given(small_partitions())
def test_plus_size(lam):
    assert plus(lam).size == lam.size + 1


def test_prefix_row_sum():
    assert prefix_row_sum((3, 2, 1), 2) == 5
    assert prefix_row_sum((3,), 5) == 3
    assert prefix_row_sum((), 4) == 0


def brute_horizontal(lam):
    out = []
    for s in range(lam.size + 1):
        for beta in partitions(s):
            if beta.height > lam.height or any(beta.part(i) > lam.part(i) for i in range(1, beta.height + 1)):
                continue
            cols = [sum(1 for (i, j) in lam.boxes() if j == c and j > beta.part(i)) for c in range(1, (lam.part(1)) + 1)]
            if all(x <= 1 for x in cols):
                out.append((beta, lam.size - s))
    return sorted(out)


def test_horizontal_examples():
    assert sorted(horizontal_strip_subdiagrams((2, 1))) == sorted(
        [(P((2, 1)), 0), (P((1, 1)), 1), (P((2,)), 1), (P((1,)), 2)])
    assert horizontal_strip_subdiagrams((1,)) == [(P((1,)), 0), (P(), 1)]
    assert horizontal_strip_subdiagrams(()) == [(P(), 0)]


@given(small_partitions(7))
def test_horizontal_matches_brute_force(lam):
    got = horizontal_strip_subdiagrams(lam)
    assert sorted(got) == brute_horizontal(lam)
    assert [k for _, k in got] == sorted(k for _, k in got)


def test_flippable_examples():
    assert flippable_count((2, 1), (1, 1, 1)) == 1
    assert flippable_count((1, 1), (1, 1)) == 1
    assert flippable_boxes((1, 1), (1, 1)) == [(2, 1)]
    assert flippable_count((1,), (2,)) is None


def removable_to_valid(alpha, valid):
    n = 0
    for i in range(1, alpha.height + 1):
        if alpha.part(i) > alpha.part(i + 1):
            c = list(alpha)
            c[i - 1] -= 1
            n += P(c) in valid
    return n


@pytest.mark.parametrize("size", range(0, 7))
def test_flippable_against_enumeration(size):
    for lam in partitions(size):
        for beta in partitions(size):
            found = strip_decompositions(lam, beta)
            d = flippable_count(lam, beta)
            if not found:
                assert d is None and minimal_decomposition(lam, beta) is None
                continue
            top = max(a.size for a in found)
            biggest = [a for a in found if a.size == top]
            assert biggest == [minimal_decomposition(lam, beta)]
            assert d == removable_to_valid(biggest[0], set(found))
            # the valid alphas form a boolean cube over the flippable boxes
            assert len(found) == 2 ** d


def hook_content_dim(lam, m):
    lt = transpose(lam)
    num = prod(m + (j - i) for (i, j) in lam.boxes())
    den = prod(lam.part(i) - j + lt.part(j) - i + 1 for (i, j) in lam.boxes())
    return Fraction(num, den)


def test_schur_dim_examples():
    assert super_schur_dim((1,), 2, 1) == (2, 1)
    assert super_schur_dim((1, 1), 1, 1) == (1, 1)
    assert super_schur_dim((2, 2), 1, 1) == (0, 0)


@given(small_partitions(6), st.integers(0, 4))
def test_schur_dim_purely_even(lam, m):
    even, odd = super_schur_dim(lam, m, 0)
    assert odd == 0 and even == hook_content_dim(lam, m)


@given(small_partitions(5), st.integers(0, 2), st.integers(0, 2))
def test_schur_dim_transpose_duality(lam, m, n):
    e, o = super_schur_dim(lam, m, n)
    e2, o2 = super_schur_dim(transpose(lam), n, m)
    assert e + o == e2 + o2
    # parity flips with the size of the diagram
    assert (e, o) == ((o2, e2) if lam.size % 2 else (e2, o2))


@given(small_partitions(6), st.integers(0, 2), st.integers(0, 2))
def test_schur_dim_zero_iff_outside_hook(lam, m, n):
    assert (sum(super_schur_dim(lam, m, n)) == 0) == (not fits_thick_hook(lam, m, n))


def test_cauchy():
    assert cauchy_exterior(2) == [(P((2,)), P((1, 1))), (P((1, 1)), P((2,)))]
    assert cauchy_exterior(0) == [(P(), P())]
    assert len(cauchy_exterior(4)) == 5


def test_invariant_diagram_count():
    assert invariant_diagram_count(2, 1, 3) == 2
    assert invariant_diagram_count(1, 1, 1) == 1
    for m in range(4):
        assert invariant_diagram_count(m, 0, m + 1) == 0
