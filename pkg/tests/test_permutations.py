from __future__ import annotations

from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st_

from genocchi.permutations import (
    Perm,
    enumerate_dumont,
    inv_word,
    is_dumont,
    is_normalized_dumont,
    is_normalized_genocchi,
    satisfies_condition,
    st,
    transposition_compose,
)
from genocchi.qpolys import ONE_PLUS_Q, QPoly, cbar, gandhi
from genocchi.sequences import median_genocchi, normalized_h


def brute_dumont(n: int) -> list[tuple[int, ...]]:
    out = []
    for w in permutations(range(1, 2 * n + 1)):
        if all(w[2 * i - 1] < 2 * i and w[2 * i - 2] > 2 * i - 1 for i in range(1, n + 1)):
            out.append(w)
    return out


def brute_parity_class(n: int, same_parity_when_greater: bool) -> set[tuple[int, ...]]:
    out = set()
    for w in brute_dumont(n):
        pos = {v: k + 1 for k, v in enumerate(w)}
        ok = True
        for j in range(1, n):
            a, b = pos[2 * j], pos[2 * j + 1]
            cmp = a > b if same_parity_when_greater else a < b
            ok &= cmp == (a % 2 == b % 2)
        if ok:
            out.add(w)
    return out


def q_sum(perms) -> QPoly:
    s = QPoly()
    for p in perms:
        s = s + QPoly.monomial(st(p))
    return s


@pytest.mark.parametrize(
    "word, expected", [([1, 2, 3], 0), ([3, 2, 1], 3), ([2, 4, 1, 3], 3), ([], 0)]
)
def test_inv_word_examples(word, expected):
    assert inv_word(word) == expected


@given(st_.lists(st_.integers(0, 9), max_size=12))
def test_inv_word_matches_pair_count(w):
    assert inv_word(w) == sum(1 for a, b in combinations(w, 2) if a > b)


def test_perm_validation_and_parse():
    assert str(Perm.parse("41726583")) == "41726583"
    assert Perm.parse("2,1,4,3") == Perm((2, 1, 4, 3))
    with pytest.raises(ValueError):
        Perm((1, 1, 2))
    long = Perm(tuple(range(10, 0, -1)))
    assert str(long) == "10,9,8,7,6,5,4,3,2,1"


@given(st_.permutations(list(range(1, 9))))
def test_inverse_is_involution(images):
    p = Perm(tuple(images))
    assert p.inverse().inverse() == p
    assert all(p.inverse()(p(k)) == k for k in range(1, 9))


def test_is_dumont_examples():
    assert is_dumont(Perm.parse("2143"))
    assert is_dumont(Perm.parse("41726583"))
    assert not is_dumont(Perm.parse("1234"))
    with pytest.raises(ValueError):
        is_dumont(Perm.parse("213"))


def test_normalized_examples():
    assert is_normalized_dumont(Perm.parse("2143"))
    assert is_normalized_dumont(Perm.parse("21736584"))
    assert not is_normalized_dumont(Perm.parse("41726583"))
    with pytest.raises(ValueError):
        is_normalized_dumont(Perm.parse("1234"))
    with pytest.raises(ValueError):
        is_normalized_genocchi(Perm.parse("1234"))


def test_st_examples():
    assert st(Perm.parse("2143")) == 0
    for n in range(1, 7):
        invol = Perm(tuple(k + 1 if k % 2 else k - 1 for k in range(1, 2 * n + 1)))
        assert st(invol) == 0
    with pytest.raises(ValueError):
        st(Perm.parse("213"))


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_matches_brute_force(n):
    ours = [p.images for p in enumerate_dumont(n)]
    assert ours == sorted(brute_dumont(n))
    assert {p.images for p in enumerate_dumont(n, "ndumont")} == brute_parity_class(n, True)
    assert {p.images for p in enumerate_dumont(n, "ngenocchi")} == brute_parity_class(n, False)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_sizes(n):
    assert sum(1 for _ in enumerate_dumont(n)) == median_genocchi(n - 1)
    assert sum(1 for _ in enumerate_dumont(n, "normalized_dumont")) == normalized_h(n - 1)
    assert sum(1 for _ in enumerate_dumont(n, "normalized_genocchi")) == normalized_h(n - 1)


def test_lexicographic_order():
    words = [p.images for p in enumerate_dumont(4, "ndumont")]
    assert words == sorted(words)


def test_unknown_class():
    with pytest.raises(ValueError):
        list(enumerate_dumont(2, "bogus"))


def test_dc3_image_set():
    expected = {"41736285", "41736582", "71436285", "71436582", "51436287", "21736584", "21436587"}
    assert {str(p) for p in enumerate_dumont(4, "ndumont")} == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_st_generating_function_is_gandhi(n):
    assert q_sum(enumerate_dumont(n)) == gandhi(n).at_x(1)


@pytest.mark.parametrize("n", range(1, 6))
def test_normalized_sum_times_power(n):
    norm = q_sum(enumerate_dumont(n, "ndumont"))
    assert norm * ONE_PLUS_Q ** (n - 1) == gandhi(n).at_x(1)
    assert norm == cbar(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_st_range_on_normalized(n):
    top = comb(n - 1, 2)
    assert all(0 <= st(p) <= top for p in enumerate_dumont(n, "ndumont"))


def test_transposition_examples():
    sigma = Perm.parse("41726583")
    left = transposition_compose(sigma, 2, 3, "left")
    assert str(left) == "41736582"
    assert transposition_compose(left, 2, 3, "left") == sigma
    right = transposition_compose(sigma, 1, 2, "right")
    assert str(right) == "14726583"
    with pytest.raises(ValueError):
        transposition_compose(sigma, 2, 2)
    with pytest.raises(ValueError):
        transposition_compose(sigma, 0, 2)
    with pytest.raises(ValueError):
        transposition_compose(sigma, 1, 2, "middle")


@pytest.mark.parametrize("n", range(2, 5))
def test_condition_swap_raises_st_by_one(n):
    for sigma in enumerate_dumont(n):
        for j in range(1, n):
            other = transposition_compose(sigma, 2 * j, 2 * j + 1, "left")
            assert is_dumont(other)
            # exactly one of the pair satisfies C(j)
            assert satisfies_condition(sigma, j) != satisfies_condition(other, j)
            if satisfies_condition(sigma, j):
                assert st(other) == st(sigma) + 1


@pytest.mark.parametrize("n", range(1, 6))
def test_normalized_means_all_conditions(n):
    for sigma in enumerate_dumont(n):
        assert is_normalized_dumont(sigma) == all(satisfies_condition(sigma, j) for j in range(1, n))
