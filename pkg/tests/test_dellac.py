from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from genocchi.dellac import (
    DellacConfig,
    band_ok,
    c0,
    c1,
    enumerate_dellac,
    graph_to_dot,
    heights,
    htilde,
    inv,
    is_connected,
    is_switchable,
    is_valid_col,
    l_even,
    label,
    particular_dots,
    poincare,
    r_odd,
    refined_stats,
    render,
    row_of_label,
    swapped_col,
    switch,
    switching_graph,
)
from genocchi.qpolys import ONE_PLUS_Q, QPoly, cbar
from genocchi.sequences import normalized_h


def by_columns(n: int) -> set[tuple[int, ...]]:
    """DC(n) built column by column: pick two free rows inside each column's band."""
    out = set()

    def rec(j, col):
        if j > n:
            out.add(tuple(col))
            return
        free = [i for i in range(j, j + n + 1) if col[i - 1] == 0]
        for a, b in combinations(free, 2):
            col[a - 1] = col[b - 1] = j
            rec(j + 1, col)
            col[a - 1] = col[b - 1] = 0

    rec(1, [0] * (2 * n))
    return {c for c in out if 0 not in c}


def test_label_examples():
    assert label(1, 3) == 4
    assert label(4, 3) == 1
    assert label(6, 3) == 5
    with pytest.raises(ValueError):
        label(7, 3)
    with pytest.raises(ValueError):
        label(0, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_label_roundtrip(n):
    labels = [label(i, n) for i in range(1, 2 * n + 1)]
    assert sorted(labels) == sorted(set(range(1, 2 * n + 3)) - {2, 2 * n + 1})
    assert all(row_of_label(label(i, n), n) == i for i in range(1, 2 * n + 1))
    with pytest.raises(ValueError):
        row_of_label(2, n)


def test_small_enumerations():
    assert [C.col for C in enumerate_dellac(1)] == [(1, 1)]
    assert [C.col for C in enumerate_dellac(2)] == [(1, 1, 2, 2), (1, 2, 1, 2)]
    assert sum(1 for _ in enumerate_dellac(3)) == 7
    with pytest.raises(ValueError):
        list(enumerate_dellac(0))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_column_construction(n):
    cols = [C.col for C in enumerate_dellac(n)]
    assert cols == sorted(cols)
    assert len(cols) == len(set(cols))
    assert set(cols) == by_columns(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerated_configs_are_valid(n):
    count = 0
    for C in enumerate_dellac(n):
        count += 1
        assert all(band_ok(i, j, n) for i, j in enumerate(C.col, 1))
        assert all(C.col.count(j) == 2 for j in range(1, n + 1))
    assert count == normalized_h(n)


def test_invalid_configs_rejected():
    assert is_valid_col((1, 2, 1, 2), 2)
    assert not is_valid_col((1, 2, 1), 2)
    with pytest.raises(ValueError):
        DellacConfig(2, (2, 1, 1, 2))  # row 1 outside the band of column 2
    with pytest.raises(ValueError):
        DellacConfig(2, (1, 1, 1, 2))
    with pytest.raises(ValueError):
        DellacConfig.parse("1,1,2")
    assert DellacConfig.parse("1, 2, 1, 2") == c1(2)


@pytest.mark.parametrize("n", range(1, 6))
def test_first_columns_contain_leading_even_dots(n):
    for C in enumerate_dellac(n):
        for j in range(1, n + 1):
            rows = {i for i, c in enumerate(C.col, 1) if c <= j}
            assert set(range(1, j + 1)) <= rows
            assert {i for i in rows if i > n} <= set(range(n + 1, n + j + 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_column_parity_rule(n):
    for C in enumerate_dellac(n):
        for i1, i2 in C.column_rows():
            e1, e2 = label(i1, n), label(i2, n)
            assert (e1 > e2) == (i1 <= n < i2) == (e1 % 2 != e2 % 2)


def test_distinguished_configs():
    assert c0(2).col == (1, 1, 2, 2)
    assert c1(2).col == (1, 2, 1, 2)
    assert inv(DellacConfig(2, (1, 2, 1, 2))) == 1
    for n in range(1, 8):
        assert inv(c0(n)) == 0
        assert inv(c1(n)) == comb(n, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_inv_bounds_attained_once(n):
    values = [(inv(C), C) for C in enumerate_dellac(n)]
    assert all(0 <= v <= comb(n, 2) for v, _ in values)
    assert [C for v, C in values if v == 0] == [c0(n)]
    assert [C for v, C in values if v == comb(n, 2)] == [c1(n)]


def test_refined_stats_examples():
    C = c1(3)
    assert refined_stats(C, 2).l == 1  # dot 6
    assert refined_stats(C, 5).r == 1  # dot 3
    assert refined_stats(C, 4).r == 2  # dot 1
    assert refined_stats(C, 3).l == 2  # dot 8
    s = refined_stats(C, 2)
    assert s.r_odd is None and s.l_even is not None
    s = refined_stats(C, 5)
    assert s.l_even is None and s.r_odd is not None
    for n in range(1, 5):
        for i in range(1, 2 * n + 1):
            s = refined_stats(c0(n), i)
            assert (s.l, s.r) == (0, 0)
            assert (s.l_even or 0, s.r_odd or 0) == (0, 0)
    with pytest.raises(ValueError):
        refined_stats(C, 7)


@pytest.mark.parametrize("n", range(1, 6))
def test_refined_stats_sum_to_inv(n):
    for C in enumerate_dellac(n):
        ls = [refined_stats(C, i).l for i in range(1, 2 * n + 1)]
        rs = [refined_stats(C, i).r for i in range(1, 2 * n + 1)]
        assert sum(ls) == sum(rs) == inv(C)
        split = sum(l_even(C, i) for i in range(1, n + 1)) + sum(
            refined_stats(C, i).r for i in range(n + 1, 2 * n + 1)
        )
        assert split == inv(C)
        for i in range(1, n + 1):
            assert l_even(C, i) == refined_stats(C, i).l_even
        for i in range(n + 1, 2 * n + 1):
            assert r_odd(C, i) == refined_stats(C, i).r_odd


def test_switchable_examples():
    # equal columns are always switchable; c1(2) has col = 2 > 1 in row 2
    assert is_switchable(c0(2), 1)
    assert not is_switchable(c1(2), 1)
    for n in range(1, 5):
        for C in enumerate_dellac(n):
            assert is_switchable(C, n)
    with pytest.raises(ValueError):
        is_switchable(c0(2), 4)
    with pytest.raises(ValueError):
        switch(c1(2), 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_switch_facts(n):
    for C in enumerate_dellac(n):
        for i in range(1, 2 * n):
            raw = swapped_col(C, i)
            # criterion agrees with the brute-force band check
            assert is_switchable(C, i) == is_valid_col(raw, n)
            inversion = C.col[i] < C.col[i - 1]
            if inversion:
                assert is_switchable(C, i)
            if not is_switchable(C, i):
                continue
            D = switch(C, i)
            assert switch(D, i) == C
            assert abs(inv(D) - inv(C)) <= 1
            if inversion:
                assert inv(D) == inv(C) - 1
            if C.col[i - 1] == C.col[i]:
                assert D == C


def test_switching_graph_small():
    g1 = switching_graph(1)
    assert list(g1) == [c0(1)] and g1[c0(1)] == set()
    g3 = switching_graph(3)
    assert len(g3) == 7 and is_connected(g3)
    assert all(C not in g3[C] for C in g3)
    assert all(C in g3[D] for C in g3 for D in g3[C])


@pytest.mark.parametrize("n", range(1, 6))
def test_switching_graph_connected(n):
    g = switching_graph(n)
    assert len(g) == normalized_h(n)
    assert is_connected(g)


def test_disconnected_graph_detected():
    assert not is_connected({1: set(), 2: set()})
    assert is_connected({})


def test_graph_to_dot():
    text = graph_to_dot(switching_graph(2))
    assert text.startswith("graph switching {")
    assert '"1,1,2,2" -- "1,2,1,2";' in text


def test_htilde_and_poincare():
    assert htilde(2) == ONE_PLUS_Q
    assert htilde(0) == QPoly((1,))
    for n in range(1, 7):
        h = htilde(n)
        assert h.eval(1) == normalized_h(n)
        assert h == cbar(n + 1)
        # poincare is htilde reversed with q -> q^2
        top = comb(n, 2)
        expected = QPoly()
        for k, c in enumerate(h.coeffs):
            expected = expected + QPoly.monomial(2 * (top - k), c)
        assert poincare(n) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_particular_dots_and_heights(n):
    for C in enumerate_dellac(n):
        p, qq = particular_dots(C)
        assert sorted(p) == list(range(1, n + 1))
        assert sorted(qq) == list(range(1, n + 1))
        h = heights(C)
        assert h[0] == 0 and h[-1] == 0
        assert all(v >= 0 and v % 2 == 0 for v in h)


def test_render():
    text = render(c1(2))
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].split("|")[0].strip() == "3"  # top row, label e_4 = 3
    assert text.count("*") == 4
