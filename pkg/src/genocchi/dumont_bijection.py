"""The bijection phi: DC(n) -> D'_{n+1}, its left inverse varphi, and tau_C.

phi(C) is the inverse of the word

    2, upper(1), lower(1), upper(2), lower(2), ..., upper(n), lower(n), 2n+1

where upper(j)/lower(j) are the labels of the upper/lower dot of column j.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from genocchi.dellac import DellacConfig, label, refined_stats, row_of_label
from genocchi.permutations import Perm, is_dumont, is_normalized_dumont, transposition_compose

# flip to True to re-check every phi output against the normalized Dumont predicate
DEBUG = False


def phi_inverse_word(C: DellacConfig) -> list[int]:
    n = C.n
    word = [2]
    for i1, i2 in C.column_rows():
        word += [label(i2, n), label(i1, n)]
    word.append(2 * n + 1)
    return word


def phi(C: DellacConfig) -> Perm:
    sigma = Perm(tuple(phi_inverse_word(C))).inverse()
    if DEBUG and not is_normalized_dumont(sigma):
        raise AssertionError(f"phi({C}) = {sigma} is not normalized Dumont")
    return sigma


def y_value(k: int) -> int:
    """The sequence 3, 2, 5, 4, ..., 2n+1, 2n."""
    return k + 2 if k % 2 else k


def y_index(v: int) -> int:
    return v - 2 if v % 2 else v


def tau(C: DellacConfig) -> Perm:
    """tau_C(i) = i + l_C(e_i) - r_C(e_i)."""
    images = []
    for i in range(1, 2 * C.n + 1):
        s = refined_stats(C, i)
        images.append(i + s.l - s.r)
    return Perm(tuple(images))


def tau_from_phi(C: DellacConfig) -> Perm:
    """tau_C read off phi(C): phi(C)(e_i) = y_{tau_C(i)}."""
    sigma = phi(C)
    return Perm(tuple(y_index(sigma(label(i, C.n))) for i in range(1, 2 * C.n + 1)))


def phi_via_tau(C: DellacConfig) -> Perm:
    """phi computed from the refined inversion statistics alone."""
    n = C.n
    t = tau(C)
    images = [0] * (2 * n + 2)
    images[1] = 1
    images[2 * n] = 2 * n + 2
    for i in range(1, 2 * n + 1):
        images[label(i, n) - 1] = y_value(t(i))
    return Perm(tuple(images))


def varphi(sigma: Perm) -> DellacConfig:
    """Column j receives the dots labelled sigma^-1(2j) and sigma^-1(2j+1)."""
    if len(sigma) < 4 or not is_dumont(sigma):
        raise ValueError(f"{sigma} is not a Dumont permutation of order >= 4")
    n = len(sigma) // 2 - 1
    inv = sigma.inverse()
    col = [0] * (2 * n)
    for j in range(1, n + 1):
        for v in (2 * j, 2 * j + 1):
            col[row_of_label(inv(v), n) - 1] = j
    return DellacConfig(n, tuple(col))


def orbit_canonical(sigma: Perm) -> Perm:
    """The unique normalized Dumont permutation in the orbit of sigma."""
    return phi(varphi(sigma))


def orbit(sigma: Perm) -> Iterator[Perm]:
    """All (2^n) images of sigma under left multiplication by products of
    (2,3), (4,5), ..., (2n, 2n+1)."""
    if not is_dumont(sigma):
        raise ValueError(f"{sigma} is not a Dumont permutation")
    n = len(sigma) // 2 - 1
    for bits in product((0, 1), repeat=n):
        member = sigma
        for j, b in enumerate(bits, 1):
            if b:
                member = transposition_compose(member, 2 * j, 2 * j + 1, "left")
        yield member
